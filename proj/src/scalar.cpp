#include "gamma1/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <stdexcept>

namespace gamma1 {

Scalar::Scalar(Cyclo c) {
    if (!c.is_zero()) terms_.emplace_back(0, std::move(c));
}

Scalar Scalar::v_pow(int k) { return monomial(Cyclo(Rational(1)), k); }

Scalar Scalar::monomial(Cyclo c, int k) {
    Scalar s;
    if (!c.is_zero()) s.terms_.emplace_back(k, std::move(c));
    return s;
}

bool Scalar::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

Cyclo Scalar::coeff(int k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == k) return it->second;
    return Cyclo();
}

Cyclo Scalar::constant_term() const { return coeff(0); }

bool Scalar::all_exponents_even() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 == 0; });
}

int Scalar::min_exponent() const {
    if (terms_.empty()) throw std::domain_error("min_exponent of zero scalar");
    return terms_.front().first;
}

int Scalar::max_exponent() const {
    if (terms_.empty()) throw std::domain_error("max_exponent of zero scalar");
    return terms_.back().first;
}

int Scalar::modulus() const {
    int m = 1;
    for (const auto& [e, c] : terms_)
        if (!c.is_rational()) m = c.modulus();
    return m;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Scalar Scalar::shift(int k) const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
}

Scalar Scalar::inverse() const {
    if (terms_.size() != 1) throw std::domain_error("Scalar: only monomials in v are invertible, got " + str());
    return monomial(terms_[0].second.inverse(), -terms_[0].first);
}

Scalar Scalar::pow(long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Scalar acc(1);
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Cyclo c = a->second + b->second;
            if (!c.is_zero()) out.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r += b;
    return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar r = a;
    r -= b;
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return Scalar();
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const Scalar& mono = a.terms_.size() == 1 ? a : b;
        const Scalar& other = a.terms_.size() == 1 ? b : a;
        Scalar r;
        r.terms_.reserve(other.terms_.size());
        for (const auto& [e, c] : other.terms_) {
            Cyclo x = c * mono.terms_[0].second;
            if (!x.is_zero()) r.terms_.emplace_back(e + mono.terms_[0].first, std::move(x));
        }
        return r;
    }
    std::map<int, Cyclo> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    Scalar r;
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
    return r;
}

Scalar Scalar::specialize_q(const Rational& q0) const {
    if (!all_exponents_even()) throw std::domain_error("specialize_q: odd power of v in " + str());
    Cyclo acc;
    for (const auto& [e, c] : terms_) acc += c * Cyclo(q0.pow(e / 2));
    return Scalar(acc);
}

Scalar Scalar::reduce_v(const Rational& q0) const {
    Cyclo even, odd;
    for (const auto& [e, c] : terms_) {
        // e = 2k + r with r in {0, 1}
        int r = ((e % 2) + 2) % 2;
        int k = (e - r) / 2;
        (r == 0 ? even : odd) += c * Cyclo(q0.pow(k));
    }
    return Scalar(even) + monomial(odd, 1);
}

namespace {

std::string coeff_text(const Cyclo& c) {
    if (c.is_rational()) return c.rational_value().str();
    return "(" + c.str() + ")";
}

}  // namespace

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    bool in_q = all_exponents_even();
    std::string out;
    for (const auto& [e, c] : terms_) {
        int k = in_q ? e / 2 : e;
        std::string var = k == 0 ? "" : std::string(in_q ? "q" : "v") + (k == 1 ? "" : "^" + std::to_string(k));
        std::string term;
        if (var.empty()) term = coeff_text(c);
        else if (c == Cyclo(Rational(1))) term = var;
        else if (c == Cyclo(Rational(-1))) term = "-" + var;
        else term = coeff_text(c) + "*" + var;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view s, int m) : s_(s), m_(m) {}

    Scalar parse_all() {
        Scalar r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("Scalar::parse: " + why + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    long signed_int() {
        bool neg = eat('-');
        std::string d = digits();
        long v = std::stol(d);
        return neg ? -v : v;
    }

    Scalar expr() {
        Scalar acc = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Scalar term() {
        Scalar acc = power();
        while (eat('*')) acc *= power();
        return acc;
    }

    Scalar power() {
        skip();
        char head = pos_ < s_.size() ? s_[pos_] : '\0';
        Scalar base = atom();
        if (!eat('^')) return base;
        long e = signed_int();
        if (head == 'z') return Scalar(Cyclo::zeta_pow(m_, e));
        return base.pow(e);
    }

    Scalar atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            if (eat('/')) num += "/" + digits();
            return Scalar(Rational::parse(num));
        }
        if (c == '(') {
            ++pos_;
            Scalar r = expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        ++pos_;
        if (c == 'q') return Scalar::v_pow(2);
        if (c == 'v') return Scalar::v_pow(1);
        if (c == 'z') return Scalar(Cyclo::zeta_pow(m_, 1));
        --pos_;
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    int m_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, int modulus) { return Parser(text, modulus).parse_all(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace gamma1
