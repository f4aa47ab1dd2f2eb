#include "gamma1/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace gamma1 {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly poly_sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Poly q(a.size() - b.size() + 1);
    Rational lead_inv = b.back().inverse();
    for (std::size_t k = a.size() - 1;; --k) {
        Rational c = a[k] * lead_inv;
        q[k - (b.size() - 1)] = c;
        if (!c.is_zero())
            for (std::size_t j = 0; j < b.size(); ++j) a[k - (b.size() - 1) + j] -= c * b[j];
        if (k == b.size() - 1) break;
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly compute_cyclotomic(int m) {
    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    Poly num(static_cast<std::size_t>(m) + 1);
    num[0] = Rational(-1);
    num[static_cast<std::size_t>(m)] = Rational(1);
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        auto [q, r] = poly_divmod(num, cyclotomic_polynomial(d));
        if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
        num = q;
    }
    return num;
}

void reduce_mod(Poly& p, int m) {
    const Poly& phi = cyclotomic_polynomial(m);
    if (p.size() < phi.size()) return;
    p = poly_divmod(p, phi).second;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
    static std::mutex mu;
    static std::map<int, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    Poly phi = compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(phi)).first->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

Cyclo::Cyclo(Rational r, int m) : m_(m) {
    if (m < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
    if (!r.is_zero()) c_.push_back(std::move(r));
}

Cyclo::Cyclo(int m, Coeffs coeffs) : m_(m), c_(std::move(coeffs)) {
    if (m < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
    normalize();
}

void Cyclo::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.size() > static_cast<std::size_t>(euler_phi(m_))) {
        Poly p(c_.begin(), c_.end());
        reduce_mod(p, m_);
        c_.assign(p.begin(), p.end());
    }
}

Cyclo Cyclo::zeta_pow(int m, long k) {
    long e = ((k % m) + m) % m;
    Coeffs c(static_cast<std::size_t>(e) + 1);
    c[static_cast<std::size_t>(e)] = Rational(1);
    return Cyclo(m, std::move(c));
}

Rational Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return c_.empty() ? Rational() : c_[0];
}

int Cyclo::joint_modulus(const Cyclo& a, const Cyclo& b) {
    if (a.m_ == b.m_) return a.m_;
    if (b.is_rational()) return a.m_;
    if (a.is_rational()) return b.m_;
    throw std::invalid_argument("cyclotomic context mismatch: modulus " + std::to_string(a.m_) +
                                " vs " + std::to_string(b.m_));
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    m_ = joint_modulus(*this, o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    return *this;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    Cyclo r = a;
    r += b;
    return r;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    int m = Cyclo::joint_modulus(a, b);
    if (a.c_.empty() || b.c_.empty()) return Cyclo(Rational(), m);
    if (a.c_.size() == 1 || b.c_.size() == 1) {
        const Cyclo& s = a.c_.size() == 1 ? a : b;
        const Cyclo& o = a.c_.size() == 1 ? b : a;
        Cyclo r = o;
        r.m_ = m;
        for (auto& x : r.c_) x *= s.c_[0];
        return r;
    }
    Cyclo::Coeffs c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Cyclo(m, std::move(c));
}

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero cyclotomic element");
    if (is_rational()) return Cyclo(c_[0].inverse(), m_);
    // Extended Euclid: find s with s*a = 1 mod Phi_m.
    Poly r0 = cyclotomic_polynomial(m_), r1(c_.begin(), c_.end());
    Poly s0, s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw std::logic_error("cyclotomic element not invertible");
    Rational inv = r0[0].inverse();
    for (auto& x : s0) x *= inv;
    return Cyclo(m_, Coeffs(s0.begin(), s0.end()));
}

Cyclo Cyclo::pow(long e) const {
    Cyclo base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Cyclo acc(Rational(1), m_);
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.is_rational() && b.is_rational()) return a.c_ == b.c_;
    return a.m_ == b.m_ && a.c_ == b.c_;
}

bool operator<(const Cyclo& a, const Cyclo& b) {
    if (!(a.is_rational() && b.is_rational()) && a.m_ != b.m_) return a.m_ < b.m_;
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
}

std::string Cyclo::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
        std::string term;
        if (mono.empty()) term = c.str();
        else if (c.is_one()) term = mono;
        else if (c == Rational(-1)) term = "-" + mono;
        else term = c.str() + "*" + mono;
        if (out.empty()) out = term;
        else if (term[0] == '-') out += " - " + term.substr(1);
        else out += " + " + term;
    }
    return out;
}

}  // namespace gamma1
