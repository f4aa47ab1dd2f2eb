#include "gamma1/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace gamma1 {

namespace {

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits64(i128 x) {
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

mpz_class mpz_from_i128(i128 x) {
    bool neg = x < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1
                              : static_cast<unsigned __int128>(x);
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class lo(static_cast<unsigned long>(u & 0xFFFFFFFFFFFFFFFFULL));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_mpq(q); }

Rational Rational::from_i128(i128 n, i128 d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (n == 0) d = 1;
    Rational r;
    if (fits64(n) && fits64(d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
    } else {
        r.big_ = mpq_class(mpz_from_i128(n), mpz_from_i128(d));
    }
    return r;
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        r.num_ = q.get_num().get_si();
        r.den_ = q.get_den().get_si();
    } else {
        r.big_ = std::move(q);
    }
    return r;
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    return from_mpq(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::int64_t Rational::to_int64() const {
    if (big_ || den_ != 1) throw std::overflow_error("Rational: not a machine integer: " + str());
    return num_;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return from_mpq(-*big_);
    return from_i128(-static_cast<i128>(num_), den_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    if (big_) return from_mpq(1 / *big_);
    return from_i128(den_, num_);
}

Rational Rational::pow(long e) const {
    Rational base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= base;
        n >>= 1;
        if (n) base *= base;
    }
    return acc;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return Rational::from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
        return Rational::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_mpq(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        // Cross-reduce first so the i128 product of reduced parts cannot overflow.
        i128 g1 = gcd128(a.num_, b.den_);
        i128 g2 = gcd128(b.num_, a.den_);
        i128 n = (static_cast<i128>(a.num_) / g1) * (static_cast<i128>(b.num_) / g2);
        i128 d = (static_cast<i128>(a.den_) / g2) * (static_cast<i128>(b.den_) / g1);
        return Rational::from_i128(n, d);
    }
    return Rational::from_mpq(a.to_mpq() * b.to_mpq());
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (a.big_.has_value() != b.big_.has_value()) return false;
    if (a.big_) return *a.big_ == *b.big_;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_)
        return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gamma1
