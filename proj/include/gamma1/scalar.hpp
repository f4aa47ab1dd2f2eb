#pragma once

#include "gamma1/cyclotomic.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gamma1 {

// Element of Q(zeta_m)[v, v^-1], q = v^2. Terms are sorted by v-exponent
// with no zero coefficients.
class Scalar {
public:
    using Term = std::pair<int, Cyclo>;

    Scalar() = default;
    Scalar(long n) : Scalar(Rational(n)) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational r) : Scalar(Cyclo(std::move(r))) {}  // NOLINT(google-explicit-constructor)
    Scalar(Cyclo c);  // NOLINT(google-explicit-constructor)

    static Scalar v_pow(int k);
    static Scalar q() { return v_pow(2); }
    static Scalar monomial(Cyclo c, int k);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;             // only v^0 present (or zero)
    Cyclo constant_term() const;          // coefficient of v^0
    Cyclo coeff(int k) const;
    bool all_exponents_even() const;
    int min_exponent() const;             // requires nonzero
    int max_exponent() const;             // requires nonzero
    int modulus() const;                  // largest nontrivial modulus, 1 if rational

    Scalar operator-() const;
    Scalar inverse() const;               // only for monomials c*v^k
    Scalar pow(long e) const;
    Scalar shift(int k) const;            // multiply by v^k

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.terms_ < b.terms_; }

    // v^2 -> q0; defined only when every exponent is even.
    Scalar specialize_q(const Rational& q0) const;
    // Normal form modulo v^2 = q0: exponents collapse to {0, 1}.
    Scalar reduce_v(const Rational& q0) const;

    // Canonical text: a Laurent polynomial in q if every exponent is even,
    // otherwise in v; cyclotomic coefficients are parenthesized polynomials in z.
    std::string str() const;
    static Scalar parse(std::string_view text, int modulus = 1);

private:
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace gamma1
