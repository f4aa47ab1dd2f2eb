#pragma once

#include "gamma1/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace gamma1 {

// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Rational>& cyclotomic_polynomial(int m);
int euler_phi(int m);

// Element of Q[z]/Phi_m(z), with z a fixed primitive m-th root of unity.
// Coefficients are kept reduced (degree < phi(m)) and trimmed of trailing
// zeros, so a rational value has at most one coefficient regardless of m.
class Cyclo {
public:
    using Coeffs = boost::container::small_vector<Rational, 4>;

    Cyclo() = default;
    Cyclo(Rational r, int m = 1);  // NOLINT(google-explicit-constructor)
    Cyclo(int m, Coeffs coeffs);

    static Cyclo zeta_pow(int m, long k);

    int modulus() const { return m_; }
    const Coeffs& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.size() <= 1; }
    Rational rational_value() const;  // throws unless is_rational()

    Cyclo operator-() const;
    Cyclo inverse() const;
    Cyclo pow(long e) const;
    friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator-(const Cyclo& a, const Cyclo& b);
    friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    // Rational values compare by value whatever their modulus.
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }
    friend bool operator<(const Cyclo& a, const Cyclo& b);

    // Polynomial in "z", constant term first, e.g. "1/2 - z^2".
    std::string str() const;

private:
    void normalize();
    static int joint_modulus(const Cyclo& a, const Cyclo& b);

    int m_ = 1;
    Coeffs c_;
};

}  // namespace gamma1
