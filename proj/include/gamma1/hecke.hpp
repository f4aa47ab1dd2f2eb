#pragma once

#include "gamma1/levi.hpp"
#include "gamma1/scalar.hpp"
#include "gamma1/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gamma1 {

// Finitely supported combination of T_w, w in the extended affine Weyl
// group of a Levi M (M = G for a single block). Zero coefficients are pruned.
class HeckeElem {
public:
    using Map = std::map<ExtAffElem, Scalar>;

    HeckeElem() = default;
    explicit HeckeElem(LeviDatum levi) : levi_(std::move(levi)) {}
    HeckeElem(LeviDatum levi, const ExtAffElem& w, Scalar c = Scalar(1));

    const LeviDatum& levi() const { return levi_; }
    const Map& coeffs() const { return coeffs_; }
    Scalar coeff(const ExtAffElem& w) const;
    std::vector<ExtAffElem> support() const;
    bool is_zero() const { return coeffs_.empty(); }

    void add(const ExtAffElem& w, const Scalar& c);
    HeckeElem operator-() const;
    HeckeElem& operator+=(const HeckeElem& o);
    HeckeElem& operator-=(const HeckeElem& o);
    friend HeckeElem operator+(HeckeElem a, const HeckeElem& b) { return a += b; }
    friend HeckeElem operator-(HeckeElem a, const HeckeElem& b) { return a -= b; }
    friend HeckeElem operator*(const Scalar& c, const HeckeElem& h);

    // Coefficients reduced modulo v^2 = q0.
    HeckeElem reduce_v(const Rational& q0) const;

    friend bool operator==(const HeckeElem& a, const HeckeElem& b) {
        return a.levi_ == b.levi_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const HeckeElem& a, const HeckeElem& b) { return !(a == b); }

    std::string str() const;

private:
    LeviDatum levi_;
    Map coeffs_;
};

// Laurent polynomial in x_1..x_d invariant under the product of symmetric
// groups on the blocks of `group`.
class SymLaurent {
public:
    using Map = std::map<std::vector<int>, Scalar>;

    SymLaurent() = default;
    SymLaurent(LeviDatum group, Map terms);

    // m_mu: sum of x^lambda over the orbit of mu.
    static SymLaurent monomial_symmetric(const LeviDatum& group, const std::vector<int>& mu);
    static SymLaurent constant(const LeviDatum& group, const Scalar& c);

    const LeviDatum& group() const { return group_; }
    const Map& terms() const { return terms_; }

    friend SymLaurent operator+(const SymLaurent& a, const SymLaurent& b);
    friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b);
    friend SymLaurent operator*(const Scalar& c, const SymLaurent& p);
    friend bool operator==(const SymLaurent& a, const SymLaurent& b) {
        return a.group_ == b.group_ && a.terms_ == b.terms_;
    }
    SymLaurent reduce_v(const Rational& q0) const;
    std::string str() const;

private:
    void check_invariant() const;
    LeviDatum group_;
    Map terms_;
};

// Distinct images of mu under the product of symmetric groups on the blocks.
std::vector<std::vector<int>> levi_orbit(const LeviDatum& L, const std::vector<int>& mu);

// Iwahori-Hecke algebra of M over Q(zeta)[v, v^-1] with q = v^2:
// T_s^2 = (q - 1) T_s + q, T_omega T_w = T_{omega w}.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(int d);
    explicit HeckeAlgebra(LeviDatum levi);

    const AffineWeyl& weyl() const { return W_; }
    const LeviDatum& levi() const { return W_.levi(); }

    HeckeElem one() const;
    HeckeElem T(const ExtAffElem& w) const;
    HeckeElem T_normalized(const ExtAffElem& w) const;      // v^{-l(w)} T_w
    HeckeElem T_inverse(const ExtAffElem& w) const;         // T_w^{-1}
    HeckeElem T_normalized_inverse(const ExtAffElem& w) const;

    HeckeElem multiply(const HeckeElem& a, const HeckeElem& b) const;
    HeckeElem left_mul_simple(int s, const HeckeElem& h) const;
    HeckeElem right_mul_simple(const HeckeElem& h, int s) const;

    // Chamber C = c C_0, c a permutation in W_M (0-based one-line), C_0 the
    // chamber containing the base alcove.
    bool is_chamber_dominant(const std::vector<int>& lambda, const std::vector<int>& c) const;
    // T~_{lambda_1} T~_{lambda_2}^{-1} with lambda_2 = N g_C for the least N
    // making lambda + lambda_2 C-dominant; the value is checked against N + 1.
    HeckeElem theta(const std::vector<int>& lambda, const std::vector<int>& c) const;
    HeckeElem theta_with_shift(const std::vector<int>& lambda, const std::vector<int>& c, int extra) const;
    // Alcove walk along `word` followed by `omega`; the expression must
    // multiply out to t_lambda but need not be reduced.
    HeckeElem theta_walk(const std::vector<int>& lambda, const std::vector<int>& c, const std::vector<int>& word,
                         const ExtAffElem& omega) const;
    // Alcove walk along the greedy reduced word of t_lambda.
    HeckeElem theta_fast(const std::vector<int>& lambda, const std::vector<int>& c) const;
    std::vector<int> walk_signs(const std::vector<int>& c, const std::vector<int>& word) const;

    // z_mu = sum over the W_M-orbit of Theta_lambda, mu B_M-dominant and
    // minuscule in each block.
    HeckeElem z_mu(const std::vector<int>& mu) const;
    HeckeElem z_mu_chamber(const std::vector<int>& mu, const std::vector<int>& c) const;
    HeckeElem k_mu(const std::vector<int>& mu) const;  // v^{<2 rho_M, mu>} z_mu

    // Commutes with every T_s and every length-zero generator. With q0, the
    // commutators are compared modulo v^2 = q0.
    bool is_central(const HeckeElem& h, std::optional<Rational> q0 = std::nullopt) const;

    // Coefficients c_lambda with h = sum c_lambda Theta_lambda, by peeling
    // off maximal-length translations. Throws if a maximal term is not a
    // translation, which means h is not central.
    SymLaurent bernstein_coeffs(const HeckeElem& h, std::optional<Rational> q0 = std::nullopt) const;

private:
    void check(const HeckeElem& h) const;
    void left_mul_simple_into(int s, const ExtAffElem& y, const Scalar& c, HeckeElem::Map& out) const;
    void right_mul_simple_into(const ExtAffElem& y, int s, const Scalar& c, HeckeElem::Map& out) const;
    HeckeElem right_mul_normalized(const HeckeElem& h, int s, int eps) const;
    HeckeElem right_mul_omega(const HeckeElem& h, const ExtAffElem& omega) const;
    std::vector<int> chamber_generator(const std::vector<int>& c) const;

    AffineWeyl W_;
};

// Substitute x_j -> eta_j. Entries of eta must be nonzero, and invertible
// (monomials in v) where a negative power occurs.
Scalar eval_central(const SymLaurent& p, const std::vector<Scalar>& eta);

// b_r: each orbit sum m_mu goes to m_{r mu}.
SymLaurent base_change(const SymLaurent& p, int r);

// <2 rho, e_j> = d + 1 - 2j for GL_d.
int two_rho_pairing(const std::vector<int>& lambda);

// Coefficients a_k with s = sum a_k Q^k, Q = v^-1 - v, or nullopt if s is
// not a polynomial in Q.
std::optional<std::vector<Cyclo>> as_polynomial_in_Q(const Scalar& s);

// Substitute v^2 -> q in a scalar with only even powers of v.
Scalar substitute_q(const Scalar& s, const Scalar& q);

// k_{mu_0}(w) for GL_d from the Hecke algebra; cached per rank.
const HeckeElem& kottwitz_mu0(int d);

}  // namespace gamma1
