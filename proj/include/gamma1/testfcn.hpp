#pragma once

#include "gamma1/depthzero.hpp"
#include "gamma1/hecke.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gamma1 {

// Normalization of Haar measure used to read a function as a Hecke operator:
// vol(I_r) = 1 or vol(I_r^+) = 1. Converting I -> I+ multiplies values by
// [I_r : I_r^+]^-1 = (q - 1)^-d.
enum class Measure { I, Iplus };
std::string to_string(Measure m);

// Function on T(k_r) x W~ supported on T(k_r) x Adm(mu_0)^-1, stored densely
// per Weyl element u with t indexed by TorusLogs. q = p^r is substituted, so
// values are exact elements of Q(zeta_{p-1}).
class TestFunction {
public:
    TestFunction(int p, int r, int d, Measure measure, std::optional<DepthZeroChar> chi = std::nullopt);

    int p() const { return T_.p(); }
    int r() const { return T_.r(); }
    int d() const { return T_.d(); }
    Rational q() const;
    Measure measure() const { return measure_; }
    const std::optional<DepthZeroChar>& chi() const { return chi_; }
    const TorusLogs& torus() const { return T_; }
    const std::map<ExtAffElem, std::vector<Cyclo>>& values() const { return values_; }

    Cyclo at(const std::vector<long>& t, const ExtAffElem& u) const;
    // For chi-typed functions a nonzero value at (t, u) with delta(u^-1, chi) = 0
    // is rejected: such a function cannot be (I, chi)-equivariant there.
    void set(const std::vector<long>& t, const ExtAffElem& u, const Cyclo& value);
    void set_row(const ExtAffElem& u, std::vector<Cyclo> row);

    TestFunction to_measure(Measure target) const;
    TestFunction scaled(const Cyclo& c) const;
    // Both operands must carry the same measure; the result forgets chi.
    TestFunction& operator+=(const TestFunction& o);

    bool all_rational() const;
    std::size_t nonzero_count() const;

    // Mismatched measures throw instead of comparing unequal.
    friend bool operator==(const TestFunction& a, const TestFunction& b);
    friend bool operator!=(const TestFunction& a, const TestFunction& b) { return !(a == b); }

private:
    void check_same_shape(const TestFunction& o) const;
    std::vector<Cyclo>& row(const ExtAffElem& u);

    TorusLogs T_;
    Measure measure_;
    std::optional<DepthZeroChar> chi_;
    std::map<ExtAffElem, std::vector<Cyclo>> values_;
};

// k_{mu*}(u) = k_{mu_0}(u^-1), keyed by u, symbolic in v.
HeckeElem kottwitz_mu_star(int d);

// phi_{r,chi}(t u) = delta1(u^-1, chi) chi_r^-1(t) k_{mu*}(u) at q = p^r, I-measure.
TestFunction phi_chi(int p, int r, const DepthZeroChar& chi);
// [I_r : I_r^+]^-1 sum over all chi of phi_{r,chi}, I+-measure; values are
// asserted rational.
TestFunction phi_one_sum(int p, int r, int d);
// Closed form: (-1)^d (p-1)^{d-|S|} (1-q)^{|S|-d-1} if N_r(t)_j = 1 for all
// j outside S(u^-1), else 0. I+-measure.
TestFunction phi_one_explicit(int p, int r, int d);
// e_{chi_r} * f for f in I+-measure:
// (e_xi f)(t, u) = xi^-1(t) |T|^-1 sum_y xi(y) f(y, u).
TestFunction project_component(const TestFunction& f, const DepthZeroChar& chi);
// The same convolution summed term by term over T(k_r) x T(k_r).
TestFunction project_component_brute(const TestFunction& f, const DepthZeroChar& chi);

struct PsiImage {
    CharStabilizer stabilizer;
    HeckeElem image;      // Psi(phi_{r,chi}) modulo v^2 = p^r
    HeckeElem expected;   // v^{d - |O^triv|} k^M_{mu^1*}, computed inside H(M)
    HeckeElem symbolic;   // Psi applied to the v-symbolic coefficients
    HeckeElem expected_symbolic;
    bool central;         // is_central on the M side, modulo v^2 = p^r
};
// Transports phi_{r,chi} along Psi and checks both equalities and
// centrality; throws std::invalid_argument when O^triv is empty and
// std::logic_error when a check fails.
PsiImage psi_image_of_phi(int p, int r, const DepthZeroChar& chi);
// Values of phi on the basis [I n_u I], i.e. at t = 1, keyed by u.
std::map<ExtAffElem, Scalar> phi_basis_coeffs(const TestFunction& phi);

struct LanglandsParamData {
    DepthZeroChar chi;
    std::vector<Scalar> eta;  // Satake parameters, invertible (monomials in v)
    int p;
    int r;
};

// Scalar by which phi_{r,chi} acts, v = p^{1/2}, normal form modulo v^2 = p:
// v^{r(d-1)} sum_{j in O^triv} eta_j^{-r}.
Scalar spectral_scalar(const LanglandsParamData& param);
// Second route: Bernstein coefficients of the M-side image with v_r = p^{r/2}
// rewritten as v^r, then base change and evaluation at eta.
SymLaurent spectral_center_coeffs(int p, int r, const DepthZeroChar& chi);
Scalar spectral_scalar_via_center(const SymLaurent& coeffs, const LanglandsParamData& param);
Scalar spectral_scalar_via_center(const LanglandsParamData& param);

// Replace v by v^k.
Scalar substitute_v_power(const Scalar& s, int k);

struct LssFactor {
    std::vector<Scalar> eigenvalues;   // of Frobenius on V^{I_p}, eta_j^-1 for trivial chi_j
    std::vector<Scalar> denominator;   // det(1 - A u), coefficients of u^0..u^n
    std::vector<Scalar> det_series;    // det(1 - A u)^-1 to order R
    std::vector<Scalar> exp_series;    // exp(sum_{k<=R} Tr(A^k) u^k / k) to order R
    std::vector<Scalar> traces;        // Tr(A^k), k = 0..R
};
// Throws std::logic_error if the two series differ.
LssFactor lss_factor(const LanglandsParamData& param, int R);

// Tr^ss(Frob^r | R Psi_chi at x) = phi_{r,chi}(t^-1 w^-1) for a lift t of t_x,
// t_x given by discrete logs over F_p (coordinates in S(w) are ignored).
// Several lifts are evaluated and must agree with each other and with
// delta1(w, chi) chi(t_x) (1-q)^{|S(w)|-1}.
Cyclo trace_frobenius_eval(const TestFunction& phi, const ExtAffElem& w, const std::vector<long>& t_x);
Cyclo trace_frobenius_eval(int p, int r, const ExtAffElem& w, const std::vector<long>& t_x, const DepthZeroChar& chi);

}  // namespace gamma1
