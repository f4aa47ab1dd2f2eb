#pragma once

#include "gamma1/admissible.hpp"
#include "gamma1/hecke.hpp"
#include "gamma1/levi.hpp"
#include "gamma1/scalar.hpp"
#include "gamma1/weyl.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gamma1 {

bool is_prime(long n);

// Discrete logarithms of T(k_r) = (k_r^x)^d with respect to a fixed generator
// g of k_r^x, flattened in mixed radix with coordinate 0 least significant.
class TorusLogs {
public:
    TorusLogs(int p, int r, int d);

    int p() const { return p_; }
    int r() const { return r_; }
    int d() const { return d_; }
    long modulus() const { return n_; }  // p^r - 1
    std::size_t order() const { return order_; }
    std::vector<long> logs(std::size_t index) const;
    std::size_t index(const std::vector<long>& logs) const;  // reduces mod p^r - 1
    // N_r(g^a) = g_0^(a mod p-1) with g_0 = g^((p^r-1)/(p-1)).
    std::vector<long> norm(const std::vector<long>& logs) const;

private:
    int p_, r_, d_;
    long n_;
    std::size_t order_;
};

// Character of T(F_p) given by exponents: chi_j(g_0^a) = zeta^(e_j a),
// zeta a primitive (p-1)-th root of unity.
class DepthZeroChar {
public:
    DepthZeroChar(int p, std::vector<long> exps);
    static DepthZeroChar trivial(int p, int d);
    // Every character of T(F_p), in mixed-radix order of the exponents.
    static std::vector<DepthZeroChar> all(int p, int d);

    int p() const { return p_; }
    int d() const { return static_cast<int>(exps_.size()); }
    int root_order() const { return p_ - 1; }
    const std::vector<long>& exps() const { return exps_; }
    bool is_trivial_at(int j) const { return exps_[static_cast<std::size_t>(j)] == 0; }

    // chi on logs over F_p, and chi_r = chi o N_r on logs over k_r.
    Cyclo value(const std::vector<long>& logs) const;
    Cyclo value_r(const TorusLogs& T, const std::vector<long>& logs) const;
    // Exponent of zeta in chi(t).
    long phase(const std::vector<long>& logs) const;
    // (^w chi)(t) = chi(w^-1 t w); on exponents this is wbar.
    DepthZeroChar conjugate(const ExtAffElem& w) const;

    std::string str() const;  // "0,0,1"

    friend bool operator==(const DepthZeroChar& a, const DepthZeroChar& b) {
        return a.p_ == b.p_ && a.exps_ == b.exps_;
    }
    friend bool operator!=(const DepthZeroChar& a, const DepthZeroChar& b) { return !(a == b); }
    friend bool operator<(const DepthZeroChar& a, const DepthZeroChar& b) {
        return a.p_ != b.p_ ? a.p_ < b.p_ : a.exps_ < b.exps_;
    }

private:
    int p_;
    std::vector<long> exps_;
};

struct CharStabilizer {
    LeviDatum levi;                  // blocks are the level sets of chi
    std::vector<int> trivial_block;  // O^triv, 0-based, possibly empty
    std::optional<int> mu1;          // index j with mu^1 = e_j (min of O^triv)
    std::optional<int> mu1_star;     // index j with mu^1* = -e_j (max of O^triv)
    std::vector<std::vector<int>> W_chi;  // elements as 0-based one-line permutations, sorted

    std::vector<int> mu1_vec() const;
    std::vector<int> mu1_star_vec() const;
};

// Asserts W_chi = W_chi^o (generated by reflections in Phi_chi) and that W_chi fixes chi.
CharStabilizer stabilizer(const DepthZeroChar& chi);

struct DeltaRoutes {
    bool constant_on_S;     // (iii)
    bool S_in_block;        // (iv)
    bool trivial_on_T1S;    // (v), by enumerating T^1_S(F_p)
};
DeltaRoutes delta_routes(const ExtAffElem& w, const DepthZeroChar& chi);
// 1 iff (iii)-(v) hold; the routes must agree, and ^w chi = chi is asserted when 1.
int delta(const ExtAffElem& w, const DepthZeroChar& chi);
// 1 iff chi_j is trivial for all j in S(w); checked against triviality on T_S(F_p).
int delta1(const ExtAffElem& w, const DepthZeroChar& chi);

// Group algebra of T(k_r) with coefficients in Q(zeta_{p-1}), elements as
// dense value vectors indexed by TorusLogs. Convolution is
// (a * b)(t) = sum_s a(s) b(s^-1 t) for the counting measure.
class TorusGroupAlgebra {
public:
    using Elem = std::vector<Scalar>;

    TorusGroupAlgebra(int p, int r, int d);
    const TorusLogs& logs() const { return T_; }

    Elem zero() const;
    Elem identity() const;
    Elem multiply(const Elem& a, const Elem& b) const;
    // e_xi(t) = |T|^-1 xi(t^-1) for xi = chi o N_r.
    Elem idempotent(const DepthZeroChar& chi) const;
    // t -> a(w^-1 t w)
    Elem conjugate(const Elem& a, const ExtAffElem& w) const;

private:
    TorusLogs T_;
};

// Orthogonality and completeness of {e_{chi o N_r}} as identities in the
// group algebra. Pulled-back functions are multiplied on T(F_p) with the
// factor |ker N_r|; with brute = true the full convolution on T(k_r) is
// used as well.
struct IdempotentReport {
    bool orthogonal = true;
    bool complete = true;  // sum_chi e_chi equals the projection onto ker N_r-invariants
    bool conjugation = true;
    long checked = 0;
};
IdempotentReport check_idempotents(int p, int r, int d, bool brute);

// Psi: [I n_w I] -> v^{l(w) - l_M(w)} T^M_w, for w in the extended affine
// Weyl group of M_chi.
HeckeElem psi_transport(const CharStabilizer& st, const std::map<ExtAffElem, Scalar>& h);
std::map<ExtAffElem, Scalar> psi_inverse(const CharStabilizer& st, const HeckeElem& h);

}  // namespace gamma1
