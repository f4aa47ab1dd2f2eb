#pragma once

#include "gamma1/levi.hpp"
#include "gamma1/scalar.hpp"
#include "gamma1/weyl.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gamma1 {

// Nonempty subset of {1..d}, stored as a bitmask over 0-based indices.
struct CriticalSet {
    int d = 0;
    std::uint32_t mask = 0;

    static CriticalSet from_indices(int d, const std::vector<int>& zero_based);
    int size() const;
    bool contains(int i) const { return (mask >> i) & 1U; }
    bool subset_of(const CriticalSet& o) const { return (mask & ~o.mask) == 0; }
    int max_index() const;
    std::vector<int> indices() const;  // 0-based, increasing
    std::string str() const;           // 1-based, e.g. "{1,3}"

    friend bool operator==(const CriticalSet&, const CriticalSet&) = default;
    friend auto operator<=>(const CriticalSet&, const CriticalSet&) = default;
};

// Sublattice of Z^d in Hermite normal form (rows, echelon, positive pivots).
struct CocharLattice {
    int d = 0;
    std::vector<std::vector<long>> basis;
    friend bool operator==(const CocharLattice&, const CocharLattice&) = default;
};

std::vector<std::vector<long>> hermite_normal_form(std::vector<std::vector<long>> rows);
// Nonzero invariant factors of the row span.
std::vector<long> smith_invariants(std::vector<std::vector<long>> rows);

// Everything below some element of tops, via the subword property on one
// reduced word of each top. Sorted.
std::vector<ExtAffElem> bruhat_closure(const AffineWeyl& W, const std::vector<ExtAffElem>& tops);

// Adm(mu_0) for mu_0 = (1, 0, ..., 0): the Bruhat closure of {t_{e_j}},
// checked against the cycle classification. Sorted.
std::vector<ExtAffElem> adm_set(int d);
// t_{e_m} (m_k ... m_1) for m = m_k > ... > m_1, in binary-counter order of
// the support. Sorted.
std::vector<ExtAffElem> cycle_classification(int d);
// Elements with lambda = e_j satisfying the minuscule conditions. Sorted.
std::vector<ExtAffElem> perm_set(int d);
bool is_permissible(const ExtAffElem& w);

// The admissible element with critical set S.
ExtAffElem element_of_subset(const CriticalSet& S);
CriticalSet critical_indices(const ExtAffElem& w);
int codim(const ExtAffElem& w);
// (y <= x, S(x) subset of S(y))
std::pair<bool, bool> bruhat_vs_S(const ExtAffElem& x, const ExtAffElem& y);

// The block's B_M-dominant element of W mu_0 is e_{min block}.
int dominant_index_of_block(const LeviDatum& L, int block);
// Adm^G(O_nu) = {w in Adm(mu_0) : S(w) in O_nu}, checked against Adm^M(nu)
// computed inside the Levi. nu is given by its 0-based index, which must
// be the smallest element of its block. Sorted.
std::vector<ExtAffElem> levi_adm(const LeviDatum& L, int nu_index);
std::vector<ExtAffElem> levi_adm_G_side(const LeviDatum& L, int block);
std::vector<ExtAffElem> levi_adm_M_side(const LeviDatum& L, int block);

// L_w = span{w(nu) - nu : nu in {0, e_1, ..., e_d}}, checked to be
// sum_{j in S(w)} Z e_j with torsion-free quotient.
CocharLattice lattice_Lw(const ExtAffElem& w);

struct Stratum {
    CriticalSet S;
    ExtAffElem w;
    int codim = 0;
};

struct StrataPoset {
    std::vector<Stratum> strata;                // binary-counter order of S
    std::vector<std::pair<int, int>> covers;   // (i, j): stratum j is a codim-one stratum in the closure of i
};

StrataPoset strata_poset(int d);

struct Numerology {
    long rank = 0;
    Scalar ss_trace;
};

// rank of the degree-i piece and the full alternating trace
// sum_i (-1)^i binom(|S|-1, i) q^i; the trace is checked against
// (1-q)^{|S|-1} and against the Kottwitz function at w_S.
Numerology nearby_cycle_numerology(const CriticalSet& S, int i, const Scalar& q);

}  // namespace gamma1
