#pragma once

// Brute-force reference computations. Nothing here may call the routine it
// is used to check; each oracle works from definitions.

#include "gamma1/weyl.hpp"

#include <map>
#include <vector>

namespace oracle {

using gamma1::AffineWeyl;
using gamma1::ExtAffElem;

// Every element of W_aff * omega of Coxeter length <= L, by breadth-first
// search on words in the simple reflections; the value is the BFS depth.
std::map<ExtAffElem, int> coxeter_ball(const AffineWeyl& W, int L, const ExtAffElem& omega);

// x <= y by exhaustive search over subwords of the given word for y.
bool subword_leq(const AffineWeyl& W, const ExtAffElem& x, const std::vector<int>& word_y, const ExtAffElem& omega_y);

}  // namespace oracle

namespace oracle {

// Minuscule condition read off the vertices: lambda in {0,1}^d, |lambda| = 1,
// and omegabar_i(j) <= w(omegabar_i)(j) <= omegabar_i(j) + 1 for all i, j.
bool vertex_permissible(const ExtAffElem& w);

// All w in W~ with lambda in {0,1}^d, |lambda| = 1 that pass vertex_permissible.
std::vector<ExtAffElem> vertex_perm_set(int d);

// Invariant factors as ratios of gcds of k x k minors.
std::vector<long> minor_invariants(const std::vector<std::vector<long>>& rows);

}  // namespace oracle

#include "gamma1/scalar.hpp"

namespace oracle {

using gamma1::Scalar;
using HMap = std::map<ExtAffElem, Scalar>;

// Iwahori-Hecke algebra of GL_d from words: lengths are BFS depths, products
// are expanded generator by generator through T_s T_y = T_{sy} or
// (q - 1) T_y + q T_{sy}. Only elements within the BFS radius are handled.
class WordHecke {
public:
    WordHecke(int d, int radius);
    int length(const ExtAffElem& w) const;
    // w = s_{word[0]} ... s_{word[n-1]} tau^k
    std::vector<int> word(const ExtAffElem& w) const;
    HMap product(const HMap& a, const HMap& b) const;
    HMap inverse_T(const ExtAffElem& w) const;
    // v^{-l(l1)} T_{l1} v^{l(l2)} T_{l2}^{-1}, l2 = M c(0, 1, ..., d-1) with
    // M = 2 max|lambda| + 1.
    HMap theta(const std::vector<int>& lambda, const std::vector<int>& c) const;

private:
    ExtAffElem tau_pow(int k) const;
    HMap left_s(int s, const HMap& h) const;
    HMap right_s(const HMap& h, int s) const;
    int d_;
    AffineWeyl W_;
    std::map<ExtAffElem, int> ball_;
};

}  // namespace oracle
