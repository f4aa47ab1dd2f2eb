#pragma once

#include "gamma1/levi.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gamma1 {

inline constexpr int kMaxRank = 8;

// t_lambda * wbar in X_*(T) x| S_d for GL_d. perm is 0-based one-line
// notation with wbar(e_j) = e_{perm[j]}. Entries past the rank stay zero so
// that the defaulted comparisons are canonical.
struct ExtAffElem {
    std::uint8_t d = 0;
    std::array<std::int32_t, kMaxRank> lambda{};
    std::array<std::uint8_t, kMaxRank> perm{};

    static ExtAffElem identity(int d);
    static ExtAffElem translation(const std::vector<int>& lambda);
    // perm given 0-based.
    static ExtAffElem make(const std::vector<int>& lambda, const std::vector<int>& perm);

    int rank() const { return d; }
    std::vector<int> lambda_vec() const;
    std::vector<int> perm_vec() const;
    int lambda_sum() const;
    bool is_translation() const;

    // (lambda, perm) with perm in 1-based cycle-free one-line form.
    std::string str() const;

    friend bool operator==(const ExtAffElem&, const ExtAffElem&) = default;
    friend auto operator<=>(const ExtAffElem&, const ExtAffElem&) = default;
};

struct ExtAffElemHash {
    std::size_t operator()(const ExtAffElem& w) const noexcept;
};

ExtAffElem multiply(const ExtAffElem& a, const ExtAffElem& b);
ExtAffElem inverse(const ExtAffElem& w);
// wbar applied to a vector: (wbar nu)_{perm[j]} = nu_j.
std::vector<int> permute(const ExtAffElem& w, const std::vector<int>& nu);
// Affine action x -> lambda + wbar x on integral points.
std::vector<int> act(const ExtAffElem& w, const std::vector<int>& x);
// Vertex omega-bar_i = -(1^i, 0^{d-i}), 0 <= i <= d.
std::vector<int> base_vertex(int d, int i);
// lambda + wbar(omega-bar_i).
std::vector<int> act_on_vertex(const ExtAffElem& w, int i);
// Permutation from a cycle (c_1 c_2 ... c_k), meaning c_1 -> c_2 -> ... -> c_k -> c_1, 0-based.
std::vector<int> cycle_to_perm(int d, const std::vector<int>& cycle);

// Affine hyperplane x_a - x_b = k.
struct Wall {
    int a, b, k;
};

struct OmegaDecomp {
    std::vector<int> word;  // indices into simple_reflections()
    ExtAffElem omega;
};

// Extended affine Weyl group of a semistandard Levi M of GL_d (M = G for a
// single block), relative to the M-antidominant base alcove whose closure
// contains the origin. Length and descents come from separating hyperplanes,
// never from a presentation.
//
// Simple reflections are listed block by block; for each block
// {o_1 < ... < o_n} with n >= 2 the affine wall x_{o_1} - x_{o_n} = -1 comes
// first, then x_{o_i} - x_{o_{i+1}} = 0. For M = G this is s_0, s_1, ..., s_{d-1}.
class AffineWeyl {
public:
    explicit AffineWeyl(int d);
    explicit AffineWeyl(LeviDatum levi);

    int rank() const { return levi_.rank(); }
    const LeviDatum& levi() const { return levi_; }
    bool contains(const ExtAffElem& w) const;

    int length(const ExtAffElem& w) const;
    const std::vector<ExtAffElem>& simple_reflections() const { return simple_; }
    const std::vector<Wall>& walls() const { return walls_; }
    int num_simple() const { return static_cast<int>(simple_.size()); }
    const ExtAffElem& simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }

    bool is_left_descent(int s, const ExtAffElem& w) const;
    bool is_right_descent(const ExtAffElem& w, int s) const;

    OmegaDecomp omega_decompose(const ExtAffElem& w) const;
    OmegaDecomp reduced_word(const ExtAffElem& w) const { return omega_decompose(w); }
    ExtAffElem omega_part(const ExtAffElem& w) const;
    ExtAffElem compose(const std::vector<int>& word, const ExtAffElem& omega) const;

    bool bruhat_leq(const ExtAffElem& x, const ExtAffElem& y) const;

    // The length-zero generator t_{e_{o_n}} (o_n o_{n-1} ... o_1) of block k.
    ExtAffElem tau(int block = 0) const;

    // Pairing <2 rho_M, lambda> for the B_M-positive roots.
    int two_rho_pairing(const std::vector<int>& lambda) const;

    // Side of the hyperplane x_a - x_b = k containing w(base alcove): +1 if
    // (x_a - x_b)(w b) > k at the barycenter b, else -1.
    int side(const ExtAffElem& w, const Wall& h) const;

private:
    void check_conventions() const;
    // floor of (x_a - x_b)(w b) for a, b in the same block.
    long root_floor(const ExtAffElem& w, int a, int b) const;
    // block size times (x_a - x_b)(w b), with ia = w^-1(a), ib = w^-1(b)
    long root_numerator(const ExtAffElem& w, int a, int b, int ia, int ib) const;

    LeviDatum levi_;
    std::vector<int> bary_num_;  // barycenter b_i = bary_num_[i] / block size
    std::vector<ExtAffElem> simple_;
    std::vector<Wall> walls_;
};

// tau for GL_d: t_{e_d} (d d-1 ... 1).
ExtAffElem tau(int d);

// Shared, lazily built instance for GL_d.
const AffineWeyl& gl(int d);

}  // namespace gamma1
