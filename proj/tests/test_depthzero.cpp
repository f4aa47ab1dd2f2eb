#include "doctest.h"

#include "gamma1/admissible.hpp"
#include "gamma1/depthzero.hpp"

#include <algorithm>
#include <chrono>

using namespace gamma1;

namespace {

DepthZeroChar chi(int p, std::vector<long> e) { return DepthZeroChar(p, std::move(e)); }

ExtAffElem w_of(int d, std::vector<int> S) { return element_of_subset(CriticalSet::from_indices(d, S)); }

// delta1 straight from the definition: chi_j trivial on every critical index.
int delta1_oracle(const ExtAffElem& w, const DepthZeroChar& c) {
    for (int j : critical_indices(w).indices())
        if (c.exps()[static_cast<std::size_t>(j)] != 0) return 0;
    return 1;
}

}  // namespace

TEST_CASE("torus logs and the norm map") {
    TorusLogs T(3, 2, 2);
    CHECK(T.modulus() == 8);
    CHECK(T.order() == 64);
    for (std::size_t i = 0; i < T.order(); ++i) CHECK(T.index(T.logs(i)) == i);
    CHECK(T.norm({5, 8}) == std::vector<long>{1, 0});
    CHECK(T.index({-1, 0}) == 7);
    CHECK_THROWS_AS(TorusLogs(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(TorusLogs(3, 0, 1), std::invalid_argument);
}

TEST_CASE("characters") {
    DepthZeroChar c = chi(5, {1, 3});
    CHECK(c.value({1, 0}) == Cyclo::zeta_pow(4, 1));
    CHECK(c.value({1, 1}) == Cyclo(Rational(1)));
    CHECK(chi(3, {1}).value({1}) == Cyclo(Rational(-1)));
    CHECK(chi(5, {-1, 6}).exps() == std::vector<long>{3, 2});
    CHECK(DepthZeroChar::all(5, 2).size() == 16);
    // chi_r = chi o N_r is multiplicative on T(k_r)
    TorusLogs T(5, 2, 2);
    for (std::size_t a = 0; a < T.order(); a += 7)
        for (std::size_t b = 0; b < T.order(); b += 11) {
            std::vector<long> la = T.logs(a), lb = T.logs(b), s(2);
            for (int j = 0; j < 2; ++j) s[static_cast<std::size_t>(j)] = la[static_cast<std::size_t>(j)] + lb[static_cast<std::size_t>(j)];
            CHECK(c.value_r(T, s) == c.value_r(T, la) * c.value_r(T, lb));
        }
    // conjugation moves exponent j to position wbar(j)
    ExtAffElem w = ExtAffElem::make({0, 0, 0}, {1, 2, 0});
    CHECK(chi(7, {1, 2, 3}).conjugate(w).exps() == std::vector<long>{3, 1, 2});
}

TEST_CASE("stabilizer examples") {
    CharStabilizer a = stabilizer(DepthZeroChar::trivial(3, 3));
    CHECK(a.levi == LeviDatum::full(3));
    CHECK(a.W_chi.size() == 6);
    CHECK(a.trivial_block == std::vector<int>{0, 1, 2});
    CHECK(a.mu1_vec() == std::vector<int>{1, 0, 0});

    CharStabilizer b = stabilizer(chi(3, {0, 0, 1}));
    CHECK(b.levi.blocks() == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(b.trivial_block == std::vector<int>{0, 1});
    CHECK(b.mu1_vec() == std::vector<int>{1, 0, 0});
    CHECK(b.mu1_star_vec() == std::vector<int>{0, -1, 0});
    CHECK(b.W_chi.size() == 2);

    CharStabilizer c = stabilizer(chi(3, {1, 1}));
    CHECK(c.trivial_block.empty());
    CHECK_FALSE(c.mu1.has_value());
    CHECK_THROWS_AS(c.mu1_vec(), std::logic_error);
}

TEST_CASE("W_chi equals its reflection subgroup") {
    for (int p : {3, 5, 7})
        for (int d = 1; d <= 4; ++d)
            for (const auto& c : DepthZeroChar::all(p, d)) {
                CharStabilizer st = stabilizer(c);
                long expect = 1;
                for (const auto& blk : st.levi.blocks())
                    for (long k = 2; k <= static_cast<long>(blk.size()); ++k) expect *= k;
                CHECK(static_cast<long>(st.W_chi.size()) == expect);
            }
}

TEST_CASE("delta examples") {
    for (const ExtAffElem& w : adm_set(3)) {
        CHECK(delta(w, DepthZeroChar::trivial(3, 3)) == 1);
        CHECK(delta1(w, DepthZeroChar::trivial(3, 3)) == 1);
    }
    DepthZeroChar c = chi(3, {0, 0, 1});
    CHECK(delta1(w_of(3, {0, 1}), c) == 1);
    CHECK(delta1(w_of(3, {2}), c) == 0);
    CHECK(delta(w_of(3, {2}), c) == 1);
    CHECK(delta(w_of(3, {1, 2}), c) == 0);
    CHECK(delta(tau(2), chi(3, {1, 1})) == 1);
    CHECK(delta1(tau(2), chi(3, {1, 1})) == 0);
    CHECK_THROWS(delta(ExtAffElem::translation({2, -1}), DepthZeroChar::trivial(3, 2)));
}

TEST_CASE("delta routes agree and delta = 1 forces w to fix chi") {
    for (int p : {3, 5})
        for (int d = 1; d <= 3; ++d)
            for (const ExtAffElem& w : adm_set(d))
                for (const auto& c : DepthZeroChar::all(p, d)) {
                    DeltaRoutes r = delta_routes(w, c);
                    CHECK(r.constant_on_S == r.S_in_block);
                    CHECK(r.S_in_block == r.trivial_on_T1S);
                    int dl = delta(w, c);
                    if (dl == 1) CHECK(c.conjugate(w) == c);
                    CHECK(delta1(w, c) == delta1_oracle(w, c));
                    if (delta1(w, c) == 1) CHECK(dl == 1);
                }
}

TEST_CASE("idempotents of a two-element torus") {
    TorusGroupAlgebra A(3, 1, 1);
    TorusGroupAlgebra::Elem e = A.idempotent(chi(3, {1}));
    CHECK(e[0] == Scalar(Rational(1, 2)));
    CHECK(e[1] == Scalar(Rational(-1, 2)));
    TorusGroupAlgebra::Elem et = A.idempotent(DepthZeroChar::trivial(3, 1));
    CHECK(A.multiply(et, et) == et);
    CHECK(A.multiply(e, et) == A.zero());
    TorusGroupAlgebra::Elem sum = e;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += et[i];
    CHECK(sum == A.identity());
}

TEST_CASE("idempotents: orthogonality, completeness, conjugation") {
    for (int p : {3, 5})
        for (int r : {1, 2})
            for (int d = 1; d <= 3; ++d) {
                long order = 1;
                for (int j = 0; j < d; ++j) order *= (r == 1 ? p - 1 : p * p - 1);
                IdempotentReport rep = check_idempotents(p, r, d, order <= 100);
                INFO("p=" << p << " r=" << r << " d=" << d);
                CHECK(rep.orthogonal);
                CHECK(rep.complete);
                CHECK(rep.conjugation);
                CHECK(rep.checked > 0);
            }
}

TEST_CASE("psi transport") {
    // trivial chi: the identity
    CharStabilizer triv = stabilizer(DepthZeroChar::trivial(3, 2));
    std::map<ExtAffElem, Scalar> h;
    for (const ExtAffElem& w : adm_set(2)) h.emplace(w, Scalar::q());
    HeckeElem img = psi_transport(triv, h);
    for (const auto& [w, c] : h) CHECK(img.coeff(w) == c);
    CHECK(psi_inverse(triv, img) == h);

    // length-zero elements of W~_chi scale by v^l(w)
    CharStabilizer st = stabilizer(chi(3, {0, 1}));
    ExtAffElem t1 = ExtAffElem::translation({1, 0}), t2 = ExtAffElem::translation({-1, 2});
    std::map<ExtAffElem, Scalar> g{{t1, Scalar(1)}, {t2, Scalar(Rational(3))}};
    HeckeElem gi = psi_transport(st, g);
    CHECK(gi.coeff(t1) == Scalar::v_pow(1));
    CHECK(gi.coeff(t2) == Scalar(Rational(3)) * Scalar::v_pow(gl(2).length(t2)));
    CHECK(psi_inverse(st, gi) == g);

    std::map<ExtAffElem, Scalar> bad{{tau(2), Scalar(1)}};
    CHECK_THROWS_AS(psi_transport(st, bad), std::invalid_argument);
}

TEST_CASE("l - l_M is constant on the support of phi_chi") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& c : DepthZeroChar::all(5, d)) {
            CharStabilizer st = stabilizer(c);
            if (st.trivial_block.empty()) continue;
            AffineWeyl WM(st.levi);
            int n = static_cast<int>(st.trivial_block.size());
            for (const ExtAffElem& w : adm_set(d)) {
                if (delta1(w, c) == 0) continue;
                ExtAffElem u = inverse(w);
                REQUIRE(WM.contains(u));
                CHECK(gl(d).length(u) - WM.length(u) == d - n);
            }
        }
}
