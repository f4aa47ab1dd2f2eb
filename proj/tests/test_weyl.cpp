#include "doctest.h"

#include "gamma1/weyl.hpp"
#include "oracle.hpp"

#include <random>

using namespace gamma1;

namespace {

ExtAffElem t(std::vector<int> lambda) { return ExtAffElem::translation(lambda); }

std::vector<int> e(int d, int j) {
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    v[static_cast<std::size_t>(j - 1)] = 1;
    return v;
}

}  // namespace

TEST_CASE("group law basics") {
    ExtAffElem id = ExtAffElem::identity(2);
    ExtAffElem tau2 = tau(2);
    CHECK(multiply(id, tau2) == tau2);
    CHECK(multiply(t(e(2, 1)), t(e(2, 2))) == t({1, 1}));
    CHECK(multiply(tau2, inverse(tau2)) == id);
    CHECK(tau2.lambda_vec() == std::vector<int>{0, 1});
    CHECK(tau2.perm_vec() == std::vector<int>{1, 0});
    CHECK(tau(1) == t({1}));
}

TEST_CASE("tau cycles the base vertices") {
    for (int d = 1; d <= 6; ++d) {
        ExtAffElem w = tau(d);
        for (int i = 1; i <= d; ++i) CHECK(act_on_vertex(w, i) == base_vertex(d, i - 1));
        // type 0 goes to type d-1 shifted by the central direction
        std::vector<int> v = act_on_vertex(w, 0);
        std::vector<int> expect = base_vertex(d, d - 1);
        for (int& x : expect) x += 1;
        CHECK(v == expect);
    }
    CHECK(act_on_vertex(t(e(2, 2)), 1) == std::vector<int>{-1, 1});
}

TEST_CASE("length examples") {
    for (int d = 1; d <= 6; ++d) {
        AffineWeyl W(d);
        CHECK(W.length(tau(d)) == 0);
        CHECK(W.length(t(e(d, d))) == d - 1);
        CHECK(W.length(t(std::vector<int>(static_cast<std::size_t>(d), 1))) == 0);
        CHECK(W.num_simple() == (d == 1 ? 0 : d));
        OmegaDecomp od = W.omega_decompose(t(e(d, d)));
        CHECK(od.omega == tau(d));
        CHECK(static_cast<int>(od.word.size()) == d - 1);
    }
}

TEST_CASE("hyperplane length equals word length on a BFS ball") {
    for (int d = 2; d <= 4; ++d) {
        AffineWeyl W(d);
        for (int k = -1; k <= 1; ++k) {
            ExtAffElem omega = ExtAffElem::identity(d);
            for (int i = 0; i < (k < 0 ? -k : k); ++i)
                omega = multiply(omega, k < 0 ? inverse(tau(d)) : tau(d));
            auto ball = oracle::coxeter_ball(W, 6, omega);
            for (const auto& [w, len] : ball) {
                REQUIRE(W.length(w) == len);
                OmegaDecomp od = W.reduced_word(w);
                CHECK(static_cast<int>(od.word.size()) == len);
                CHECK(W.compose(od.word, od.omega) == w);
                CHECK(od.omega == omega);
                CHECK(W.length(inverse(w)) == len);
            }
        }
    }
}

TEST_CASE("length is subadditive and group law is associative on random elements") {
    std::mt19937_64 rng(3);
    for (int d = 1; d <= 5; ++d) {
        AffineWeyl W(d);
        std::uniform_int_distribution<int> lam(-3, 3);
        auto rnd = [&] {
            std::vector<int> l(static_cast<std::size_t>(d)), p(static_cast<std::size_t>(d));
            for (int j = 0; j < d; ++j) {
                l[static_cast<std::size_t>(j)] = lam(rng);
                p[static_cast<std::size_t>(j)] = j;
            }
            std::shuffle(p.begin(), p.end(), rng);
            return ExtAffElem::make(l, p);
        };
        for (int i = 0; i < 200; ++i) {
            ExtAffElem a = rnd(), b = rnd(), c = rnd();
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            CHECK(W.length(multiply(a, b)) <= W.length(a) + W.length(b));
            CHECK(W.length(a) == W.length(inverse(a)));
            OmegaDecomp od = W.omega_decompose(a);
            CHECK(W.compose(od.word, od.omega) == a);
            CHECK(W.length(od.omega) == 0);
            CHECK(od.omega.lambda_sum() == a.lambda_sum());
        }
    }
}

TEST_CASE("Bruhat order examples") {
    AffineWeyl W(2);
    CHECK(W.bruhat_leq(tau(2), t(e(2, 1))));
    CHECK_FALSE(W.bruhat_leq(t(e(2, 1)), t(e(2, 2))));
    CHECK_FALSE(W.bruhat_leq(t(e(2, 2)), t(e(2, 1))));
    CHECK(W.bruhat_leq(tau(2), tau(2)));
    CHECK_FALSE(W.bruhat_leq(ExtAffElem::identity(2), t(e(2, 1))));  // different omega parts
}

TEST_CASE("Bruhat order agrees with the subword property") {
    for (int d = 2; d <= 3; ++d) {
        AffineWeyl W(d);
        for (int k = 0; k <= 1; ++k) {
            ExtAffElem omega = k ? tau(d) : ExtAffElem::identity(d);
            auto ball = oracle::coxeter_ball(W, d == 2 ? 5 : 4, omega);
            std::vector<ExtAffElem> elems;
            for (const auto& kv : ball) elems.push_back(kv.first);
            for (const ExtAffElem& y : elems) {
                OmegaDecomp od = W.reduced_word(y);
                for (const ExtAffElem& x : elems) {
                    bool leq = W.bruhat_leq(x, y);
                    REQUIRE(leq == oracle::subword_leq(W, x, od.word, od.omega));
                    if (leq) CHECK((W.length(x) < W.length(y) || x == y));
                }
            }
        }
    }
}

TEST_CASE("Bruhat order is a partial order on a ball") {
    AffineWeyl W(3);
    auto ball = oracle::coxeter_ball(W, 3, ExtAffElem::identity(3));
    std::vector<ExtAffElem> el;
    for (const auto& kv : ball) el.push_back(kv.first);
    for (const auto& x : el)
        for (const auto& y : el) {
            if (W.bruhat_leq(x, y) && W.bruhat_leq(y, x)) CHECK(x == y);
            if (!W.bruhat_leq(x, y)) continue;
            for (const auto& z : el)
                if (W.bruhat_leq(y, z)) CHECK(W.bruhat_leq(x, z));
        }
}

TEST_CASE("conjugation by tau permutes the simple reflections") {
    for (int d = 2; d <= 5; ++d) {
        AffineWeyl W(d);
        ExtAffElem tu = tau(d);
        std::vector<bool> hit(static_cast<std::size_t>(W.num_simple()), false);
        for (const auto& s : W.simple_reflections()) {
            ExtAffElem c = multiply(multiply(tu, s), inverse(tu));
            auto it = std::find(W.simple_reflections().begin(), W.simple_reflections().end(), c);
            REQUIRE(it != W.simple_reflections().end());
            hit[static_cast<std::size_t>(it - W.simple_reflections().begin())] = true;
        }
        for (bool h : hit) CHECK(h);
        // tau^{d-j} t_{e_d} tau^{-(d-j)} = t_{e_j}
        for (int j = 1; j <= d; ++j) {
            ExtAffElem c = t(e(d, d));
            for (int i = 0; i < d - j; ++i) c = multiply(multiply(tu, c), inverse(tu));
            CHECK(c == t(e(d, j)));
        }
    }
}

TEST_CASE("Levi groups: lengths are blockwise") {
    LeviDatum L(4, {{0, 2}, {1, 3}});
    AffineWeyl WM(L);
    AffineWeyl W2(2);
    // t_{e_1} in the block {1,3} behaves like t_{e_1} in GL_2
    CHECK(WM.length(t({1, 0, 0, 0})) == W2.length(t({1, 0})));
    CHECK(WM.length(t({1, -1, 0, 2})) == W2.length(t({1, 0})) + W2.length(t({-1, 2})));
    CHECK_FALSE(WM.contains(tau(4)));
    CHECK(WM.num_simple() == 4);
    CHECK(LeviDatum::all(4).size() == 15);
    CHECK(LeviDatum::all(5).size() == 52);
}

TEST_CASE("descent by wall side agrees with length comparison") {
    for (int d = 2; d <= 4; ++d) {
        const AffineWeyl& W = gl(d);
        auto ball = oracle::coxeter_ball(W, 4, tau(d));
        for (const auto& [w, len] : ball)
            for (int s = 0; s < W.num_simple(); ++s) {
                CHECK(W.is_left_descent(s, w) == (W.length(multiply(W.simple(s), w)) < len));
                CHECK(W.is_right_descent(w, s) == (W.length(multiply(w, W.simple(s))) < len));
            }
    }
}
