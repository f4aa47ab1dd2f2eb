#include "doctest.h"

#include "gamma1/scalar.hpp"

#include <limits>
#include <random>

using namespace gamma1;

TEST_CASE("rational arithmetic stays exact across the int64 boundary") {
    Rational big(std::numeric_limits<std::int64_t>::max());
    Rational sq = big * big;
    CHECK(sq / big == big);
    CHECK((sq - sq).is_zero());
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational(2, 3).pow(-3) == Rational(27, 8));
    CHECK(Rational(-3, 2) < Rational(1, 7));
}

TEST_CASE("rational field axioms on random small values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-50, 50);
    auto rnd = [&] {
        long d = dist(rng);
        return Rational(dist(rng), d == 0 ? 1 : d);
    };
    for (int i = 0; i < 500; ++i) {
        Rational a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("cyclotomic polynomials") {
    auto as_ints = [](int m) {
        std::vector<long> out;
        for (const auto& c : cyclotomic_polynomial(m)) out.push_back(c.to_int64());
        return out;
    };
    CHECK(as_ints(1) == std::vector<long>{-1, 1});
    CHECK(as_ints(2) == std::vector<long>{1, 1});
    CHECK(as_ints(4) == std::vector<long>{1, 0, 1});
    CHECK(as_ints(6) == std::vector<long>{1, -1, 1});
    CHECK(as_ints(12) == std::vector<long>{1, 0, -1, 0, 1});
    CHECK(euler_phi(10) == 4);
}

TEST_CASE("roots of unity multiply by adding exponents") {
    for (int m : {1, 2, 4, 6, 10}) {
        for (long a = -7; a <= 7; ++a)
            for (long b = -7; b <= 7; ++b)
                CHECK(Cyclo::zeta_pow(m, a) * Cyclo::zeta_pow(m, b) == Cyclo::zeta_pow(m, a + b));
        // sum of all m-th roots of unity vanishes for m > 1
        Cyclo s;
        for (long k = 0; k < m; ++k) s += Cyclo::zeta_pow(m, k);
        CHECK(s == Cyclo(Rational(m == 1 ? 1 : 0)));
    }
    CHECK(Cyclo::zeta_pow(2, 1) == Cyclo(Rational(-1)));
}

TEST_CASE("cyclotomic inverse") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-5, 5);
    for (int m : {3, 4, 5, 12}) {
        for (int i = 0; i < 30; ++i) {
            Cyclo::Coeffs c;
            for (int k = 0; k < euler_phi(m); ++k) c.push_back(Rational(dist(rng)));
            Cyclo x(m, c);
            if (x.is_zero()) continue;
            CHECK(x * x.inverse() == Cyclo(Rational(1)));
        }
    }
}

TEST_CASE("scalar ring operations and q-specialization") {
    Scalar q = Scalar::q();
    Scalar one(1);
    Scalar f = (one - q).pow(2);
    CHECK(f.str() == "1 - 2*q + q^2");
    CHECK(f.specialize_q(Rational(3)) == Scalar(4));
    Scalar Q = Scalar::v_pow(-1) - Scalar::v_pow(1);
    CHECK(Q.str() == "v^-1 - v");
    CHECK_THROWS(Q.specialize_q(Rational(3)));
    CHECK(Q.reduce_v(Rational(4)) == Scalar(Rational(-3, 4)).shift(1));
    CHECK(Scalar::v_pow(3).inverse() == Scalar::v_pow(-3));
    CHECK_THROWS(Q.inverse());
}

TEST_CASE("scalar canonical strings round-trip") {
    std::vector<Scalar> samples = {
        Scalar(),
        Scalar(Rational(-7, 3)),
        (Scalar(1) - Scalar::q()).pow(3),
        Scalar::v_pow(-1) - Scalar::v_pow(1),
        Scalar(Cyclo::zeta_pow(4, 1)) * Scalar::v_pow(3) + Scalar(Rational(1, 2)),
        Scalar(Cyclo::zeta_pow(6, 2) * Cyclo(Rational(-5, 2))) * Scalar::q().pow(-2),
    };
    for (const Scalar& s : samples) {
        int m = s.modulus();
        CHECK(Scalar::parse(s.str(), m) == s);
    }
    CHECK(Scalar::parse("(1-q)^2") == (Scalar(1) - Scalar::q()).pow(2));
    CHECK_THROWS(Scalar::parse("1 + x"));
}
