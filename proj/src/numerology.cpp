#include "gamma1/admissible.hpp"
#include "gamma1/hecke.hpp"

#include <stdexcept>

namespace gamma1 {

namespace {

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

}  // namespace

Numerology nearby_cycle_numerology(const CriticalSet& S, int i, const Scalar& q) {
    if (S.size() == 0) throw std::invalid_argument("nearby_cycle_numerology: empty critical set");
    if (i < 0) throw std::invalid_argument("nearby_cycle_numerology: negative degree");
    long n = S.size() - 1;
    Numerology out;
    out.rank = binomial(n, i);
    // each degree-j piece is a sum of Tate twists (-j)
    for (long j = 0; j <= n; ++j) out.ss_trace += Scalar((j % 2 ? -1 : 1) * binomial(n, j)) * q.pow(j);
    if (out.ss_trace != (Scalar(1) - q).pow(n))
        throw std::logic_error("nearby_cycle_numerology: alternating sum differs from (1-q)^(|S|-1)");
    Scalar k = kottwitz_mu0(S.d).coeff(element_of_subset(S));
    if (substitute_q(k, q) != out.ss_trace)
        throw std::logic_error("nearby_cycle_numerology: trace differs from the Kottwitz function");
    return out;
}

}  // namespace gamma1
