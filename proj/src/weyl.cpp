#include "gamma1/weyl.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace gamma1 {

namespace {

void check_rank(int d) {
    if (d < 1 || d > kMaxRank)
        throw std::invalid_argument("rank must lie in 1.." + std::to_string(kMaxRank) + ", got " + std::to_string(d));
}

long floor_div(long a, long n) {
    long q = a / n;
    if ((a % n != 0) && ((a < 0) != (n < 0))) --q;
    return q;
}

}  // namespace

ExtAffElem ExtAffElem::identity(int d) {
    check_rank(d);
    ExtAffElem w;
    w.d = static_cast<std::uint8_t>(d);
    for (int j = 0; j < d; ++j) w.perm[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(j);
    return w;
}

ExtAffElem ExtAffElem::translation(const std::vector<int>& lambda) {
    ExtAffElem w = identity(static_cast<int>(lambda.size()));
    for (std::size_t j = 0; j < lambda.size(); ++j) w.lambda[j] = lambda[j];
    return w;
}

ExtAffElem ExtAffElem::make(const std::vector<int>& lambda, const std::vector<int>& perm) {
    if (lambda.size() != perm.size()) throw std::invalid_argument("ExtAffElem: lambda and perm lengths differ");
    ExtAffElem w = translation(lambda);
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t j = 0; j < perm.size(); ++j) {
        int p = perm[j];
        if (p < 0 || p >= static_cast<int>(perm.size()) || seen[static_cast<std::size_t>(p)])
            throw std::invalid_argument("ExtAffElem: perm is not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
        w.perm[j] = static_cast<std::uint8_t>(p);
    }
    return w;
}

std::vector<int> ExtAffElem::lambda_vec() const { return {lambda.begin(), lambda.begin() + d}; }

std::vector<int> ExtAffElem::perm_vec() const { return {perm.begin(), perm.begin() + d}; }

int ExtAffElem::lambda_sum() const {
    int s = 0;
    for (int j = 0; j < d; ++j) s += lambda[static_cast<std::size_t>(j)];
    return s;
}

bool ExtAffElem::is_translation() const {
    for (int j = 0; j < d; ++j)
        if (perm[static_cast<std::size_t>(j)] != j) return false;
    return true;
}

std::string ExtAffElem::str() const {
    std::ostringstream os;
    os << "t(";
    for (int j = 0; j < d; ++j) os << (j ? "," : "") << lambda[static_cast<std::size_t>(j)];
    os << ")[";
    for (int j = 0; j < d; ++j) os << (j ? " " : "") << perm[static_cast<std::size_t>(j)] + 1;
    os << "]";
    return os.str();
}

std::size_t ExtAffElemHash::operator()(const ExtAffElem& w) const noexcept {
    std::size_t h = w.d;
    for (int j = 0; j < w.d; ++j) {
        h = h * 1000003u ^ static_cast<std::size_t>(w.lambda[static_cast<std::size_t>(j)] + 4096);
        h = h * 31u + w.perm[static_cast<std::size_t>(j)];
    }
    return h;
}

ExtAffElem multiply(const ExtAffElem& a, const ExtAffElem& b) {
    if (a.d != b.d) throw std::invalid_argument("multiply: rank mismatch");
    ExtAffElem r;
    r.d = a.d;
    for (int j = 0; j < a.d; ++j) {
        auto uj = static_cast<std::size_t>(j);
        r.lambda[uj] += a.lambda[uj];
        r.lambda[a.perm[uj]] += b.lambda[uj];
        r.perm[uj] = a.perm[b.perm[uj]];
    }
    return r;
}

ExtAffElem inverse(const ExtAffElem& w) {
    // (lambda, w)^-1 = (-w^-1 lambda, w^-1)
    ExtAffElem r;
    r.d = w.d;
    for (int j = 0; j < w.d; ++j) {
        auto uj = static_cast<std::size_t>(j);
        r.perm[w.perm[uj]] = static_cast<std::uint8_t>(j);
        r.lambda[uj] = -w.lambda[w.perm[uj]];
    }
    return r;
}

std::vector<int> permute(const ExtAffElem& w, const std::vector<int>& nu) {
    if (nu.size() != w.d) throw std::invalid_argument("permute: rank mismatch");
    std::vector<int> r(nu.size());
    for (std::size_t j = 0; j < nu.size(); ++j) r[w.perm[j]] = nu[j];
    return r;
}

std::vector<int> act(const ExtAffElem& w, const std::vector<int>& x) {
    std::vector<int> r = permute(w, x);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += w.lambda[j];
    return r;
}

std::vector<int> base_vertex(int d, int i) {
    if (i < 0 || i > d) throw std::invalid_argument("base_vertex: type out of range");
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < i; ++j) v[static_cast<std::size_t>(j)] = -1;
    return v;
}

std::vector<int> act_on_vertex(const ExtAffElem& w, int i) { return act(w, base_vertex(w.d, i)); }

std::vector<int> cycle_to_perm(int d, const std::vector<int>& cycle) {
    std::vector<int> p(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) p[static_cast<std::size_t>(j)] = j;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        int from = cycle[k];
        int to = cycle[(k + 1) % cycle.size()];
        if (from < 0 || from >= d) throw std::invalid_argument("cycle entry out of range");
        p[static_cast<std::size_t>(from)] = to;
    }
    return p;
}

ExtAffElem tau(int d) {
    std::vector<int> lambda(static_cast<std::size_t>(d), 0);
    lambda[static_cast<std::size_t>(d - 1)] = 1;
    std::vector<int> cyc;
    for (int j = d - 1; j >= 0; --j) cyc.push_back(j);
    return ExtAffElem::make(lambda, cycle_to_perm(d, cyc));
}

AffineWeyl::AffineWeyl(int d) : AffineWeyl(LeviDatum::full(d)) {}

AffineWeyl::AffineWeyl(LeviDatum levi) : levi_(std::move(levi)) {
    int d = levi_.rank();
    check_rank(d);
    bary_num_.assign(static_cast<std::size_t>(d), 0);
    for (int i = 0; i < d; ++i) bary_num_[static_cast<std::size_t>(i)] = levi_.position(i) - levi_.block_size_of(i);
    for (const auto& blk : levi_.blocks()) {
        if (blk.size() < 2) continue;
        walls_.push_back({blk.front(), blk.back(), -1});
        for (std::size_t j = 0; j + 1 < blk.size(); ++j) walls_.push_back({blk[j], blk[j + 1], 0});
    }
    for (const Wall& h : walls_) {
        std::vector<int> lambda(static_cast<std::size_t>(d), 0);
        lambda[static_cast<std::size_t>(h.a)] = h.k;
        lambda[static_cast<std::size_t>(h.b)] = -h.k;
        std::vector<int> perm = cycle_to_perm(d, {h.a, h.b});
        simple_.push_back(ExtAffElem::make(lambda, perm));
    }
    check_conventions();
}

void AffineWeyl::check_conventions() const {
    for (std::size_t k = 0; k < levi_.blocks().size(); ++k) {
        const auto& blk = levi_.blocks()[k];
        ExtAffElem t = tau(static_cast<int>(k));
        if (length(t) != 0) throw std::logic_error("self-test: tau has positive length");
        // t_{e_{o_n}} = tau s_1 ... s_{n-1} with every prefix length-additive.
        ExtAffElem acc = t;
        std::size_t first_finite = 0;
        for (std::size_t i = 0; i < walls_.size(); ++i)
            if (walls_[i].a == blk.front() && walls_[i].k == -1) first_finite = i + 1;
        for (std::size_t j = 0; j + 1 < blk.size(); ++j) {
            acc = multiply(acc, simple_[first_finite + j]);
            if (length(acc) != static_cast<int>(j) + 1)
                throw std::logic_error("self-test: tau s_1 ... s_{n-1} is not reduced");
        }
        std::vector<int> e(static_cast<std::size_t>(rank()), 0);
        e[static_cast<std::size_t>(blk.back())] = 1;
        if (acc != ExtAffElem::translation(e)) throw std::logic_error("self-test: t_{e_n} != tau s_1 ... s_{n-1}");
    }
}

bool AffineWeyl::contains(const ExtAffElem& w) const {
    if (w.d != rank()) return false;
    for (int j = 0; j < w.d; ++j)
        if (!levi_.same_block(j, w.perm[static_cast<std::size_t>(j)])) return false;
    return true;
}

long AffineWeyl::root_floor(const ExtAffElem& w, int a, int b) const {
    // (x_a - x_b)(w b) = lambda_a - lambda_b + (bary[w^-1 a] - bary[w^-1 b]) / n
    long n = levi_.block_size_of(a);
    int ia = -1, ib = -1;
    for (int j = 0; j < w.d; ++j) {
        if (w.perm[static_cast<std::size_t>(j)] == a) ia = j;
        if (w.perm[static_cast<std::size_t>(j)] == b) ib = j;
    }
    return floor_div(root_numerator(w, a, b, ia, ib), n);
}

long AffineWeyl::root_numerator(const ExtAffElem& w, int a, int b, int ia, int ib) const {
    long n = levi_.block_size_of(a);
    return (static_cast<long>(w.lambda[static_cast<std::size_t>(a)]) - w.lambda[static_cast<std::size_t>(b)]) * n +
           bary_num_[static_cast<std::size_t>(ia)] - bary_num_[static_cast<std::size_t>(ib)];
}

int AffineWeyl::length(const ExtAffElem& w) const {
    if (!contains(w)) throw std::invalid_argument("length: element " + w.str() + " not in the group");
    // The base alcove has floor(x_a - x_b) = -1 for every positive root a < b.
    std::array<int, kMaxRank> inv{};
    for (int j = 0; j < w.d; ++j) inv[w.perm[static_cast<std::size_t>(j)]] = j;
    long len = 0;
    for (const auto& blk : levi_.blocks())
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j) {
                int a = blk[i], b = blk[j];
                long f = floor_div(root_numerator(w, a, b, inv[static_cast<std::size_t>(a)], inv[static_cast<std::size_t>(b)]),
                                   static_cast<long>(blk.size()));
                len += f + 1 >= 0 ? f + 1 : -(f + 1);
            }
    return static_cast<int>(len);
}

int AffineWeyl::side(const ExtAffElem& w, const Wall& h) const {
    return root_floor(w, h.a, h.b) >= h.k ? 1 : -1;
}

bool AffineWeyl::is_left_descent(int s, const ExtAffElem& w) const {
    // s w < w iff the wall of s separates the base alcove from w(base alcove)
    const Wall& h = walls_[static_cast<std::size_t>(s)];
    return side(w, h) != side(ExtAffElem::identity(rank()), h);
}

bool AffineWeyl::is_right_descent(const ExtAffElem& w, int s) const { return is_left_descent(s, inverse(w)); }

OmegaDecomp AffineWeyl::omega_decompose(const ExtAffElem& w) const {
    OmegaDecomp out;
    ExtAffElem rest = w;
    int len = length(rest);
    for (; len > 0; --len) {
        int s = 0;
        while (s < num_simple() && !is_left_descent(s, rest)) ++s;
        if (s == num_simple()) throw std::logic_error("omega_decompose: no descent for " + rest.str());
        out.word.push_back(s);
        rest = multiply(simple(s), rest);
    }
    out.omega = rest;
    return out;
}

ExtAffElem AffineWeyl::omega_part(const ExtAffElem& w) const { return omega_decompose(w).omega; }

ExtAffElem AffineWeyl::compose(const std::vector<int>& word, const ExtAffElem& omega) const {
    ExtAffElem acc = ExtAffElem::identity(rank());
    for (int s : word) acc = multiply(acc, simple(s));
    return multiply(acc, omega);
}

bool AffineWeyl::bruhat_leq(const ExtAffElem& x, const ExtAffElem& y) const {
    if (x.d != y.d) throw std::invalid_argument("bruhat_leq: rank mismatch");
    if (omega_part(x) != omega_part(y)) return false;
    ExtAffElem a = x, b = y;
    int la = length(a), lb = length(b);
    for (; la <= lb; --lb) {
        if (lb == 0) return a == b;
        int s = 0;
        while (!is_left_descent(s, b)) ++s;
        // s b < b, so a <= b iff min(a, s a) <= s b
        if (is_left_descent(s, a)) {
            a = multiply(simple(s), a);
            --la;
        }
        b = multiply(simple(s), b);
    }
    return false;
}

ExtAffElem AffineWeyl::tau(int block) const {
    const auto& blk = levi_.blocks().at(static_cast<std::size_t>(block));
    std::vector<int> lambda(static_cast<std::size_t>(rank()), 0);
    lambda[static_cast<std::size_t>(blk.back())] = 1;
    std::vector<int> cyc(blk.rbegin(), blk.rend());
    return ExtAffElem::make(lambda, cycle_to_perm(rank(), cyc));
}

const AffineWeyl& gl(int d) {
    check_rank(d);
    static std::array<std::once_flag, kMaxRank + 1> once;
    static std::array<std::unique_ptr<AffineWeyl>, kMaxRank + 1> groups;
    auto ud = static_cast<std::size_t>(d);
    std::call_once(once[ud], [&] { groups[ud] = std::make_unique<AffineWeyl>(d); });
    return *groups[ud];
}

int AffineWeyl::two_rho_pairing(const std::vector<int>& lambda) const {
    int s = 0;
    for (int i = 0; i < rank(); ++i)
        s += (levi_.block_size_of(i) + 1 - 2 * levi_.position(i)) * lambda.at(static_cast<std::size_t>(i));
    return s;
}

}  // namespace gamma1
