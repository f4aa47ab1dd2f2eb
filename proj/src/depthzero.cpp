#include "gamma1/depthzero.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gamma1 {

namespace {

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    for (long k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

// ---------------------------------------------------------------- TorusLogs

TorusLogs::TorusLogs(int p, int r, int d) : p_(p), r_(r), d_(d) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    if (r < 1) throw std::invalid_argument("r must be positive");
    if (d < 1) throw std::invalid_argument("d must be positive");
    n_ = ipow(p, r) - 1;
    order_ = 1;
    for (int j = 0; j < d; ++j) order_ *= static_cast<std::size_t>(n_);
}

std::vector<long> TorusLogs::logs(std::size_t index) const {
    std::vector<long> a(static_cast<std::size_t>(d_));
    for (auto& x : a) {
        x = static_cast<long>(index % static_cast<std::size_t>(n_));
        index /= static_cast<std::size_t>(n_);
    }
    return a;
}

std::size_t TorusLogs::index(const std::vector<long>& logs) const {
    if (static_cast<int>(logs.size()) != d_) throw std::invalid_argument("TorusLogs: wrong rank");
    std::size_t idx = 0;
    for (auto it = logs.rbegin(); it != logs.rend(); ++it) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(mod(*it, n_));
    return idx;
}

std::vector<long> TorusLogs::norm(const std::vector<long>& logs) const {
    std::vector<long> out(logs.size());
    for (std::size_t j = 0; j < logs.size(); ++j) out[j] = mod(logs[j], p_ - 1);
    return out;
}

// ------------------------------------------------------------ DepthZeroChar

DepthZeroChar::DepthZeroChar(int p, std::vector<long> exps) : p_(p), exps_(std::move(exps)) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
    if (exps_.empty()) throw std::invalid_argument("character needs at least one coordinate");
    for (long& e : exps_) e = mod(e, p - 1);
}

DepthZeroChar DepthZeroChar::trivial(int p, int d) { return DepthZeroChar(p, std::vector<long>(static_cast<std::size_t>(d), 0)); }

std::vector<DepthZeroChar> DepthZeroChar::all(int p, int d) {
    TorusLogs Q(p, 1, d);
    std::vector<DepthZeroChar> out;
    out.reserve(Q.order());
    for (std::size_t i = 0; i < Q.order(); ++i) out.emplace_back(p, Q.logs(i));
    return out;
}

long DepthZeroChar::phase(const std::vector<long>& logs) const {
    if (logs.size() != exps_.size()) throw std::invalid_argument("character evaluated on wrong rank");
    long s = 0;
    for (std::size_t j = 0; j < logs.size(); ++j) s = mod(s + exps_[j] * mod(logs[j], p_ - 1), p_ - 1);
    return s;
}

Cyclo DepthZeroChar::value(const std::vector<long>& logs) const { return Cyclo::zeta_pow(p_ - 1, phase(logs)); }

Cyclo DepthZeroChar::value_r(const TorusLogs& T, const std::vector<long>& logs) const {
    if (T.p() != p_) throw std::invalid_argument("character and torus use different p");
    return value(T.norm(logs));
}

DepthZeroChar DepthZeroChar::conjugate(const ExtAffElem& w) const {
    std::vector<int> e(exps_.begin(), exps_.end());
    std::vector<int> pe = permute(w, e);
    return DepthZeroChar(p_, std::vector<long>(pe.begin(), pe.end()));
}

std::string DepthZeroChar::str() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < exps_.size(); ++j) os << (j ? "," : "") << exps_[j];
    return os.str();
}

// ---------------------------------------------------------------- stabilizer

std::vector<int> CharStabilizer::mu1_vec() const {
    std::vector<int> v(static_cast<std::size_t>(levi.rank()), 0);
    if (!mu1) throw std::logic_error("mu1 is absent: no trivial component");
    v[static_cast<std::size_t>(*mu1)] = 1;
    return v;
}

std::vector<int> CharStabilizer::mu1_star_vec() const {
    std::vector<int> v(static_cast<std::size_t>(levi.rank()), 0);
    if (!mu1_star) throw std::logic_error("mu1* is absent: no trivial component");
    v[static_cast<std::size_t>(*mu1_star)] = -1;
    return v;
}

CharStabilizer stabilizer(const DepthZeroChar& chi) {
    int d = chi.d();
    CharStabilizer st;
    std::vector<int> labels(chi.exps().begin(), chi.exps().end());
    st.levi = LeviDatum::from_labels(labels);
    for (int j = 0; j < d; ++j)
        if (chi.is_trivial_at(j)) st.trivial_block.push_back(j);
    if (!st.trivial_block.empty()) {
        st.mu1 = st.trivial_block.front();
        st.mu1_star = st.trivial_block.back();
    }
    // full stabilizer by enumeration
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::set<std::vector<int>> full;
    do {
        ExtAffElem w = ExtAffElem::make(std::vector<int>(static_cast<std::size_t>(d), 0), p);
        if (chi.conjugate(w) == chi) full.insert(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // group generated by the reflections (i j) with chi_i = chi_j
    std::vector<std::vector<int>> gens;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (chi.exps()[static_cast<std::size_t>(i)] == chi.exps()[static_cast<std::size_t>(j)])
                gens.push_back(cycle_to_perm(d, {i, j}));
    std::iota(p.begin(), p.end(), 0);
    std::set<std::vector<int>> closure{p};
    std::deque<std::vector<int>> queue{p};
    while (!queue.empty()) {
        std::vector<int> x = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            std::vector<int> y(x.size());
            for (std::size_t k = 0; k < x.size(); ++k) y[k] = g[static_cast<std::size_t>(x[k])];
            if (closure.insert(y).second) queue.push_back(y);
        }
    }
    if (closure != full) throw std::logic_error("stabilizer: W_chi differs from its reflection subgroup");
    AffineWeyl WM(st.levi);
    for (const auto& x : full)
        if (!WM.contains(ExtAffElem::make(std::vector<int>(x.size(), 0), x)))
            throw std::logic_error("stabilizer: W_chi is not the Weyl group of the level-set Levi");
    st.W_chi.assign(full.begin(), full.end());
    return st;
}

// --------------------------------------------------------------------- delta

DeltaRoutes delta_routes(const ExtAffElem& w, const DepthZeroChar& chi) {
    if (w.d != chi.d()) throw std::invalid_argument("delta: rank mismatch");
    CriticalSet S = critical_indices(w);
    std::vector<int> idx = S.indices();
    DeltaRoutes r{};
    r.constant_on_S = std::all_of(idx.begin(), idx.end(), [&](int j) {
        return chi.exps()[static_cast<std::size_t>(j)] == chi.exps()[static_cast<std::size_t>(idx.front())];
    });
    LeviDatum L = LeviDatum::from_labels(std::vector<int>(chi.exps().begin(), chi.exps().end()));
    r.S_in_block = std::all_of(idx.begin(), idx.end(), [&](int j) { return L.same_block(j, idx.front()); });
    // enumerate T^1_S(F_p): coordinates outside S are 1, product over S is 1
    long m = chi.p() - 1;
    std::size_t h = idx.size();
    std::vector<long> logs(static_cast<std::size_t>(chi.d()), 0);
    r.trivial_on_T1S = true;
    long total = 1;
    for (std::size_t k = 0; k < h; ++k) total *= m;
    for (long code = 0; code < total && r.trivial_on_T1S; ++code) {
        long c = code, sum = 0;
        for (std::size_t k = 0; k < h; ++k) {
            logs[static_cast<std::size_t>(idx[k])] = c % m;
            sum += c % m;
            c /= m;
        }
        if (sum % m != 0) continue;
        if (chi.phase(logs) != 0) r.trivial_on_T1S = false;
    }
    return r;
}

int delta(const ExtAffElem& w, const DepthZeroChar& chi) {
    DeltaRoutes r = delta_routes(w, chi);
    if (r.constant_on_S != r.S_in_block || r.S_in_block != r.trivial_on_T1S)
        throw std::logic_error("delta: the equivalent conditions disagree for " + w.str() + " and chi = " + chi.str());
    if (r.constant_on_S && chi.conjugate(w) != chi)
        throw std::logic_error("delta: w does not fix chi although delta = 1");
    return r.constant_on_S ? 1 : 0;
}

int delta1(const ExtAffElem& w, const DepthZeroChar& chi) {
    if (w.d != chi.d()) throw std::invalid_argument("delta1: rank mismatch");
    std::vector<int> idx = critical_indices(w).indices();
    bool by_coords = std::all_of(idx.begin(), idx.end(), [&](int j) { return chi.is_trivial_at(j); });
    // triviality on T_S(F_p), checked on the generators g_0 e_j, j in S, and by enumeration
    long m = chi.p() - 1;
    long total = 1;
    for (std::size_t k = 0; k < idx.size(); ++k) total *= m;
    std::vector<long> logs(static_cast<std::size_t>(chi.d()), 0);
    bool on_TS = true;
    for (long code = 0; code < total && on_TS; ++code) {
        long c = code;
        for (int j : idx) {
            logs[static_cast<std::size_t>(j)] = c % m;
            c /= m;
        }
        if (chi.phase(logs) != 0) on_TS = false;
    }
    if (by_coords != on_TS) throw std::logic_error("delta1: coordinate test and T_S test disagree");
    return by_coords ? 1 : 0;
}

// --------------------------------------------------------- TorusGroupAlgebra

TorusGroupAlgebra::TorusGroupAlgebra(int p, int r, int d) : T_(p, r, d) {}

TorusGroupAlgebra::Elem TorusGroupAlgebra::zero() const { return Elem(T_.order()); }

TorusGroupAlgebra::Elem TorusGroupAlgebra::identity() const {
    Elem e = zero();
    e[0] = Scalar(1);
    return e;
}

TorusGroupAlgebra::Elem TorusGroupAlgebra::multiply(const Elem& a, const Elem& b) const {
    if (a.size() != T_.order() || b.size() != T_.order()) throw std::invalid_argument("group algebra: size mismatch");
    Elem out = zero();
    for (std::size_t s = 0; s < a.size(); ++s) {
        if (a[s].is_zero()) continue;
        std::vector<long> ls = T_.logs(s);
        for (std::size_t u = 0; u < b.size(); ++u) {
            if (b[u].is_zero()) continue;
            // t = s u
            std::vector<long> lu = T_.logs(u);
            for (std::size_t j = 0; j < lu.size(); ++j) lu[j] += ls[j];
            out[T_.index(lu)] += a[s] * b[u];
        }
    }
    return out;
}

TorusGroupAlgebra::Elem TorusGroupAlgebra::idempotent(const DepthZeroChar& chi) const {
    if (chi.d() != T_.d()) throw std::invalid_argument("idempotent: rank mismatch");
    Elem e = zero();
    Rational inv_order = Rational(static_cast<long>(T_.order())).inverse();
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::vector<long> l = T_.logs(i);
        for (long& x : l) x = -x;
        e[i] = Scalar(Cyclo(inv_order) * chi.value_r(T_, l));
    }
    return e;
}

TorusGroupAlgebra::Elem TorusGroupAlgebra::conjugate(const Elem& a, const ExtAffElem& w) const {
    // (w^-1 t w)_j = t_{wbar(j)}
    Elem out = zero();
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<long> l = T_.logs(i), c(l.size());
        for (std::size_t j = 0; j < l.size(); ++j) c[j] = l[w.perm[j]];
        out[i] = a[T_.index(c)];
    }
    return out;
}

namespace {

// Elements of Z[zeta_m] reduced modulo Phi_m, as integer coordinate vectors.
class IntCyclo {
public:
    explicit IntCyclo(int m) : m_(m), deg_(euler_phi(m)) {
        for (long k = 0; k < m; ++k) {
            std::vector<long> row(static_cast<std::size_t>(deg_), 0);
            const Cyclo::Coeffs& c = Cyclo::zeta_pow(m, k).coeffs();
            for (std::size_t i = 0; i < c.size(); ++i) row[i] = c[i].to_int64();
            rows_.push_back(std::move(row));
        }
    }
    // sum_k counts[k] zeta^k
    std::vector<long> reduce(const std::vector<long>& counts) const {
        std::vector<long> out(static_cast<std::size_t>(deg_), 0);
        for (int k = 0; k < m_; ++k)
            if (counts[static_cast<std::size_t>(k)] != 0)
                for (int i = 0; i < deg_; ++i)
                    out[static_cast<std::size_t>(i)] += counts[static_cast<std::size_t>(k)] * rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        return out;
    }
    std::vector<long> scaled_power(long c, long k) const {
        std::vector<long> out = rows_[static_cast<std::size_t>(mod(k, m_))];
        for (long& x : out) x *= c;
        return out;
    }

private:
    int m_, deg_;
    std::vector<std::vector<long>> rows_;
};

}  // namespace

IdempotentReport check_idempotents(int p, int r, int d, bool brute) {
    IdempotentReport rep;
    TorusGroupAlgebra A(p, r, d);
    TorusLogs Q(p, 1, d);
    const TorusLogs& T = A.logs();
    const long m = p - 1;
    const std::size_t nq = Q.order();
    IntCyclo Z(static_cast<int>(m));
    std::vector<DepthZeroChar> chars = DepthZeroChar::all(p, d);

    // e_chi = |T|^-1 zeta^{-phase}; all values share the factor |T|^-1, so
    // products are tracked as multiplicities of zeta-powers.
    std::vector<std::vector<long>> phase(chars.size(), std::vector<long>(nq));
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t t = 0; t < nq; ++t) phase[i][t] = mod(-chars[i].phase(Q.logs(t)), m);
    std::vector<std::size_t> mul(nq * nq);
    for (std::size_t s = 0; s < nq; ++s)
        for (std::size_t u = 0; u < nq; ++u) {
            std::vector<long> l = Q.logs(s), lu = Q.logs(u);
            for (std::size_t j = 0; j < l.size(); ++j) l[j] += lu[j];
            mul[s * nq + u] = Q.index(l);
        }

    // On pullbacks along N_r, (a * b)(t) = |ker N_r| sum_{s in T(F_p)} a(s) b(s^-1 t),
    // so e_i * e_j = [i = j] e_i becomes B(t) = [i = j] |T(F_p)| zeta^{-phase_i(t)}
    // for the multiplicity sums B.
    std::vector<std::vector<long>> counts(nq, std::vector<long>(static_cast<std::size_t>(m)));
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = 0; j < chars.size(); ++j) {
            for (auto& c : counts) std::fill(c.begin(), c.end(), 0);
            for (std::size_t s = 0; s < nq; ++s)
                for (std::size_t u = 0; u < nq; ++u)
                    ++counts[mul[s * nq + u]][static_cast<std::size_t>((phase[i][s] + phase[j][u]) % m)];
            for (std::size_t t = 0; t < nq; ++t) {
                std::vector<long> expect = i == j ? Z.scaled_power(static_cast<long>(nq), phase[i][t])
                                                  : std::vector<long>(static_cast<std::size_t>(euler_phi(static_cast<int>(m))), 0);
                if (Z.reduce(counts[t]) != expect) rep.orthogonal = false;
            }
            ++rep.checked;
        }

    // sum_chi e_chi = |ker N_r|^-1 1_{ker N_r}, the identity when r = 1:
    // sum_chi zeta^{-phase_chi(t)} = [N_r t = 1] |T(F_p)|.
    for (std::size_t t = 0; t < T.order(); ++t) {
        std::size_t tq = Q.index(T.norm(T.logs(t)));
        std::vector<long> c(static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < chars.size(); ++i) ++c[static_cast<std::size_t>(phase[i][tq])];
        std::vector<long> expect = tq == 0 ? Z.scaled_power(static_cast<long>(nq), 0)
                                           : std::vector<long>(static_cast<std::size_t>(euler_phi(static_cast<int>(m))), 0);
        if (Z.reduce(c) != expect) rep.complete = false;
    }

    // e_xi(w^-1 t w) = e_{^w xi}(t) on T(k_r)
    std::vector<ExtAffElem> adm = adm_set(d);
    for (const ExtAffElem& w : adm)
        for (std::size_t i = 0; i < chars.size(); ++i) {
            DepthZeroChar c = chars[i].conjugate(w);
            for (std::size_t t = 0; t < T.order(); ++t) {
                std::vector<long> l = T.logs(t), lc(l.size());
                for (std::size_t j = 0; j < l.size(); ++j) lc[j] = l[w.perm[j]];
                if (chars[i].phase(T.norm(lc)) != c.phase(T.norm(l))) rep.conjugation = false;
            }
            ++rep.checked;
        }

    if (brute) {
        // the same identities with full convolution over Q(zeta_{p-1})
        TorusGroupAlgebra::Elem sum = A.zero();
        std::vector<TorusGroupAlgebra::Elem> es;
        for (const auto& chi : chars) es.push_back(A.idempotent(chi));
        for (std::size_t i = 0; i < chars.size(); ++i) {
            for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += es[i][t];
            for (std::size_t j = i; j < chars.size(); j += std::max<std::size_t>(1, chars.size() / 4)) {
                if (A.multiply(es[i], es[j]) != (i == j ? es[i] : A.zero())) rep.orthogonal = false;
                ++rep.checked;
            }
            for (const ExtAffElem& w : adm)
                if (A.conjugate(es[i], w) != A.idempotent(chars[i].conjugate(w))) rep.conjugation = false;
        }
        for (std::size_t t = 0; t < sum.size(); ++t) {
            std::vector<long> nt = T.norm(T.logs(t));
            bool in_K = std::all_of(nt.begin(), nt.end(), [](long x) { return x == 0; });
            Rational K(static_cast<long>(T.order() / nq));
            if (sum[t] != (in_K ? Scalar(K.inverse()) : Scalar())) rep.complete = false;
        }
        if (r == 1 && sum != A.identity()) rep.complete = false;
    }
    return rep;
}

// --------------------------------------------------------------------- Psi

HeckeElem psi_transport(const CharStabilizer& st, const std::map<ExtAffElem, Scalar>& h) {
    AffineWeyl WM(st.levi);
    const AffineWeyl& WG = gl(st.levi.rank());
    HeckeElem out(st.levi);
    for (const auto& [w, c] : h) {
        if (!WM.contains(w)) throw std::invalid_argument("psi_transport: " + w.str() + " lies outside W~_chi");
        out.add(w, Scalar::v_pow(WG.length(w) - WM.length(w)) * c);
    }
    return out;
}

std::map<ExtAffElem, Scalar> psi_inverse(const CharStabilizer& st, const HeckeElem& h) {
    if (h.levi() != st.levi) throw std::invalid_argument("psi_inverse: element of a different Levi");
    AffineWeyl WM(st.levi);
    const AffineWeyl& WG = gl(st.levi.rank());
    std::map<ExtAffElem, Scalar> out;
    for (const auto& [w, c] : h.coeffs()) out.emplace(w, Scalar::v_pow(WM.length(w) - WG.length(w)) * c);
    return out;
}

}  // namespace gamma1
