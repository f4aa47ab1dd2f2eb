#include "gamma1/admissible.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gamma1 {

namespace {

std::vector<int> unit(int d, int j) {
    std::vector<int> v(static_cast<std::size_t>(d), 0);
    v[static_cast<std::size_t>(j)] = 1;
    return v;
}

std::vector<ExtAffElem> sorted_unique(std::vector<ExtAffElem> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void require_admissible(const ExtAffElem& w, const char* op) {
    if (!is_permissible(w)) throw std::invalid_argument(std::string(op) + ": " + w.str() + " is not in Adm(mu_0)");
}

// Index m with lambda = e_m; -1 if lambda is not a unit vector.
int unit_index(const ExtAffElem& w) {
    int m = -1;
    for (int j = 0; j < w.d; ++j) {
        int l = w.lambda[static_cast<std::size_t>(j)];
        if (l == 0) continue;
        if (l != 1 || m != -1) return -1;
        m = j;
    }
    return m;
}

CriticalSet S_by_bruhat(const ExtAffElem& w) {
    const AffineWeyl& W = gl(w.d);
    CriticalSet S{w.d, 0};
    for (int j = 0; j < w.d; ++j)
        if (W.bruhat_leq(w, ExtAffElem::translation(unit(w.d, j)))) S.mask |= 1U << j;
    return S;
}

CriticalSet S_by_vertices(const ExtAffElem& w) {
    CriticalSet S{w.d, 0};
    for (int j = 1; j <= w.d; ++j)
        if (act_on_vertex(w, j) == base_vertex(w.d, j - 1)) S.mask |= 1U << (j - 1);
    return S;
}

CriticalSet S_by_cycle(const ExtAffElem& w) {
    CriticalSet S{w.d, 0};
    S.mask |= 1U << unit_index(w);
    for (int j = 0; j < w.d; ++j)
        if (w.perm[static_cast<std::size_t>(j)] != j) S.mask |= 1U << j;
    return S;
}

}  // namespace

CriticalSet CriticalSet::from_indices(int d, const std::vector<int>& zero_based) {
    CriticalSet S{d, 0};
    for (int i : zero_based) {
        if (i < 0 || i >= d) throw std::invalid_argument("CriticalSet: index out of range");
        S.mask |= 1U << i;
    }
    return S;
}

int CriticalSet::size() const { return __builtin_popcount(mask); }

int CriticalSet::max_index() const {
    if (mask == 0) throw std::domain_error("CriticalSet: empty");
    return 31 - __builtin_clz(mask);
}

std::vector<int> CriticalSet::indices() const {
    std::vector<int> out;
    for (int i = 0; i < d; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::string CriticalSet::str() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
        s += (first ? "" : ",") + std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

std::vector<std::vector<long>> hermite_normal_form(std::vector<std::vector<long>> rows) {
    if (rows.empty()) return rows;
    std::size_t ncols = rows[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < ncols && pivot_row < rows.size(); ++c) {
        // Euclid on column c among rows >= pivot_row.
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t r = pivot_row; r < rows.size(); ++r)
                if (rows[r][c] != 0 && (best == rows.size() || std::labs(rows[r][c]) < std::labs(rows[best][c])))
                    best = r;
            if (best == rows.size()) break;
            std::swap(rows[pivot_row], rows[best]);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
                if (rows[r][c] == 0) continue;
                long f = rows[r][c] / rows[pivot_row][c];
                for (std::size_t k = 0; k < ncols; ++k) rows[r][k] -= f * rows[pivot_row][k];
                if (rows[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[pivot_row][c] == 0) continue;
        if (rows[pivot_row][c] < 0)
            for (auto& x : rows[pivot_row]) x = -x;
        long p = rows[pivot_row][c];
        for (std::size_t r = 0; r < pivot_row; ++r) {
            long f = rows[r][c] / p;
            if (rows[r][c] - f * p < 0) --f;
            for (std::size_t k = 0; k < ncols; ++k) rows[r][k] -= f * rows[pivot_row][k];
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

std::vector<long> smith_invariants(std::vector<std::vector<long>> a) {
    std::vector<long> out;
    if (a.empty()) return out;
    std::size_t m = a.size(), n = a[0].size();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block goes to (t, t)
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a[i][j] != 0 && (bi == m || std::labs(a[i][j]) < std::labs(a[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) return out;
            std::swap(a[t], a[bi]);
            for (auto& row : a) std::swap(row[t], row[bj]);
            long p = a[t][t];
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                long f = a[i][t] / p;
                for (std::size_t j = t; j < n; ++j) a[i][j] -= f * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                long f = a[t][j] / p;
                for (std::size_t i = t; i < m; ++i) a[i][j] -= f * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility: fold any offending row into row t and retry
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a[i][j] % p != 0) {
                        for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        out.push_back(std::labs(a[t][t]));
    }
    return out;
}

std::vector<ExtAffElem> bruhat_closure(const AffineWeyl& W, const std::vector<ExtAffElem>& tops) {
    std::set<ExtAffElem> all;
    for (const ExtAffElem& y : tops) {
        OmegaDecomp od = W.reduced_word(y);
        std::set<ExtAffElem> prefixes{ExtAffElem::identity(W.rank())};
        for (int s : od.word) {
            std::set<ExtAffElem> next = prefixes;
            for (const ExtAffElem& x : prefixes) next.insert(multiply(x, W.simple(s)));
            prefixes = std::move(next);
        }
        for (const ExtAffElem& x : prefixes) all.insert(multiply(x, od.omega));
    }
    return {all.begin(), all.end()};
}

std::vector<ExtAffElem> cycle_classification(int d) {
    std::vector<ExtAffElem> out;
    for (int m = 0; m < d; ++m) {
        for (std::uint32_t sub = 0; sub < (1U << m); ++sub) {
            std::vector<int> cyc{m};
            for (int j = m - 1; j >= 0; --j)
                if ((sub >> j) & 1U) cyc.push_back(j);
            out.push_back(ExtAffElem::make(unit(d, m), cycle_to_perm(d, cyc)));
        }
    }
    return sorted_unique(out);
}

bool is_permissible(const ExtAffElem& w) {
    if (unit_index(w) < 0) return false;
    std::vector<int> inv(w.d);
    for (int j = 0; j < w.d; ++j) inv[w.perm[static_cast<std::size_t>(j)]] = j;
    for (int j = 0; j < w.d; ++j) {
        int l = w.lambda[static_cast<std::size_t>(j)];
        if (l == 0 && inv[static_cast<std::size_t>(j)] < j) return false;
        if (l == 1 && inv[static_cast<std::size_t>(j)] > j) return false;
    }
    return true;
}

std::vector<ExtAffElem> perm_set(int d) {
    std::vector<ExtAffElem> out;
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    do {
        for (int m = 0; m < d; ++m) {
            ExtAffElem w = ExtAffElem::make(unit(d, m), p);
            if (is_permissible(w)) out.push_back(w);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return sorted_unique(out);
}

std::vector<ExtAffElem> adm_set(int d) {
    std::vector<ExtAffElem> tops;
    for (int j = 0; j < d; ++j) tops.push_back(ExtAffElem::translation(unit(d, j)));
    std::vector<ExtAffElem> adm = bruhat_closure(gl(d), tops);
    if (adm != cycle_classification(d)) throw std::logic_error("adm_set: closure disagrees with cycle classification");
    return adm;
}

ExtAffElem element_of_subset(const CriticalSet& S) {
    if (S.mask == 0) throw std::invalid_argument("element_of_subset: empty set");
    std::vector<int> idx = S.indices();
    std::vector<int> cyc(idx.rbegin(), idx.rend());
    return ExtAffElem::make(unit(S.d, S.max_index()), cycle_to_perm(S.d, cyc));
}

CriticalSet critical_indices(const ExtAffElem& w) {
    require_admissible(w, "critical_indices");
    CriticalSet a = S_by_bruhat(w), b = S_by_vertices(w), c = S_by_cycle(w);
    if (!(a == b && b == c))
        throw std::logic_error("critical_indices: routes disagree for " + w.str() + ": " + a.str() + " " + b.str() +
                               " " + c.str());
    return a;
}

int codim(const ExtAffElem& w) {
    require_admissible(w, "codim");
    const AffineWeyl& W = gl(w.d);
    int c = W.length(ExtAffElem::translation(unit(w.d, 0))) - W.length(w);
    if (c != critical_indices(w).size() - 1) throw std::logic_error("codim != |S(w)| - 1 for " + w.str());
    return c;
}

std::pair<bool, bool> bruhat_vs_S(const ExtAffElem& x, const ExtAffElem& y) {
    require_admissible(x, "bruhat_vs_S");
    require_admissible(y, "bruhat_vs_S");
    return {gl(x.d).bruhat_leq(y, x), critical_indices(x).subset_of(critical_indices(y))};
}

int dominant_index_of_block(const LeviDatum& L, int block) {
    return L.blocks().at(static_cast<std::size_t>(block)).front();
}

std::vector<ExtAffElem> levi_adm_G_side(const LeviDatum& L, int block) {
    CriticalSet O = CriticalSet::from_indices(L.rank(), L.blocks().at(static_cast<std::size_t>(block)));
    std::vector<ExtAffElem> out;
    for (const ExtAffElem& w : adm_set(L.rank()))
        if (critical_indices(w).subset_of(O)) out.push_back(w);
    return out;
}

std::vector<ExtAffElem> levi_adm_M_side(const LeviDatum& L, int block) {
    AffineWeyl WM(L);
    std::vector<ExtAffElem> tops;
    for (int j : L.blocks().at(static_cast<std::size_t>(block))) tops.push_back(ExtAffElem::translation(unit(L.rank(), j)));
    return bruhat_closure(WM, tops);
}

std::vector<ExtAffElem> levi_adm(const LeviDatum& L, int nu_index) {
    if (nu_index < 0 || nu_index >= L.rank()) throw std::invalid_argument("levi_adm: index out of range");
    int block = L.block_of(nu_index);
    if (dominant_index_of_block(L, block) != nu_index)
        throw std::invalid_argument("levi_adm: e_" + std::to_string(nu_index + 1) + " is not M-dominant in " + L.str());
    std::vector<ExtAffElem> g = levi_adm_G_side(L, block);
    if (g != levi_adm_M_side(L, block)) throw std::logic_error("levi_adm: Adm^G(O_nu) != Adm^M(nu) for " + L.str());
    return g;
}

CocharLattice lattice_Lw(const ExtAffElem& w) {
    CriticalSet S = critical_indices(w);
    int d = w.d;
    std::vector<std::vector<long>> gens;
    std::vector<int> zero(static_cast<std::size_t>(d), 0);
    for (int j = -1; j < d; ++j) {
        std::vector<int> nu = j < 0 ? zero : unit(d, j);
        std::vector<int> wn = act(w, nu);
        std::vector<long> g(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) g[static_cast<std::size_t>(k)] = wn[static_cast<std::size_t>(k)] - nu[static_cast<std::size_t>(k)];
        gens.push_back(g);
    }
    CocharLattice L{d, hermite_normal_form(gens)};
    std::vector<std::vector<long>> expect;
    for (int j : S.indices()) {
        std::vector<long> g(static_cast<std::size_t>(d), 0);
        g[static_cast<std::size_t>(j)] = 1;
        expect.push_back(g);
    }
    if (L.basis != hermite_normal_form(expect)) throw std::logic_error("lattice_Lw: L_w != sum over S(w) for " + w.str());
    for (long f : smith_invariants(gens))
        if (f != 1) throw std::logic_error("lattice_Lw: torsion in Z^d / L_w for " + w.str());
    return L;
}

StrataPoset strata_poset(int d) {
    StrataPoset P;
    std::vector<int> index_of(1U << d, -1);
    for (std::uint32_t mask = 1; mask < (1U << d); ++mask) {
        CriticalSet S{d, mask};
        ExtAffElem w = element_of_subset(S);
        if (critical_indices(w) != S) throw std::logic_error("strata_poset: S(w_S) != S");
        index_of[mask] = static_cast<int>(P.strata.size());
        P.strata.push_back({S, w, codim(w)});
    }
    for (const Stratum& s : P.strata)
        for (int j = 0; j < d; ++j)
            if (!s.S.contains(j))
                P.covers.emplace_back(index_of[s.S.mask], index_of[s.S.mask | (1U << j)]);
    return P;
}

}  // namespace gamma1
