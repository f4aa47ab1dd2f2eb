#include "gamma1/testfcn.hpp"

#include "gamma1/admissible.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gamma1 {

namespace {

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long mod(long a, long n) {
    long r = a % n;
    return r < 0 ? r + n : r;
}

// Phase of chi_r^-1 at every t, through the norm to T(F_p).
std::vector<long> inverse_phases(const TorusLogs& T, const DepthZeroChar& chi) {
    std::vector<long> out(T.order());
    for (std::size_t t = 0; t < T.order(); ++t) out[t] = mod(-chi.phase(T.norm(T.logs(t))), chi.root_order());
    return out;
}

std::vector<Cyclo> zeta_table(int m) {
    std::vector<Cyclo> z;
    for (long k = 0; k < m; ++k) z.push_back(Cyclo::zeta_pow(m, k));
    return z;
}

Cyclo specialize(const Scalar& s, const Rational& q0) {
    Scalar x = s.specialize_q(q0);
    return x.constant_term();
}

}  // namespace

std::string to_string(Measure m) { return m == Measure::I ? "I" : "I+"; }

// ------------------------------------------------------------ TestFunction

TestFunction::TestFunction(int p, int r, int d, Measure measure, std::optional<DepthZeroChar> chi)
    : T_(p, r, d), measure_(measure), chi_(std::move(chi)) {
    if (chi_ && (chi_->p() != p || chi_->d() != d)) throw std::invalid_argument("TestFunction: character does not match (p, d)");
}

Rational TestFunction::q() const { return Rational(ipow(T_.p(), T_.r())); }

Cyclo TestFunction::at(const std::vector<long>& t, const ExtAffElem& u) const {
    auto it = values_.find(u);
    if (it == values_.end()) return Cyclo();
    return it->second[T_.index(t)];
}

std::vector<Cyclo>& TestFunction::row(const ExtAffElem& u) {
    if (u.d != d()) throw std::invalid_argument("TestFunction: Weyl element of wrong rank");
    auto it = values_.find(u);
    if (it == values_.end()) it = values_.emplace(u, std::vector<Cyclo>(T_.order())).first;
    return it->second;
}

void TestFunction::set(const std::vector<long>& t, const ExtAffElem& u, const Cyclo& value) {
    if (chi_ && !value.is_zero() && delta(inverse(u), *chi_) == 0)
        throw std::invalid_argument("TestFunction: nonzero value at " + u.str() + " where delta(u^-1, chi) = 0");
    row(u)[T_.index(t)] = value;
}

void TestFunction::set_row(const ExtAffElem& u, std::vector<Cyclo> values) {
    if (values.size() != T_.order()) throw std::invalid_argument("TestFunction: row of wrong length");
    bool nonzero = std::any_of(values.begin(), values.end(), [](const Cyclo& c) { return !c.is_zero(); });
    if (chi_ && nonzero && delta(inverse(u), *chi_) == 0)
        throw std::invalid_argument("TestFunction: nonzero row at " + u.str() + " where delta(u^-1, chi) = 0");
    row(u) = std::move(values);
}

TestFunction TestFunction::scaled(const Cyclo& c) const {
    TestFunction out = *this;
    for (auto& [u, vals] : out.values_)
        for (Cyclo& x : vals)
            if (!x.is_zero()) x *= c;
    return out;
}

TestFunction TestFunction::to_measure(Measure target) const {
    if (target == measure_) return *this;
    Rational index = (q() - Rational(1)).pow(d());  // [I_r : I_r^+]
    TestFunction out = scaled(Cyclo(target == Measure::Iplus ? index.inverse() : index));
    out.measure_ = target;
    return out;
}

void TestFunction::check_same_shape(const TestFunction& o) const {
    if (p() != o.p() || r() != o.r() || d() != o.d()) throw std::invalid_argument("TestFunction: different (p, r, d)");
    if (measure_ != o.measure_)
        throw std::invalid_argument("TestFunction: measure " + to_string(measure_) + " combined with " + to_string(o.measure_));
}

TestFunction& TestFunction::operator+=(const TestFunction& o) {
    check_same_shape(o);
    chi_.reset();
    for (const auto& [u, vals] : o.values_) {
        std::vector<Cyclo>& mine = row(u);
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (!vals[i].is_zero()) mine[i] += vals[i];
    }
    return *this;
}

bool TestFunction::all_rational() const {
    for (const auto& [u, vals] : values_)
        for (const Cyclo& x : vals)
            if (!x.is_rational()) return false;
    return true;
}

std::size_t TestFunction::nonzero_count() const {
    std::size_t n = 0;
    for (const auto& [u, vals] : values_)
        n += static_cast<std::size_t>(std::count_if(vals.begin(), vals.end(), [](const Cyclo& c) { return !c.is_zero(); }));
    return n;
}

bool operator==(const TestFunction& a, const TestFunction& b) {
    a.check_same_shape(b);
    std::set<ExtAffElem> keys;
    for (const auto& kv : a.values_) keys.insert(kv.first);
    for (const auto& kv : b.values_) keys.insert(kv.first);
    for (const ExtAffElem& u : keys) {
        auto ia = a.values_.find(u), ib = b.values_.find(u);
        for (std::size_t t = 0; t < a.T_.order(); ++t) {
            Cyclo x = ia == a.values_.end() ? Cyclo() : ia->second[t];
            Cyclo y = ib == b.values_.end() ? Cyclo() : ib->second[t];
            if (x != y) return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ constructions

HeckeElem kottwitz_mu_star(int d) {
    HeckeElem out(LeviDatum::full(d));
    for (const auto& [w, c] : kottwitz_mu0(d).coeffs()) out.add(inverse(w), c);
    return out;
}

TestFunction phi_chi(int p, int r, const DepthZeroChar& chi) {
    int d = chi.d();
    TestFunction f(p, r, d, Measure::I, chi);
    Rational q0 = f.q();
    std::vector<long> ph = inverse_phases(f.torus(), chi);
    std::vector<Cyclo> zeta = zeta_table(chi.root_order());
    HeckeElem k_star = kottwitz_mu_star(d);
    for (const auto& [u, k] : k_star.coeffs()) {
        if (delta1(inverse(u), chi) == 0) continue;
        Cyclo kq = specialize(k, q0);
        std::vector<Cyclo> row(f.torus().order());
        for (std::size_t t = 0; t < row.size(); ++t) row[t] = zeta[static_cast<std::size_t>(ph[t])] * kq;
        f.set_row(u, std::move(row));
    }
    return f;
}

TestFunction phi_one_sum(int p, int r, int d) {
    TestFunction acc(p, r, d, Measure::I);
    for (const DepthZeroChar& chi : DepthZeroChar::all(p, d)) acc += phi_chi(p, r, chi);
    TestFunction out = acc.to_measure(Measure::Iplus);
    if (!out.all_rational()) throw std::logic_error("phi_one_sum: a value outside Q survived the character sum");
    return out;
}

TestFunction phi_one_explicit(int p, int r, int d) {
    TestFunction f(p, r, d, Measure::Iplus);
    const TorusLogs& T = f.torus();
    Rational q0 = f.q();
    for (const ExtAffElem& w : adm_set(d)) {
        CriticalSet S = critical_indices(w);
        int s = S.size();
        Rational c = Rational(d % 2 == 0 ? 1 : -1) * Rational(p - 1).pow(d - s) * (Rational(1) - q0).pow(s - d - 1);
        std::vector<Cyclo> row(T.order());
        for (std::size_t t = 0; t < row.size(); ++t) {
            std::vector<long> n = T.norm(T.logs(t));
            bool in_TS = true;
            for (int j = 0; j < d; ++j)
                if (!S.contains(j) && n[static_cast<std::size_t>(j)] != 0) in_TS = false;
            if (in_TS) row[t] = Cyclo(c);
        }
        f.set_row(inverse(w), std::move(row));
    }
    return f;
}

TestFunction project_component(const TestFunction& f, const DepthZeroChar& chi) {
    if (f.measure() != Measure::Iplus) throw std::invalid_argument("project_component: expects an I+-measure function");
    if (chi.p() != f.p() || chi.d() != f.d()) throw std::invalid_argument("project_component: character does not match");
    const TorusLogs& T = f.torus();
    std::vector<long> ph = inverse_phases(T, chi);
    std::vector<Cyclo> zeta = zeta_table(chi.root_order());
    long m = chi.root_order();
    Cyclo inv_order(Rational(static_cast<long>(T.order())).inverse());
    TestFunction out(f.p(), f.r(), f.d(), Measure::Iplus);
    for (const auto& [u, vals] : f.values()) {
        Cyclo sum;
        for (std::size_t y = 0; y < vals.size(); ++y)
            if (!vals[y].is_zero()) sum += zeta[static_cast<std::size_t>(mod(-ph[y], m))] * vals[y];
        sum *= inv_order;
        if (sum.is_zero()) continue;
        std::vector<Cyclo> row(T.order());
        for (std::size_t t = 0; t < row.size(); ++t) row[t] = zeta[static_cast<std::size_t>(ph[t])] * sum;
        out.set_row(u, std::move(row));
    }
    return out;
}

TestFunction project_component_brute(const TestFunction& f, const DepthZeroChar& chi) {
    if (f.measure() != Measure::Iplus) throw std::invalid_argument("project_component: expects an I+-measure function");
    const TorusLogs& T = f.torus();
    Cyclo inv_order(Rational(static_cast<long>(T.order())).inverse());
    // e(y) = |T|^-1 chi_r(y^-1)
    std::vector<Cyclo> e(T.order());
    for (std::size_t y = 0; y < T.order(); ++y) {
        std::vector<long> l = T.logs(y);
        for (long& x : l) x = -x;
        e[y] = inv_order * chi.value_r(T, l);
    }
    TestFunction out(f.p(), f.r(), f.d(), Measure::Iplus);
    for (const auto& [u, vals] : f.values()) {
        std::vector<Cyclo> row(T.order());
        for (std::size_t y = 0; y < T.order(); ++y) {
            std::vector<long> ly = T.logs(y);
            for (std::size_t s = 0; s < T.order(); ++s) {
                if (vals[s].is_zero()) continue;
                // t = y s
                std::vector<long> lt = T.logs(s);
                for (std::size_t j = 0; j < lt.size(); ++j) lt[j] += ly[j];
                row[T.index(lt)] += e[y] * vals[s];
            }
        }
        out.set_row(u, std::move(row));
    }
    return out;
}

// ------------------------------------------------------------------- Psi

std::map<ExtAffElem, Scalar> phi_basis_coeffs(const TestFunction& phi) {
    std::map<ExtAffElem, Scalar> out;
    for (const auto& [u, vals] : phi.values())
        if (!vals[0].is_zero()) out.emplace(u, Scalar(vals[0]));
    return out;
}

PsiImage psi_image_of_phi(int p, int r, const DepthZeroChar& chi) {
    CharStabilizer st = stabilizer(chi);
    if (st.trivial_block.empty()) throw std::invalid_argument("psi_image_of_phi: chi has no trivial component");
    int d = chi.d();
    int n = static_cast<int>(st.trivial_block.size());
    Rational q0(ipow(p, r));
    HeckeAlgebra HM(st.levi);
    HeckeElem kM = HM.k_mu(st.mu1_star_vec());

    std::map<ExtAffElem, Scalar> sym;
    HeckeElem k_star = kottwitz_mu_star(d);
    for (const auto& [u, k] : k_star.coeffs())
        if (delta1(inverse(u), chi) == 1) sym.emplace(u, k);

    PsiImage out{st,
                 psi_transport(st, phi_basis_coeffs(phi_chi(p, r, chi))).reduce_v(q0),
                 (Scalar::v_pow(d - n) * kM).reduce_v(q0),
                 psi_transport(st, sym),
                 Scalar::v_pow(d - n) * kM,
                 false};
    if (out.symbolic != out.expected_symbolic)
        throw std::logic_error("psi_image_of_phi: symbolic image " + out.symbolic.str() + " differs from " +
                               out.expected_symbolic.str());
    if (out.image != out.expected)
        throw std::logic_error("psi_image_of_phi: image " + out.image.str() + " differs from " + out.expected.str());
    out.central = HM.is_central(out.image, q0) && HM.is_central(out.symbolic);
    if (!out.central) throw std::logic_error("psi_image_of_phi: image is not central in H(M)");
    return out;
}

// -------------------------------------------------------------- spectral

Scalar substitute_v_power(const Scalar& s, int k) {
    Scalar out;
    for (const auto& [e, c] : s.terms()) out += Scalar::monomial(c, e * k);
    return out;
}

Scalar spectral_scalar(const LanglandsParamData& param) {
    CharStabilizer st = stabilizer(param.chi);
    if (static_cast<int>(param.eta.size()) != param.chi.d()) throw std::invalid_argument("spectral_scalar: eta has wrong length");
    if (st.trivial_block.empty()) return Scalar();
    int d = param.chi.d();
    Scalar sum;
    for (const std::vector<int>& nu : levi_orbit(st.levi, st.mu1_star_vec())) {
        Scalar term(1);
        for (int j = 0; j < d; ++j) {
            int e = param.r * nu[static_cast<std::size_t>(j)];
            if (e > 0) term *= param.eta[static_cast<std::size_t>(j)].pow(e);
            if (e < 0) term *= param.eta[static_cast<std::size_t>(j)].inverse().pow(-e);
        }
        sum += term;
    }
    return (Scalar::v_pow(param.r * (d - 1)) * sum).reduce_v(Rational(param.p));
}

SymLaurent spectral_center_coeffs(int p, int r, const DepthZeroChar& chi) {
    CharStabilizer st = stabilizer(chi);
    if (st.trivial_block.empty()) return SymLaurent(st.levi, {});
    Rational q0(ipow(p, r));
    PsiImage img = psi_image_of_phi(p, r, chi);
    HeckeAlgebra HM(st.levi);
    SymLaurent c = HM.bernstein_coeffs(img.image, q0);
    // v_r = p^{r/2} becomes v^r with v = p^{1/2}
    SymLaurent::Map terms;
    for (const auto& [lambda, s] : c.terms()) terms.emplace(lambda, substitute_v_power(s, r).reduce_v(Rational(p)));
    return SymLaurent(c.group(), terms);
}

Scalar spectral_scalar_via_center(const SymLaurent& coeffs, const LanglandsParamData& param) {
    if (coeffs.terms().empty()) return Scalar();
    return eval_central(base_change(coeffs, param.r), param.eta).reduce_v(Rational(param.p));
}

Scalar spectral_scalar_via_center(const LanglandsParamData& param) {
    return spectral_scalar_via_center(spectral_center_coeffs(param.p, param.r, param.chi), param);
}

LssFactor lss_factor(const LanglandsParamData& param, int R) {
    if (R < 1) throw std::invalid_argument("lss_factor: precision must be at least 1");
    if (static_cast<int>(param.eta.size()) != param.chi.d()) throw std::invalid_argument("lss_factor: eta has wrong length");
    CharStabilizer st = stabilizer(param.chi);
    LssFactor L;
    for (int j : st.trivial_block) L.eigenvalues.push_back(param.eta[static_cast<std::size_t>(j)].inverse());

    L.denominator = {Scalar(1)};
    for (const Scalar& a : L.eigenvalues) {
        std::vector<Scalar> next(L.denominator.size() + 1);
        for (std::size_t k = 0; k < L.denominator.size(); ++k) {
            next[k] += L.denominator[k];
            next[k + 1] -= a * L.denominator[k];
        }
        L.denominator = std::move(next);
    }
    auto den = [&](int k) { return k < static_cast<int>(L.denominator.size()) ? L.denominator[static_cast<std::size_t>(k)] : Scalar(); };

    L.det_series.assign(static_cast<std::size_t>(R + 1), Scalar());
    L.det_series[0] = Scalar(1);
    for (int n = 1; n <= R; ++n)
        for (int k = 1; k <= n; ++k) L.det_series[static_cast<std::size_t>(n)] -= den(k) * L.det_series[static_cast<std::size_t>(n - k)];

    L.traces.assign(static_cast<std::size_t>(R + 1), Scalar());
    for (int k = 0; k <= R; ++k)
        for (const Scalar& a : L.eigenvalues) L.traces[static_cast<std::size_t>(k)] += a.pow(k);

    // n L_n = sum_{k=1}^n Tr(A^k) L_{n-k}
    L.exp_series.assign(static_cast<std::size_t>(R + 1), Scalar());
    L.exp_series[0] = Scalar(1);
    for (int n = 1; n <= R; ++n) {
        Scalar acc;
        for (int k = 1; k <= n; ++k) acc += L.traces[static_cast<std::size_t>(k)] * L.exp_series[static_cast<std::size_t>(n - k)];
        L.exp_series[static_cast<std::size_t>(n)] = Scalar(Rational(1, n)) * acc;
    }
    if (L.det_series != L.exp_series) throw std::logic_error("lss_factor: det(1 - Au)^-1 and exp(sum Tr(A^k) u^k / k) differ");
    return L;
}

// ---------------------------------------------------------- trace of Frobenius

Cyclo trace_frobenius_eval(const TestFunction& phi, const ExtAffElem& w, const std::vector<long>& t_x) {
    if (!phi.chi()) throw std::invalid_argument("trace_frobenius_eval: phi must carry its character");
    const DepthZeroChar& chi = *phi.chi();
    const TorusLogs& T = phi.torus();
    int d = phi.d();
    if (static_cast<int>(t_x.size()) != d) throw std::invalid_argument("trace_frobenius_eval: t_x has wrong length");
    CriticalSet S = critical_indices(w);
    long m = phi.p() - 1;
    long fiber = T.modulus() / m;  // N_r(g^{a + k(p-1)}) does not depend on k

    std::vector<long> tx(t_x.size());
    for (int j = 0; j < d; ++j) tx[static_cast<std::size_t>(j)] = S.contains(j) ? 0 : mod(t_x[static_cast<std::size_t>(j)], m);

    std::vector<std::vector<long>> choices(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        std::set<long> c;
        if (S.contains(j)) {
            c = {0, 1 % T.modulus(), T.modulus() - 1};
        } else {
            for (long k : {0L, 1L, fiber - 1}) c.insert(mod(tx[static_cast<std::size_t>(j)] + k * m, T.modulus()));
        }
        choices[static_cast<std::size_t>(j)].assign(c.begin(), c.end());
    }

    ExtAffElem u = inverse(w);
    std::optional<Cyclo> value;
    std::vector<std::size_t> pos(static_cast<std::size_t>(d), 0);
    while (true) {
        std::vector<long> t_inv(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) t_inv[static_cast<std::size_t>(j)] = -choices[static_cast<std::size_t>(j)][pos[static_cast<std::size_t>(j)]];
        Cyclo val = phi.at(t_inv, u);
        if (value && *value != val) throw std::logic_error("trace_frobenius_eval: value depends on the lift of t_x");
        value = val;
        int j = 0;
        while (j < d && ++pos[static_cast<std::size_t>(j)] == choices[static_cast<std::size_t>(j)].size()) pos[static_cast<std::size_t>(j++)] = 0;
        if (j == d) break;
    }

    Rational q0 = phi.q();
    Cyclo factored = delta1(w, chi) == 0 ? Cyclo() : chi.value(tx) * Cyclo((Rational(1) - q0).pow(S.size() - 1));
    if (*value != factored) throw std::logic_error("trace_frobenius_eval: phi value differs from the factored trace");
    return *value;
}

Cyclo trace_frobenius_eval(int p, int r, const ExtAffElem& w, const std::vector<long>& t_x, const DepthZeroChar& chi) {
    return trace_frobenius_eval(phi_chi(p, r, chi), w, t_x);
}

}  // namespace gamma1
