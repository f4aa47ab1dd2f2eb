#include "gamma1/verify.hpp"

#include "gamma1/admissible.hpp"
#include "gamma1/testfcn.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace gamma1 {

namespace {

class Runner {
public:
    explicit Runner(std::string name) : start_(std::chrono::steady_clock::now()) { res_.name = std::move(name); }

    void check(bool ok, const std::string& what) {
        ++res_.checks;
        if (!ok && res_.failures.size() < 50) res_.failures.push_back(what);
    }
    // Runs body; an exception counts as one failed check.
    void guard(const std::string& what, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
        }
    }
    SuiteResult finish() {
        res_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return res_;
    }

private:
    SuiteResult res_;
    std::chrono::steady_clock::time_point start_;
};

std::vector<std::vector<int>> permutations(int d) {
    std::vector<int> p(static_cast<std::size_t>(d));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::string cfg_str(const VerifyConfig& c) {
    return "d=" + std::to_string(c.d) + " p=" + std::to_string(c.p) + " r=" + std::to_string(c.r);
}

Scalar random_eta(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(1, 9), den(1, 5), sign(0, 1), vexp(-2, 2);
    Rational c(num(rng) * (sign(rng) ? 1 : -1), den(rng));
    return Scalar::monomial(Cyclo(c), static_cast<int>(vexp(rng)));
}

}  // namespace

SuiteResult verify_adm(const VerifyConfig& cfg) {
    Runner R("adm");
    int d = cfg.d;
    R.guard("adm " + cfg_str(cfg), [&] {
        std::vector<ExtAffElem> adm = adm_set(d), perm = perm_set(d), cyc = cycle_classification(d);
        R.check(static_cast<long>(adm.size()) == (1L << d) - 1, "|Adm| != 2^d - 1");
        R.check(std::set<ExtAffElem>(adm.begin(), adm.end()) == std::set<ExtAffElem>(perm.begin(), perm.end()), "Adm != Perm");
        R.check(std::set<ExtAffElem>(adm.begin(), adm.end()) == std::set<ExtAffElem>(cyc.begin(), cyc.end()),
                "Adm != cycle classification");
        for (const ExtAffElem& w : adm) {
            CriticalSet S = critical_indices(w);
            R.check(codim(w) == S.size() - 1, "codim != |S| - 1 at " + w.str());
            R.check(element_of_subset(S) == w, "w_S(w) != w at " + w.str());
        }
        for (const ExtAffElem& x : adm)
            for (const ExtAffElem& y : adm) {
                auto [bruhat, incl] = bruhat_vs_S(x, y);
                R.check(bruhat == incl, "Bruhat order vs reverse inclusion at " + x.str() + ", " + y.str());
            }
        for (const LeviDatum& L : LeviDatum::all(d))
            for (int b = 0; b < static_cast<int>(L.blocks().size()); ++b)
                R.check(levi_adm_G_side(L, b) == levi_adm_M_side(L, b), "Adm^G(O_nu) != Adm^M(nu) for " + L.str());
        StrataPoset P = strata_poset(d);
        R.check(P.strata.size() == adm.size(), "strata count");
    });
    return R.finish();
}

SuiteResult verify_hecke(const VerifyConfig& cfg) {
    Runner R("hecke");
    int d = cfg.d;
    R.guard("hecke " + cfg_str(cfg), [&] {
        HeckeAlgebra H(d);
        const HeckeElem& k = kottwitz_mu0(d);
        std::vector<ExtAffElem> adm = adm_set(d);
        R.check(k.support() == adm, "supp k_{mu_0} != Adm(mu_0)");
        for (const ExtAffElem& w : adm) {
            Scalar expect = (Scalar(1) - Scalar::q()).pow(critical_indices(w).size() - 1);
            R.check(k.coeff(w) == expect, "k_{mu_0}(w) != (1-q)^{|S|-1} at " + w.str());
        }
        std::vector<int> mu0(static_cast<std::size_t>(d), 0);
        mu0[0] = 1;
        HeckeElem z = H.z_mu(mu0);
        for (const auto& c : permutations(d)) R.check(H.z_mu_chamber(mu0, c) == z, "z depends on the chamber");
        if (d <= 3)
            for (const auto& c : permutations(d))
                for (int a = -1; a <= 1; ++a)
                    for (int j = 0; j < d; ++j) {
                        std::vector<int> lam(static_cast<std::size_t>(d), 0);
                        lam[static_cast<std::size_t>(j)] = a;
                        if (j + 1 < d) lam[static_cast<std::size_t>(j + 1)] = -a;
                        R.check(H.theta(lam, c) == H.theta_fast(lam, c), "theta vs alcove walk");
                    }
        R.check(H.is_central(k), "k_{mu_0} is not central");
        for (std::uint32_t mask = 1; mask < (1U << d); ++mask) {
            CriticalSet S{d, mask};
            Numerology n = nearby_cycle_numerology(S, 0, Scalar::q());
            R.check(n.ss_trace == (Scalar(1) - Scalar::q()).pow(S.size() - 1), "numerology at " + S.str());
        }
    });
    return R.finish();
}

SuiteResult verify_testfn(const VerifyConfig& cfg) {
    Runner R("testfn");
    int d = cfg.d, p = cfg.p, r = cfg.r;
    R.guard("testfn " + cfg_str(cfg), [&] {
        TestFunction one = phi_one_sum(p, r, d);
        R.check(one == phi_one_explicit(p, r, d), "phi_one_sum != phi_one_explicit");
        for (const DepthZeroChar& chi : DepthZeroChar::all(p, d)) {
            TestFunction f = phi_chi(p, r, chi);
            R.check(project_component(one, chi) == f.to_measure(Measure::Iplus), "e_chi phi_{r,1} != (q-1)^-d phi_{r,chi} at " + chi.str());
            if (!stabilizer(chi).trivial_block.empty()) {
                PsiImage img = psi_image_of_phi(p, r, chi);
                R.check(img.image == img.expected && img.central, "Psi image at " + chi.str());
            } else {
                R.check(f.nonzero_count() == 0, "phi_{r,chi} != 0 without trivial component at " + chi.str());
            }
            TorusLogs Q(p, 1, d);
            for (const ExtAffElem& w : adm_set(d))
                for (std::size_t i = 0; i < Q.order(); ++i)
                    R.guard("trace of Frobenius at " + w.str() + ", chi = " + chi.str(), [&] {
                        trace_frobenius_eval(f, w, Q.logs(i));
                        R.check(true, "");
                    });
        }
        IdempotentReport rep = check_idempotents(p, r, d, false);
        R.check(rep.orthogonal, "idempotents not orthogonal");
        R.check(rep.complete, "idempotents not complete");
        R.check(rep.conjugation, "idempotent conjugation rule");
    });
    return R.finish();
}

SuiteResult verify_spectral(const VerifyConfig& cfg) {
    Runner R("spectral");
    int d = cfg.d, p = cfg.p, r = cfg.r;
    R.guard("spectral " + cfg_str(cfg), [&] {
        std::mt19937_64 rng(cfg.seed);
        std::vector<DepthZeroChar> chars = DepthZeroChar::all(p, d);
        for (const DepthZeroChar& chi : chars) {
            SymLaurent coeffs = spectral_center_coeffs(p, r, chi);
            for (int k = 0; k < 5; ++k) {
                std::vector<Scalar> eta;
                for (int j = 0; j < d; ++j) eta.push_back(random_eta(rng));
                LanglandsParamData P{chi, eta, p, r};
                Scalar s = spectral_scalar(P);
                R.check(s == spectral_scalar_via_center(coeffs, P), "spectral routes differ at " + chi.str());
                LssFactor L = lss_factor(P, std::max(6, r));
                Scalar tr = (Scalar::v_pow(r * (d - 1)) * L.traces[static_cast<std::size_t>(r)]).reduce_v(Rational(p));
                R.check(tr == s, "v^{r(d-1)} Tr(A^r) != spectral scalar at " + chi.str());
            }
        }
    });
    return R.finish();
}

std::vector<SuiteResult> run_suites(const std::string& suite, const VerifyConfig& cfg) {
    if (suite == "adm") return {verify_adm(cfg)};
    if (suite == "hecke") return {verify_hecke(cfg)};
    if (suite == "testfn") return {verify_testfn(cfg)};
    if (suite == "spectral") return {verify_spectral(cfg)};
    if (suite == "all") return {verify_adm(cfg), verify_hecke(cfg), verify_testfn(cfg), verify_spectral(cfg)};
    throw std::invalid_argument("unknown suite " + suite);
}

}  // namespace gamma1
