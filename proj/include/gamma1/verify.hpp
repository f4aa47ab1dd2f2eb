#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gamma1 {

struct VerifyConfig {
    int d = 3;
    int p = 3;
    int r = 1;
    std::uint64_t seed = 1;
};

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;
    double seconds = 0;
    bool passed() const { return failures.empty() && checks > 0; }
};

// adm: |Adm| = 2^d - 1, Adm = Perm = cycle classification, critical-index
//      routes, codim, Bruhat order vs inclusion of S, Levi admissible sets.
// hecke: supp k = Adm with (1-q)^{|S|-1}, chamber independence of z,
//        theta vs its alcove walk, centrality, nearby-cycle numerology.
// testfn: phi_{r,1} sum vs closed form, projections, Psi images,
//         idempotents, trace of Frobenius.
// spectral: both routes of the spectral scalar and the L^ss identity for
//           seeded random Satake parameters.
SuiteResult verify_adm(const VerifyConfig& cfg);
SuiteResult verify_hecke(const VerifyConfig& cfg);
SuiteResult verify_testfn(const VerifyConfig& cfg);
SuiteResult verify_spectral(const VerifyConfig& cfg);

// suite in {all, adm, hecke, testfn, spectral}; throws std::invalid_argument otherwise.
std::vector<SuiteResult> run_suites(const std::string& suite, const VerifyConfig& cfg);

}  // namespace gamma1
