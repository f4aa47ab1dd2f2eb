#pragma once

#include "gamma1/admissible.hpp"
#include "gamma1/testfcn.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gamma1 {

// ExtAffElem <-> {"lambda": [...], "perm": [...]} with perm 1-based.
void to_json(nlohmann::json& j, const ExtAffElem& w);
void from_json(const nlohmann::json& j, ExtAffElem& w);

// One row per element of Adm(mu_0).
struct AdmRecord {
    ExtAffElem w;
    std::vector<int> word;  // reduced word in the simple affine reflections, before omega
    int length = 0;
    CriticalSet S;
    int codim = 0;
    Scalar k;  // k_{mu_0}(w), symbolic in q
    friend bool operator==(const AdmRecord&, const AdmRecord&) = default;
};
std::vector<AdmRecord> adm_records(int d);
void to_json(nlohmann::json& j, const AdmRecord& r);
void from_json(const nlohmann::json& j, AdmRecord& r);
// w_lambda,w_perm,length,word,S,codim,k
std::string adm_csv_header();
std::string adm_csv_row(const AdmRecord& r);

struct KottwitzRecord {
    ExtAffElem w;
    Scalar k;  // symbolic, or a constant when q was substituted
    friend bool operator==(const KottwitzRecord&, const KottwitzRecord&) = default;
};
struct KottwitzDocument {
    int d = 0;
    std::optional<Rational> q;
    std::vector<KottwitzRecord> records;
    friend bool operator==(const KottwitzDocument&, const KottwitzDocument&) = default;
};
KottwitzDocument kottwitz_document(int d, std::optional<Rational> q);
void to_json(nlohmann::json& j, const KottwitzDocument& doc);
void from_json(const nlohmann::json& j, KottwitzDocument& doc);
// w_lambda,w_perm,k
std::string kottwitz_csv_header();
std::string kottwitz_csv_row(const KottwitzRecord& r);

struct TestFnRecord {
    std::vector<long> t;  // discrete logs over k_r
    ExtAffElem w;         // the Weyl part u of t u
    Cyclo value;
    friend bool operator==(const TestFnRecord&, const TestFnRecord&) = default;
};
// Header carries the cyclotomic modulus once; values are polynomials in z.
struct TestFnDocument {
    int p = 0, r = 0, d = 0;
    Measure measure = Measure::I;
    std::optional<std::vector<long>> chi;  // exponents, absent for phi_{r,1}
    int modulus = 1;
    std::vector<TestFnRecord> records;     // nonzero values only
    friend bool operator==(const TestFnDocument&, const TestFnDocument&) = default;
};
TestFnDocument testfn_document(const TestFunction& f);
void to_json(nlohmann::json& j, const TestFnDocument& doc);
void from_json(const nlohmann::json& j, TestFnDocument& doc);
// t,w_lambda,w_perm,value
std::string testfn_csv_header();
std::string testfn_csv_row(const TestFnRecord& r);

struct StrataDocument {
    int d = 0;
    std::vector<Stratum> strata;
    std::vector<std::pair<int, int>> covers;
};
bool operator==(const StrataDocument& a, const StrataDocument& b);
StrataDocument strata_document(int d);
void to_json(nlohmann::json& j, const StrataDocument& doc);
void from_json(const nlohmann::json& j, StrataDocument& doc);
// Hasse diagram: one node per S, edges from each stratum to its codim-one boundary strata.
std::string strata_dot(const StrataDocument& doc);

}  // namespace gamma1
