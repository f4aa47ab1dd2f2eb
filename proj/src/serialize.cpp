#include "gamma1/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace gamma1 {

using nlohmann::json;

namespace {

std::string join(const std::vector<int>& v, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? std::string(1, sep) : "") << v[i];
    return os.str();
}

std::string lambda_field(const ExtAffElem& w) { return join(w.lambda_vec(), ' '); }

std::string perm_field(const ExtAffElem& w) {
    std::vector<int> p = w.perm_vec();
    for (int& x : p) ++x;
    return join(p, ' ');
}

std::vector<int> one_based(const CriticalSet& S) {
    std::vector<int> out = S.indices();
    for (int& x : out) ++x;
    return out;
}

CriticalSet from_one_based(int d, std::vector<int> idx) {
    for (int& x : idx) {
        if (x < 1 || x > d) throw std::invalid_argument("critical index out of range");
        --x;
    }
    return CriticalSet::from_indices(d, idx);
}

// Quote for CSV when the field contains a separator.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

// ------------------------------------------------------------- ExtAffElem

void to_json(json& j, const ExtAffElem& w) {
    std::vector<int> p = w.perm_vec();
    for (int& x : p) ++x;
    j = json{{"lambda", w.lambda_vec()}, {"perm", p}};
}

void from_json(const json& j, ExtAffElem& w) {
    std::vector<int> lambda = j.at("lambda").get<std::vector<int>>();
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    if (lambda.size() != perm.size()) throw std::invalid_argument("ExtAffElem: lambda and perm differ in length");
    for (int& x : perm) --x;
    w = ExtAffElem::make(lambda, perm);
}

// ------------------------------------------------------------------ Adm

std::vector<AdmRecord> adm_records(int d) {
    const AffineWeyl& W = gl(d);
    const HeckeElem& k = kottwitz_mu0(d);
    std::vector<AdmRecord> out;
    for (const ExtAffElem& w : adm_set(d)) {
        AdmRecord r;
        r.w = w;
        r.word = W.omega_decompose(w).word;
        r.length = W.length(w);
        r.S = critical_indices(w);
        r.codim = codim(w);
        r.k = k.coeff(w);
        out.push_back(std::move(r));
    }
    return out;
}

void to_json(json& j, const AdmRecord& r) {
    j = json{{"w", r.w}, {"word", r.word}, {"length", r.length}, {"S", one_based(r.S)}, {"codim", r.codim}, {"k", r.k.str()}};
}

void from_json(const json& j, AdmRecord& r) {
    r.w = j.at("w").get<ExtAffElem>();
    r.word = j.at("word").get<std::vector<int>>();
    r.length = j.at("length").get<int>();
    r.S = from_one_based(r.w.rank(), j.at("S").get<std::vector<int>>());
    r.codim = j.at("codim").get<int>();
    r.k = Scalar::parse(j.at("k").get<std::string>());
}

std::string adm_csv_header() { return "w_lambda,w_perm,length,word,S,codim,k"; }

std::string adm_csv_row(const AdmRecord& r) {
    std::ostringstream os;
    os << lambda_field(r.w) << ',' << perm_field(r.w) << ',' << r.length << ',' << join(r.word, ' ') << ','
       << join(one_based(r.S), ' ') << ',' << r.codim << ',' << csv_field(r.k.str());
    return os.str();
}

// ------------------------------------------------------------- Kottwitz

KottwitzDocument kottwitz_document(int d, std::optional<Rational> q) {
    KottwitzDocument doc;
    doc.d = d;
    doc.q = q;
    for (const auto& [w, c] : kottwitz_mu0(d).coeffs()) doc.records.push_back({w, q ? c.specialize_q(*q) : c});
    return doc;
}

void to_json(json& j, const KottwitzDocument& doc) {
    json recs = json::array();
    for (const KottwitzRecord& r : doc.records) recs.push_back({{"w", r.w}, {"k", r.k.str()}});
    j = json{{"header", {{"d", doc.d}, {"q", doc.q ? json(doc.q->str()) : json(nullptr)}}}, {"records", recs}};
}

void from_json(const json& j, KottwitzDocument& doc) {
    const json& h = j.at("header");
    doc.d = h.at("d").get<int>();
    doc.q = h.at("q").is_null() ? std::nullopt : std::optional<Rational>(Rational::parse(h.at("q").get<std::string>()));
    doc.records.clear();
    for (const json& r : j.at("records"))
        doc.records.push_back({r.at("w").get<ExtAffElem>(), Scalar::parse(r.at("k").get<std::string>())});
}

std::string kottwitz_csv_header() { return "w_lambda,w_perm,k"; }

std::string kottwitz_csv_row(const KottwitzRecord& r) {
    return lambda_field(r.w) + ',' + perm_field(r.w) + ',' + csv_field(r.k.str());
}

// --------------------------------------------------------- test functions

TestFnDocument testfn_document(const TestFunction& f) {
    TestFnDocument doc;
    doc.p = f.p();
    doc.r = f.r();
    doc.d = f.d();
    doc.measure = f.measure();
    if (f.chi()) doc.chi = f.chi()->exps();
    doc.modulus = f.p() - 1;
    for (const auto& [u, vals] : f.values())
        for (std::size_t t = 0; t < vals.size(); ++t)
            if (!vals[t].is_zero()) doc.records.push_back({f.torus().logs(t), u, vals[t]});
    return doc;
}

void to_json(json& j, const TestFnDocument& doc) {
    json recs = json::array();
    for (const TestFnRecord& r : doc.records) recs.push_back({{"t", r.t}, {"w", r.w}, {"value", Scalar(r.value).str()}});
    json header{{"p", doc.p}, {"r", doc.r}, {"d", doc.d}, {"measure", to_string(doc.measure)}, {"modulus", doc.modulus},
                {"chi", doc.chi ? json(*doc.chi) : json(nullptr)}};
    j = json{{"header", header}, {"records", recs}};
}

void from_json(const json& j, TestFnDocument& doc) {
    const json& h = j.at("header");
    doc.p = h.at("p").get<int>();
    doc.r = h.at("r").get<int>();
    doc.d = h.at("d").get<int>();
    std::string m = h.at("measure").get<std::string>();
    if (m != "I" && m != "I+") throw std::invalid_argument("unknown measure tag " + m);
    doc.measure = m == "I" ? Measure::I : Measure::Iplus;
    doc.modulus = h.at("modulus").get<int>();
    doc.chi = h.at("chi").is_null() ? std::nullopt : std::optional<std::vector<long>>(h.at("chi").get<std::vector<long>>());
    doc.records.clear();
    for (const json& r : j.at("records")) {
        Scalar s = Scalar::parse(r.at("value").get<std::string>(), doc.modulus);
        if (!s.is_constant()) throw std::invalid_argument("test function value depends on v");
        doc.records.push_back({r.at("t").get<std::vector<long>>(), r.at("w").get<ExtAffElem>(), s.constant_term()});
    }
}

std::string testfn_csv_header() { return "t,w_lambda,w_perm,value"; }

std::string testfn_csv_row(const TestFnRecord& r) {
    std::vector<int> t(r.t.begin(), r.t.end());
    return join(t, ' ') + ',' + lambda_field(r.w) + ',' + perm_field(r.w) + ',' + csv_field(Scalar(r.value).str());
}

// --------------------------------------------------------------- strata

bool operator==(const StrataDocument& a, const StrataDocument& b) {
    if (a.d != b.d || a.covers != b.covers || a.strata.size() != b.strata.size()) return false;
    for (std::size_t i = 0; i < a.strata.size(); ++i)
        if (a.strata[i].S != b.strata[i].S || a.strata[i].w != b.strata[i].w || a.strata[i].codim != b.strata[i].codim)
            return false;
    return true;
}

StrataDocument strata_document(int d) {
    StrataPoset P = strata_poset(d);
    return {d, P.strata, P.covers};
}

void to_json(json& j, const StrataDocument& doc) {
    json strata = json::array();
    for (const Stratum& s : doc.strata) strata.push_back({{"S", one_based(s.S)}, {"w", s.w}, {"codim", s.codim}});
    json covers = json::array();
    for (const auto& [a, b] : doc.covers) covers.push_back({a, b});
    j = json{{"d", doc.d}, {"strata", strata}, {"covers", covers}};
}

void from_json(const json& j, StrataDocument& doc) {
    doc.d = j.at("d").get<int>();
    doc.strata.clear();
    for (const json& s : j.at("strata"))
        doc.strata.push_back({from_one_based(doc.d, s.at("S").get<std::vector<int>>()), s.at("w").get<ExtAffElem>(),
                              s.at("codim").get<int>()});
    doc.covers.clear();
    for (const json& c : j.at("covers")) doc.covers.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
}

std::string strata_dot(const StrataDocument& doc) {
    std::ostringstream os;
    os << "digraph strata {\n  rankdir=TB;\n";
    for (std::size_t i = 0; i < doc.strata.size(); ++i) {
        const Stratum& s = doc.strata[i];
        os << "  n" << i << " [label=\"S=" << s.S.str() << "\\ncodim " << s.codim << "\"];\n";
    }
    for (const auto& [a, b] : doc.covers) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace gamma1
