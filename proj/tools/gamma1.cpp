// gamma1: command-line front end for the Gamma_1(p)-level combinatorics library.
//
// Exit codes: 0 success, 1 a verification or internal consistency check
// failed, 2 usage error.

#include "gamma1/figure.hpp"
#include "gamma1/serialize.hpp"
#include "gamma1/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace gamma1;
using nlohmann::json;

namespace {

constexpr const char* kOutputDirEnv = "GAMMA1_OUTPUT_DIR";
constexpr const char* kSeedEnv = "GAMMA1_SEED";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int d = 3;
    int p = 3;
    int r = 1;
    std::string chi;
    std::string eta;
    std::string format = "text";
    std::string output;
    std::string suite = "all";
    std::string levi;
    std::string q;
    int nu = 0;
    int order = 6;
    bool symbolic = false;
    bool dot = false;
    bool force = false;
    std::uint64_t seed = 1;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

std::vector<long> parse_exponents(const std::string& s, int d) {
    std::vector<long> out;
    for (const std::string& x : split(s, ',')) {
        try {
            out.push_back(std::stol(x));
        } catch (const std::exception&) {
            throw UsageError("--chi: not an integer: '" + x + "'");
        }
    }
    if (static_cast<int>(out.size()) != d) throw UsageError("--chi needs exactly d = " + std::to_string(d) + " exponents");
    return out;
}

std::vector<Scalar> parse_eta(const std::string& s, int d) {
    std::vector<Scalar> out;
    for (const std::string& x : split(s, ',')) {
        Scalar v;
        try {
            v = Scalar::parse(x);
        } catch (const std::exception& e) {
            throw UsageError("--eta: cannot parse '" + x + "': " + e.what());
        }
        if (v.is_zero() || v.terms().size() != 1) throw UsageError("--eta entries must be nonzero monomials c*v^k");
        out.push_back(v);
    }
    if (static_cast<int>(out.size()) != d) throw UsageError("--eta needs exactly d = " + std::to_string(d) + " entries");
    return out;
}

// "1|2,3" -> blocks {0}{1,2}
LeviDatum parse_levi(const std::string& s, int d) {
    if (s.empty()) return LeviDatum::full(d);
    std::vector<std::vector<int>> blocks;
    for (const std::string& b : split(s, '|')) {
        std::vector<int> blk;
        for (const std::string& x : split(b, ',')) {
            try {
                blk.push_back(std::stoi(x) - 1);
            } catch (const std::exception&) {
                throw UsageError("--levi: not an index: '" + x + "'");
            }
        }
        blocks.push_back(blk);
    }
    try {
        return LeviDatum(d, blocks);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--levi: ") + e.what());
    }
}

void validate_common(const Options& o) {
    if (o.d < 1) throw UsageError("--d must be at least 1");
    if (o.d > kMaxRank) throw UsageError("--d must be at most " + std::to_string(kMaxRank));
}

void validate_prime(const Options& o) {
    if (!is_prime(o.p)) throw UsageError("--p must be prime");
    if (o.r < 1) throw UsageError("--r must be at least 1");
}

void validate_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (o.format == a) return;
    throw UsageError("unsupported --format " + o.format);
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::filesystem::path path(o.output);
    if (const char* dir = std::getenv(kOutputDirEnv); dir && path.is_relative()) path = std::filesystem::path(dir) / path;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

long checked_power(long base, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > 1000000000000L / std::max(base, 1L)) return 1000000000000L;
        r *= base;
    }
    return r;
}

// ------------------------------------------------------------ subcommands

int cmd_adm(const Options& o) {
    validate_common(o);
    validate_format(o, {"text", "json", "csv"});
    if (o.d > 8 && !o.force) throw UsageError("refusing d > 8 for adm without --force");
    std::vector<AdmRecord> recs = adm_records(o.d);
    std::ostringstream os;
    if (o.format == "json") {
        os << json(recs).dump(2) << '\n';
    } else if (o.format == "csv") {
        os << adm_csv_header() << '\n';
        for (const AdmRecord& r : recs) os << adm_csv_row(r) << '\n';
    } else {
        os << "# Adm(mu_0) for GL_" << o.d << ": " << recs.size() << " elements\n";
        for (const AdmRecord& r : recs)
            os << r.w.str() << "  l=" << r.length << "  S=" << r.S.str() << "  codim=" << r.codim << "  k=" << r.k.str() << '\n';
    }
    emit(o, os.str());
    return 0;
}

int cmd_strata(const Options& o) {
    validate_common(o);
    validate_format(o, {"text", "json", "csv"});
    if (o.d > 8 && !o.force) throw UsageError("refusing d > 8 for strata without --force");
    StrataDocument doc = strata_document(o.d);
    std::ostringstream os;
    if (o.dot) {
        os << strata_dot(doc);
    } else if (o.format == "json") {
        os << json(doc).dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "index,S,w_lambda,w_perm,codim\n";
        for (std::size_t i = 0; i < doc.strata.size(); ++i) {
            json w = doc.strata[i].w;
            std::string lam, perm;
            for (int x : w["lambda"]) lam += (lam.empty() ? "" : " ") + std::to_string(x);
            for (int x : w["perm"]) perm += (perm.empty() ? "" : " ") + std::to_string(x);
            std::string S;
            for (int j : doc.strata[i].S.indices()) S += (S.empty() ? "" : " ") + std::to_string(j + 1);
            os << i << ',' << S << ',' << lam << ',' << perm << ',' << doc.strata[i].codim << '\n';
        }
    } else {
        for (std::size_t i = 0; i < doc.strata.size(); ++i)
            os << i << "  S=" << doc.strata[i].S.str() << "  w=" << doc.strata[i].w.str() << "  codim=" << doc.strata[i].codim << '\n';
        for (const auto& [a, b] : doc.covers) os << a << " -> " << b << '\n';
    }
    emit(o, os.str());
    return 0;
}

int cmd_kottwitz(const Options& o) {
    validate_common(o);
    validate_format(o, {"text", "json", "csv"});
    if (o.d > 4 && !o.force) throw UsageError("refusing symbolic Hecke products for d > 4 without --force");
    if (o.symbolic && !o.q.empty()) throw UsageError("--q and --symbolic are exclusive");
    std::optional<Rational> q;
    if (!o.q.empty()) {
        try {
            q = Rational::parse(o.q);
        } catch (const std::exception& e) {
            throw UsageError("--q: " + std::string(e.what()));
        }
    }
    KottwitzDocument doc = kottwitz_document(o.d, q);
    std::ostringstream os;
    if (o.format == "json") {
        os << json(doc).dump(2) << '\n';
    } else if (o.format == "csv") {
        os << kottwitz_csv_header() << '\n';
        for (const KottwitzRecord& r : doc.records) os << kottwitz_csv_row(r) << '\n';
    } else {
        for (const KottwitzRecord& r : doc.records) os << r.w.str() << "  " << r.k.str() << '\n';
    }
    emit(o, os.str());
    return 0;
}

int cmd_testfn(const Options& o) {
    validate_common(o);
    validate_prime(o);
    validate_format(o, {"text", "json", "csv"});
    if (!o.force) {
        if (o.chi.empty() && checked_power(o.p - 1, o.d) > 1000000)
            throw UsageError("refusing (p-1)^d > 10^6 characters for phi_{r,1} without --force");
        if (checked_power(checked_power(o.p, o.r) - 1, o.d) > 10000000)
            throw UsageError("refusing |T(k_r)| > 10^7 dense values without --force");
    }
    TestFunction f = o.chi.empty() ? phi_one_sum(o.p, o.r, o.d) : phi_chi(o.p, o.r, DepthZeroChar(o.p, parse_exponents(o.chi, o.d)));
    TestFnDocument doc = testfn_document(f);
    std::ostringstream os;
    if (o.format == "json") {
        os << json(doc).dump(2) << '\n';
    } else if (o.format == "csv") {
        os << "# modulus " << doc.modulus << ", measure " << to_string(doc.measure) << '\n' << testfn_csv_header() << '\n';
        for (const TestFnRecord& r : doc.records) os << testfn_csv_row(r) << '\n';
    } else {
        os << "# p=" << doc.p << " r=" << doc.r << " d=" << doc.d << " measure=" << to_string(doc.measure) << " modulus=" << doc.modulus
           << " nonzero=" << doc.records.size() << '\n';
        for (const TestFnRecord& r : doc.records) {
            os << "t=(";
            for (std::size_t j = 0; j < r.t.size(); ++j) os << (j ? "," : "") << r.t[j];
            os << ")  w=" << r.w.str() << "  " << Scalar(r.value).str() << '\n';
        }
    }
    emit(o, os.str());
    return 0;
}

int cmd_verify(const Options& o) {
    validate_common(o);
    validate_prime(o);
    if (o.d > 4 && !o.force && (o.suite == "all" || o.suite == "hecke" || o.suite == "testfn" || o.suite == "spectral"))
        throw UsageError("refusing symbolic Hecke products for d > 4 without --force");
    if (!o.force && (o.suite == "all" || o.suite == "testfn") && checked_power(o.p - 1, o.d) > 1000000)
        throw UsageError("refusing (p-1)^d > 10^6 characters without --force");
    VerifyConfig cfg{o.d, o.p, o.r, o.seed};
    std::vector<SuiteResult> results;
    try {
        results = run_suites(o.suite, cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool ok = true;
    for (const SuiteResult& s : results) {
        std::printf("%s %-8s checks=%ld time=%.3fs\n", s.passed() ? "PASS" : "FAIL", s.name.c_str(), s.checks, s.seconds);
        for (const std::string& f : s.failures) std::printf("    %s\n", f.c_str());
        ok = ok && s.passed();
    }
    return ok ? 0 : 1;
}

int cmd_lfactor(const Options& o) {
    validate_common(o);
    validate_prime(o);
    validate_format(o, {"text", "json"});
    if (o.eta.empty()) throw UsageError("--eta is required");
    if (o.order < 1) throw UsageError("--order must be at least 1");
    DepthZeroChar chi = o.chi.empty() ? DepthZeroChar::trivial(o.p, o.d) : DepthZeroChar(o.p, parse_exponents(o.chi, o.d));
    LanglandsParamData param{chi, parse_eta(o.eta, o.d), o.p, o.r};
    LssFactor L = lss_factor(param, o.order);
    auto poly = [](const std::vector<Scalar>& c) {
        std::string s;
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k].is_zero()) continue;
            std::string term = "(" + c[k].str() + ")" + (k == 0 ? "" : k == 1 ? "*u" : "*u^" + std::to_string(k));
            s += (s.empty() ? "" : " + ") + term;
        }
        return s.empty() ? std::string("0") : s;
    };
    std::ostringstream os;
    if (o.format == "json") {
        auto strs = [](const std::vector<Scalar>& c) {
            std::vector<std::string> out;
            for (const Scalar& x : c) out.push_back(x.str());
            return out;
        };
        os << json{{"numerator", std::vector<std::string>{"1"}},
                   {"denominator", strs(L.denominator)},
                   {"series", strs(L.det_series)},
                   {"eigenvalues", strs(L.eigenvalues)}}
                  .dump(2)
           << '\n';
    } else {
        os << "numerator: 1\n";
        os << "denominator: " << poly(L.denominator) << '\n';
        os << "series to u^" << o.order << ": " << poly(L.det_series) << '\n';
    }
    emit(o, os.str());
    return 0;
}

int cmd_alcove_svg(const Options& o) {
    if (o.d != 3) throw UsageError("alcove-svg draws GL_3 only (--d 3)");
    LeviDatum L = parse_levi(o.levi, 3);
    int nu = o.nu == 0 ? L.blocks().front().front() : o.nu - 1;
    if (nu < 0 || nu >= 3 || L.blocks()[static_cast<std::size_t>(L.block_of(nu))].front() != nu)
        throw UsageError("--nu must be the least index of a block");
    emit(o, render_alcove_figure(L, nu));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    if (const char* s = std::getenv(kSeedEnv)) {
        try {
            o.seed = std::stoull(s);
        } catch (const std::exception&) {
            std::cerr << "error: " << kSeedEnv << " is not an unsigned integer\n";
            return 2;
        }
    }

    CLI::App app{"Combinatorics of Gamma_1(p)-level test functions for GL_d"};
    app.require_subcommand(1);
    app.footer(std::string("Environment: ") + kOutputDirEnv + " prefixes relative --output paths; " + kSeedEnv +
               " sets the default --seed.\nExit codes: 0 success, 1 failed check, 2 usage error.");

    auto add_d = [&](CLI::App* c) { c->add_option("--d", o.d, "rank d of GL_d")->required(); };
    auto add_pr = [&](CLI::App* c) {
        c->add_option("--p", o.p, "prime p");
        c->add_option("--r", o.r, "degree r of k_r over F_p");
    };
    auto add_out = [&](CLI::App* c) {
        c->add_option("--format", o.format, "text|json|csv");
        c->add_option("--output,-o", o.output, "write to a file instead of stdout");
        c->add_flag("--force", o.force, "override desk-scale guardrails");
    };

    CLI::App* adm = app.add_subcommand("adm", "list Adm(mu_0) with S(w), codim and k_{mu_0}(w)");
    add_d(adm);
    add_out(adm);
    adm->footer("CSV columns: " + adm_csv_header());

    CLI::App* strata = app.add_subcommand("strata", "KR strata indexed by nonempty S and their closure relations");
    add_d(strata);
    add_out(strata);
    strata->add_flag("--dot", o.dot, "emit the Hasse diagram in Graphviz DOT");
    strata->footer("CSV columns: index,S,w_lambda,w_perm,codim");

    CLI::App* kott = app.add_subcommand("kottwitz", "k_{mu_0}(w) from the Bernstein presentation");
    add_d(kott);
    add_out(kott);
    kott->add_option("--q", o.q, "substitute q (integer or a/b)");
    kott->add_flag("--symbolic", o.symbolic, "keep q symbolic (default)");
    kott->footer("CSV columns: " + kottwitz_csv_header());

    CLI::App* testfn = app.add_subcommand("testfn", "values of phi_{r,chi}, or phi_{r,1} when --chi is absent");
    add_d(testfn);
    add_pr(testfn);
    add_out(testfn);
    testfn->add_option("--chi", o.chi, "character exponents e1,...,ed mod p-1");
    testfn->footer("CSV columns: " + testfn_csv_header() + " (t as discrete logs; values are polynomials in z = zeta_{p-1})");

    CLI::App* verify = app.add_subcommand("verify", "run invariant suites; exit 1 on any failure");
    add_d(verify);
    add_pr(verify);
    verify->add_option("--suite", o.suite, "all|adm|hecke|testfn|spectral");
    verify->add_option("--seed", o.seed, "seed for random Satake parameters");
    verify->add_flag("--force", o.force, "override desk-scale guardrails");

    CLI::App* lfac = app.add_subcommand("lfactor", "semisimple local factor L^ss = 1 / det(1 - A u)");
    add_d(lfac);
    add_pr(lfac);
    lfac->add_option("--chi", o.chi, "character exponents (default trivial)");
    lfac->add_option("--eta", o.eta, "Satake parameters as monomials c*v^k, comma separated")->required();
    lfac->add_option("--order", o.order, "series precision R");
    lfac->add_option("--format", o.format, "text|json");
    lfac->add_option("--output,-o", o.output, "write to a file instead of stdout");

    CLI::App* svg = app.add_subcommand("alcove-svg", "SVG of Adm(mu_0) for GL_3 with Adm(O_nu) dark and labelled");
    svg->add_option("--d", o.d, "must be 3");
    svg->add_option("--levi", o.levi, "blocks as 1-based indices, e.g. 1|2,3 (default one block)");
    svg->add_option("--nu", o.nu, "1-based index of nu = e_nu, least in its block (default 1)");
    svg->add_option("--output,-o", o.output, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (adm->parsed()) return cmd_adm(o);
        if (strata->parsed()) return cmd_strata(o);
        if (kott->parsed()) return cmd_kottwitz(o);
        if (testfn->parsed()) return cmd_testfn(o);
        if (verify->parsed()) return cmd_verify(o);
        if (lfac->parsed()) return cmd_lfactor(o);
        if (svg->parsed()) return cmd_alcove_svg(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
