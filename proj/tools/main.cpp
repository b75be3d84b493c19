// ffnt command-line front end: field construction, irreducible censuses and
// the verification suites, emitted as reproducible JSON/TSV/text reports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 budget/resource error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffnt/bertrand.hpp"
#include "ffnt/extension.hpp"
#include "ffnt/identity.hpp"
#include "ffnt/series.hpp"

using json = nlohmann::ordered_json;
using namespace ffnt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct GlobalOpts {
    std::string format = "json";
    std::uint64_t seed = 0;
    unsigned long budget = kDefaultDegreeBudget;
    bool no_timestamp = false;
    unsigned jobs = 1;
};

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json report_shell(const GlobalOpts& g, const std::string& command) {
    json r;
    r["command"] = command;
    if (!g.no_timestamp) r["timestamp"] = now_iso8601();
    return r;
}

void emit(const json& r) { std::cout << r.dump(2) << "\n"; }

int emit_error(int code, const std::string& message) {
    json e;
    e["error"] = message;
    e["exit_code"] = code;
    std::cout << e.dump(2) << "\n";
    return code;
}

json poly_json(const Poly& f) {
    json j;
    j["human"] = to_string(f);
    j["index"] = to_index_form(f);
    return j;
}

json field_json(const FieldPtr& k) {
    json j;
    j["spec"] = k->spec();
    j["size"] = std::to_string(k->size());
    j["characteristic"] = std::to_string(k->characteristic());
    j["tower"] = k->tower_description();
    return j;
}

// Tower entry: "d" (lex-first modulus of degree d) or "d:index" with the
// modulus index in decimal.
FieldPtr apply_tower(FieldPtr k, const std::vector<std::string>& tower) {
    for (const std::string& entry : tower) {
        auto colon = entry.find(':');
        unsigned d = std::stoul(entry.substr(0, colon));
        Poly modulus = (colon == std::string::npos)
                           ? find_irreducible(k, d)
                           : monic_by_index(k, d, Nat(entry.substr(colon + 1)));
        k = build_extension(k, modulus);
    }
    return k;
}

// Field from either --q (prime power, lex-first moduli) or --p plus --tower.
FieldPtr field_from_spec(std::uint64_t q, std::uint64_t p,
                         const std::vector<std::string>& tower) {
    if (q != 0) {
        auto f = factorize(Nat(static_cast<unsigned long>(q)));
        if (f.factors.size() != 1)
            throw std::invalid_argument("field spec: q must be a prime power");
        return make_field(f.factors[0].first.get_ui(), f.factors[0].second);
    }
    if (p == 0) throw std::invalid_argument("field spec: provide --q or --p");
    return apply_tower(make_prime_field(p), tower);
}

json identity_report_json(const IdentityReport& rep, bool with_valuations) {
    json j;
    j["q"] = rep.q.get_str();
    j["n"] = rep.n;
    j["lhs_degree"] = rep.lhs_degree.get_str();
    j["rhs_degree"] = rep.rhs_degree.get_str();
    j["identity_holds"] = rep.identity_holds;
    if (!rep.failure.empty()) j["failure"] = rep.failure;
    if (with_valuations) {
        json vals = json::array();
        for (const auto& v : rep.valuations) {
            json row;
            row["P"] = poly_json(v.p);
            row["direct"] = v.direct.get_str();
            row["formula"] = v.formula.get_str();
            vals.push_back(std::move(row));
        }
        j["valuations"] = std::move(vals);
    } else {
        j["valuations_checked"] = rep.valuations.size();
    }
    return j;
}

json gauss_report_json(const GaussReport& rep) {
    json j;
    j["q"] = rep.q.get_str();
    j["n"] = rep.n;
    j["lhs"] = rep.lhs.get_str();
    j["rhs"] = rep.rhs.get_str();
    json terms = json::array();
    for (const auto& t : rep.terms) {
        json row;
        row["d"] = t.d;
        row["pi"] = t.pi.get_str();
        row["term"] = t.term.get_str();
        terms.push_back(std::move(row));
    }
    j["terms"] = std::move(terms);
    j["pass"] = rep.pass;
    return j;
}

std::vector<std::string> nat_strings(const std::vector<Nat>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const Nat& x : v) out.push_back(x.get_str());
    return out;
}

// ---- subcommand bodies -------------------------------------------------

int run_field_construct(const GlobalOpts& g, std::uint64_t p, unsigned n,
                        const std::vector<std::string>& tower) {
    if (!is_prime_u64(p))
        return emit_error(kExitUsage, "field construct: --p must be prime (tower mode requires an explicit base)");
    Nat size = nat_pow(Nat(static_cast<unsigned long>(p)), n);
    if (size > g.budget && size > IrreducibleCensus::kDefaultListLimit)
        return emit_error(kExitBudget, "field construct: p^n exceeds the configured budget");

    FieldPtr k = make_prime_field(p);
    Poly modulus = Poly::x(k);
    if (n > 1 || !tower.empty()) {
        if (!tower.empty()) {
            k = apply_tower(k, tower);
        } else {
            modulus = find_irreducible(k, n);
            k = build_extension(k, modulus);
        }
    }
    if (auto* ext = dynamic_cast<const ExtensionField*>(k.get())) modulus = ext->modulus();

    auto axioms = verify_field_axioms(k, 512, g.seed);
    auto frob = frobenius_check(k);

    json r = report_shell(g, "field construct");
    r["field"] = field_json(k);
    r["modulus"] = poly_json(modulus);
    json ax;
    ax["pass"] = axioms.pass;
    ax["exhaustive"] = axioms.exhaustive;
    ax["checked_pairs"] = axioms.checked_pairs;
    ax["checked_triples"] = axioms.checked_triples;
    if (!axioms.failure.empty()) ax["failure"] = axioms.failure;
    r["axioms"] = std::move(ax);
    json fr;
    fr["pass"] = frob.pass;
    fr["fixed_points"] = frob.fixed_points;
    if (!frob.failure.empty()) fr["failure"] = frob.failure;
    r["frobenius"] = std::move(fr);
    bool pass = axioms.pass && frob.pass;
    r["pass"] = pass;
    emit(r);
    return pass ? kExitOk : kExitVerifyFail;
}

int run_irreducible(const GlobalOpts& g, bool list_mode, std::uint64_t q, std::uint64_t p,
                    const std::vector<std::string>& tower, unsigned degree_max) {
    FieldPtr k = field_from_spec(q, p, tower);
    Nat qn(static_cast<unsigned long>(k->size()));

    if (g.format == "tsv") {
        std::cout << (list_mode ? "degree\tcount\tpolynomials\n" : "degree\tcount\n");
    }
    json rows = json::array();
    for (unsigned d = 1; d <= degree_max; ++d) {
        Nat count = count_moebius(qn, d);
        json row;
        row["degree"] = d;
        row["count"] = count.get_str();
        std::string poly_col;
        if (list_mode) {
            if (nat_pow(qn, d) > IrreducibleCensus::kDefaultListLimit)
                return emit_error(kExitBudget, "irreducible list: q^d exceeds the list budget");
            json polys = json::array();
            bool first = true;
            for (const Poly& f : enumerate_irreducibles(k, d)) {
                polys.push_back(poly_json(f));
                if (!first) poly_col += ",";
                poly_col += to_index_form(f);
                first = false;
            }
            row["polynomials"] = std::move(polys);
        }
        if (g.format == "tsv") {
            std::cout << d << "\t" << count.get_str();
            if (list_mode) std::cout << "\t" << poly_col;
            std::cout << "\n";
        }
        rows.push_back(std::move(row));
    }
    if (g.format != "tsv") {
        json r = report_shell(g, list_mode ? "irreducible list" : "irreducible count");
        r["field"] = field_json(k);
        r["rows"] = std::move(rows);
        emit(r);
    }
    return kExitOk;
}

bool verify_identity_grid(const GlobalOpts& g, std::uint64_t q, unsigned n_max, json& out,
                          bool with_valuations) {
    FieldPtr k = field_from_spec(q, 0, {});
    bool all = true;
    json reports = json::array();
    for (unsigned n = 1; n <= n_max; ++n) {
        auto rep = verify_identity(k, n, g.budget);
        all = all && rep.identity_holds;
        reports.push_back(identity_report_json(rep, with_valuations));
    }
    out["q"] = std::to_string(q);
    out["n_max"] = n_max;
    out["reports"] = std::move(reports);
    out["pass"] = all;
    return all;
}

bool verify_gauss_grid(std::uint64_t q, unsigned n_max, json& out) {
    auto census = IrreducibleCensus::from_moebius(Nat(static_cast<unsigned long>(q)), n_max);
    bool all = true;
    json reports = json::array();
    for (unsigned n = 1; n <= n_max; ++n) {
        auto rep = verify_gauss(Nat(static_cast<unsigned long>(q)), n, census);
        all = all && rep.pass;
        reports.push_back(gauss_report_json(rep));
    }
    out["q"] = std::to_string(q);
    out["n_max"] = n_max;
    out["reports"] = std::move(reports);
    out["pass"] = all;
    return all;
}

bool verify_zeta_grid(std::uint64_t q, unsigned terms, json& out) {
    Nat qn(static_cast<unsigned long>(q));
    auto census = IrreducibleCensus::from_moebius(qn, terms);
    auto zeta = zeta_series(qn, terms);
    auto euler = euler_product(census, terms);
    bool series_match = zeta == euler;

    auto logd = log_derivative_coeffs(zeta);
    bool logd_ok = true;
    for (unsigned n = 1; n <= terms; ++n) logd_ok = logd_ok && (logd[n - 1] == nat_pow(qn, n));

    out["q"] = std::to_string(q);
    out["terms"] = terms;
    out["zeta_coeffs"] = nat_strings(zeta.coeffs());
    out["euler_coeffs"] = nat_strings(euler.coeffs());
    out["log_derivative"] = nat_strings(logd);
    out["series_match"] = series_match;
    out["log_derivative_is_q_powers"] = logd_ok;
    out["pass"] = series_match && logd_ok;
    return series_match && logd_ok;
}

bool verify_bertrand_scan(std::uint64_t max_n, unsigned jobs, json& out) {
    auto summary = scan_postulate(max_n, jobs);
    out["max_N"] = max_n;
    out["certificates"] = summary.certificates;
    out["largest_gap"] = summary.largest_gap;
    out["largest_gap_N"] = summary.largest_gap_n;
    out["pass"] = summary.pass;
    return summary.pass;
}

int run_verify(const GlobalOpts& g, const std::string& target, std::uint64_t q, unsigned n_max,
               unsigned terms, std::uint64_t max_n) {
    json r = report_shell(g, "verify " + target);
    bool pass = true;
    try {
        if (target == "identity") {
            json body;
            pass = verify_identity_grid(g, q, n_max, body, true);
            r["identity"] = std::move(body);
        } else if (target == "gauss") {
            json body;
            pass = verify_gauss_grid(q, n_max, body);
            r["gauss"] = std::move(body);
        } else if (target == "zeta") {
            json body;
            pass = verify_zeta_grid(q, terms, body);
            r["zeta"] = std::move(body);
        } else if (target == "bertrand") {
            json body;
            pass = verify_bertrand_scan(max_n, g.jobs, body);
            r["bertrand"] = std::move(body);
        } else if (target == "all") {
            json identity = json::array();
            for (auto [gq, gn] : std::initializer_list<std::pair<std::uint64_t, unsigned>>{
                     {2, 6}, {3, 4}, {4, 3}, {5, 3}}) {
                json body;
                pass = verify_identity_grid(g, gq, gn, body, false) && pass;
                identity.push_back(std::move(body));
            }
            r["identity"] = std::move(identity);

            json gauss = json::array();
            for (std::uint64_t gq : {2, 3, 4, 5, 7, 8, 9}) {
                json body;
                pass = verify_gauss_grid(gq, 12, body) && pass;
                gauss.push_back(std::move(body));
            }
            r["gauss"] = std::move(gauss);

            json zeta = json::array();
            for (std::uint64_t gq : {2, 3, 5}) {
                json body;
                pass = verify_zeta_grid(gq, 12, body) && pass;
                zeta.push_back(std::move(body));
            }
            r["zeta"] = std::move(zeta);

            json body;
            pass = verify_bertrand_scan(max_n, g.jobs, body) && pass;
            r["bertrand"] = std::move(body);
        } else {
            return emit_error(kExitUsage, "verify: unknown target '" + target + "'");
        }
    } catch (const BudgetError& e) {
        return emit_error(kExitBudget, e.what());
    }
    r["pass"] = pass;
    emit(r);
    return pass ? kExitOk : kExitVerifyFail;
}

int run_bertrand_scan(const GlobalOpts& g, std::uint64_t max_n, const std::string& certs_path) {
    std::vector<PostulateCertificate> certs;
    auto summary = scan_postulate(max_n, g.jobs, certs_path.empty() ? nullptr : &certs);
    if (!certs_path.empty()) {
        std::ofstream out(certs_path);
        if (!out) return emit_error(kExitUsage, "bertrand scan: cannot open " + certs_path);
        out << "N\twitness\n";
        for (const auto& c : certs) out << c.n << "\t" << c.witness << "\n";
    }
    json r = report_shell(g, "bertrand scan");
    json body;
    body["max_N"] = summary.max_n;
    body["certificates"] = summary.certificates;
    body["largest_gap"] = summary.largest_gap;
    body["largest_gap_N"] = summary.largest_gap_n;
    if (!certs_path.empty()) body["certificate_file"] = certs_path;
    r["scan"] = std::move(body);
    r["pass"] = summary.pass;
    emit(r);
    return summary.pass ? kExitOk : kExitVerifyFail;
}

int run_bertrand_profile(const GlobalOpts& g, std::uint64_t n) {
    auto prof = binomial_profile(Nat(static_cast<unsigned long>(n)));
    if (g.format == "tsv") {
        std::cout << "p\tv_p\n";
        for (const auto& [p, v] : prof.per_prime)
            std::cout << p.get_str() << "\t" << v.get_str() << "\n";
        return kExitOk;
    }
    json r = report_shell(g, "bertrand profile");
    r["N"] = n;
    r["central_binomial"] = prof.value.get_str();
    json rows = json::array();
    Nat reconstructed = 1;
    for (const auto& [p, v] : prof.per_prime) {
        json row;
        row["p"] = p.get_str();
        row["v_p"] = v.get_str();
        rows.push_back(std::move(row));
        Nat pv;
        mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), v.get_ui());
        reconstructed *= pv;
    }
    r["per_prime"] = std::move(rows);
    bool pass = reconstructed == prof.value;
    r["reconstruction_ok"] = pass;
    emit(r);
    return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-field and number-theory toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("FFNT_BUDGET_DEGREE")) g.budget = std::strtoul(env, nullptr, 10);
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "text"}))
        ->capture_default_str();
    app.add_option("--seed", g.seed, "seed for randomized paths")->capture_default_str();
    app.add_option("--budget-degree", g.budget, "maximum constructed polynomial degree")
        ->capture_default_str();
    app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp field");
    app.add_option("--jobs", g.jobs, "worker count for partitionable scans")
        ->capture_default_str();

    // field construct
    auto* field = app.add_subcommand("field", "finite field construction");
    auto* construct = field->add_subcommand("construct", "build GF(p^n) and verify it");
    std::uint64_t fc_p = 0;
    unsigned fc_n = 1;
    std::vector<std::string> fc_tower;
    construct->add_option("--p", fc_p, "characteristic")->required();
    construct->add_option("--n", fc_n, "extension degree");
    construct->add_option("--tower", fc_tower, "tower moduli, entries 'deg' or 'deg:index'");

    // irreducible count|list
    auto* irr = app.add_subcommand("irreducible", "monic irreducible censuses");
    std::uint64_t ir_q = 0, ir_p = 0;
    unsigned ir_dmax = 8;
    std::vector<std::string> ir_tower;
    for (const char* name : {"count", "list"}) {
        auto* sc = irr->add_subcommand(name);
        sc->add_option("--q", ir_q, "field size (prime power, lex-first moduli)");
        sc->add_option("--p", ir_p, "characteristic (with optional --tower)");
        sc->add_option("--tower", ir_tower, "tower moduli");
        sc->add_option("--degree-max", ir_dmax, "largest degree")->capture_default_str();
    }

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_target;
    std::uint64_t v_q = 2, v_max = 100000;
    unsigned v_nmax = 6, v_terms = 12;
    verify->add_option("target", v_target, "identity|gauss|zeta|bertrand|all")->required();
    verify->add_option("--q", v_q, "field size")->capture_default_str();
    verify->add_option("--n-max", v_nmax, "largest n")->capture_default_str();
    verify->add_option("--terms", v_terms, "series truncation order")->capture_default_str();
    verify->add_option("--max", v_max, "Bertrand scan bound")->capture_default_str();

    // bertrand scan|profile
    auto* bertrand = app.add_subcommand("bertrand", "integer-side checks");
    auto* scan = bertrand->add_subcommand("scan", "witness scan over [2, max]");
    std::uint64_t b_max = 100000, b_n = 5;
    std::string b_certs;
    scan->add_option("--max", b_max, "largest N")->capture_default_str();
    scan->add_option("--certs", b_certs, "write per-N certificates to this TSV file");
    auto* profile = bertrand->add_subcommand("profile", "valuation profile of C(2N, N)");
    profile->add_option("--n", b_n, "N")->required();

    // zeta check (alias for verify zeta)
    auto* zeta = app.add_subcommand("zeta", "zeta-series checks");
    auto* zcheck = zeta->add_subcommand("check", "Euler product vs geometric series");
    std::uint64_t z_q = 2;
    unsigned z_terms = 12;
    zcheck->add_option("--q", z_q, "field size")->capture_default_str();
    zcheck->add_option("--terms", z_terms, "series truncation order")->capture_default_str();

    // allow global flags anywhere on the line
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        for (CLI::App* sc : a->get_subcommands([](const CLI::App*) { return true; })) {
            sc->fallthrough();
            enable_fallthrough(sc);
        }
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) return run_field_construct(g, fc_p, fc_n, fc_tower);
        if (irr->parsed()) {
            bool list_mode = irr->get_subcommand("list")->parsed();
            return run_irreducible(g, list_mode, ir_q, ir_p, ir_tower, ir_dmax);
        }
        if (verify->parsed()) return run_verify(g, v_target, v_q, v_nmax, v_terms, v_max);
        if (scan->parsed()) return run_bertrand_scan(g, b_max, b_certs);
        if (profile->parsed()) return run_bertrand_profile(g, b_n);
        if (zcheck->parsed()) {
            json r = report_shell(g, "zeta check");
            json body;
            bool pass = verify_zeta_grid(z_q, z_terms, body);
            r["zeta"] = std::move(body);
            r["pass"] = pass;
            emit(r);
            return pass ? kExitOk : kExitVerifyFail;
        }
        return emit_error(kExitUsage, "no subcommand given");
    } catch (const BudgetError& e) {
        return emit_error(kExitBudget, e.what());
    } catch (const std::invalid_argument& e) {
        return emit_error(kExitUsage, e.what());
    } catch (const std::exception& e) {
        return emit_error(kExitVerifyFail, e.what());
    }
}
