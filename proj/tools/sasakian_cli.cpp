/// @file sasakian_cli.cpp
/// @brief Command-line front end: verify / report-all / ricci / lattice.
///
/// Exit codes: 0 = all checks pass, 1 = verification failure,
/// 2 = usage or parameter error. All numbers print as exact rationals
/// ("p" / "p/q"); identical invocations produce byte-identical output
/// (wall time appears only under --timing).

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <sasakian/catalog.hpp>
#include <sasakian/json_io.hpp>

#include "golden_common.hpp"

using namespace sasakian;

namespace {

// ------------------------------------------------------------------ helpers

Params parse_params(const std::vector<std::string>& raw) {
    Params out;
    for (const std::string& tok : raw) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--params expects k=v[,k=v...], got \"" + tok + "\"");
        out[tok.substr(0, eq)] = rat_parse(tok.substr(eq + 1));
    }
    return out;
}

std::string pass_str(bool b) { return b ? "pass" : "FAIL"; }

std::string vec_str(const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += rat_str(v[i]);
    }
    return s + ")";
}

std::string einstein_str(const std::optional<std::pair<Rat, Rat>>& e) {
    if (!e) return "none";
    return "lambda = " + rat_str(e->first) + ", nu = " + rat_str(e->second);
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    [[nodiscard]] std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void emit(const Json& j, bool timing, const Timer& t) {
    Json out = j;
    if (timing) out["wall_time_ms"] = t.ms();
    std::cout << out.dump(2) << "\n";
}

// ------------------------------------------------------------------- verify

/// Contact-form obstruction analysis for the lie-only sl2_r2 entry: the
/// parameters a1..a5 give the candidate contact form alpha = sum a_i e^i.
int verify_obstruction(const Params& given, bool as_json, bool timing) {
    Timer t;
    static const std::set<std::string> names{"a1", "a2", "a3", "a4", "a5"};
    Vec a(5, Rat(0));
    for (const auto& [k, v] : given) {
        if (!names.count(k))
            throw std::invalid_argument(
                "entry sl2_r2 takes contact-form coefficients a1..a5, got \"" + k + "\"");
        a[static_cast<std::size_t>(k[1] - '1')] = v;
    }
    ObstructionSample ob = sl2_r2_obstruction(a);

    bool reeb_ok = true;
    Vec xi;
    if (ob.contact) {
        auto computed = reeb(sl2_r2_algebra(), one_form(a));
        xi = sl2_r2_reeb_formula(a);
        reeb_ok = computed.has_value() && *computed == xi;
    }
    bool pass = !ob.contact || (ob.obstructed && ob.line_ok && reeb_ok);

    if (as_json) {
        Json j;
        j["id"] = "sl2_r2";
        j["params"] = params_to_json(given);
        Json c;
        c["discriminant"] = rat_str(ob.discriminant);
        c["contact"] = ob.contact;
        c["obstructed"] = ob.obstructed;
        c["obstruction_line"] = ob.line_ok;
        if (ob.contact) {
            c["reeb"] = vec_to_json(xi);
            c["reeb_formula_matches"] = reeb_ok;
        }
        j["checks"] = c;
        j["result"] = pass ? "pass" : "fail";
        emit(j, timing, t);
    } else {
        std::cout << "# verify sl2_r2\n\n";
        std::cout << "- params: " << params_str(given) << "\n\n";
        std::cout << "| check | result |\n| --- | --- |\n";
        std::cout << "| discriminant | " << rat_str(ob.discriminant) << " |\n";
        std::cout << "| contact | " << (ob.contact ? "true" : "false") << " |\n";
        std::cout << "| obstructed | " << (ob.obstructed ? "true" : "false") << " |\n";
        std::cout << "| obstruction line span{-a5 e4 + a4 e5} | " << (ob.line_ok ? "true" : "false")
                  << " |\n";
        if (ob.contact) {
            std::cout << "| reeb | " << vec_str(xi) << " |\n";
            std::cout << "| reeb formula matches | " << (reeb_ok ? "true" : "false") << " |\n";
        }
        if (timing) std::cout << "\nwall time: " << t.ms() << " ms\n";
        std::cout << "\nresult: " << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

int cmd_verify(const std::string& id, const Params& given, bool as_json, bool timing) {
    const CatalogEntry& e = Catalog::instance().at(id);
    if (e.id == "sl2_r2" && !given.empty()) return verify_obstruction(given, as_json, timing);

    Timer t;
    FullReport r = full_verify(id, given);

    // was the transverse quotient actually exercised?
    bool quotient_ran = false;
    if (r.has_structure && r.sasaki.sasakian()) {
        auto S = e.structure(r.params);
        quotient_ran = e.algebra(r.params).ad(S->xi).is_zero_mat();
    }

    if (as_json) {
        Json j;
        j["id"] = r.id;
        j["params"] = params_to_json(r.params);
        Json c;
        c["jacobi"] = r.jacobi_ok;
        c["profile"] = r.profile_ok;
        if (r.has_structure) {
            c["sasakian"] = sasaki_report_to_json(r.sasaki);
            c["reeb_curvature_identity"] = r.curvature_ok;
            c["transverse_quotient_kahler"] = quotient_ran ? Json(r.quotient_kahler_ok) : Json("skipped");
            c["alpha_einstein"] = r.einstein ? Json::array({rat_str(r.einstein->first),
                                                            rat_str(r.einstein->second)})
                                             : Json();
        }
        j["checks"] = c;
        j["result"] = r.pass() ? "pass" : "fail";
        if (!r.pass()) j["first_failure"] = r.first_failure;
        emit(j, timing, t);
    } else {
        std::cout << "# verify " << r.id << "\n\n";
        std::cout << "- params: " << (r.params.empty() ? "(none)" : params_str(r.params)) << "\n\n";
        std::cout << "| check | result |\n| --- | --- |\n";
        std::cout << "| jacobi | " << pass_str(r.jacobi_ok) << " |\n";
        std::cout << "| invariant profile | " << pass_str(r.profile_ok) << " |\n";
        if (r.has_structure) {
            std::cout << "| almost contact | " << pass_str(r.sasaki.almost_contact) << " |\n";
            std::cout << "| compatible metric | " << pass_str(r.sasaki.compatible) << " |\n";
            std::cout << "| contact metric | " << pass_str(r.sasaki.contact_metric) << " |\n";
            std::cout << "| normal | " << pass_str(r.sasaki.normal) << " |\n";
            std::cout << "| reeb curvature identity | " << pass_str(r.curvature_ok) << " |\n";
            std::cout << "| transverse quotient Kahler | "
                      << (quotient_ran ? pass_str(r.quotient_kahler_ok) : std::string("skipped"))
                      << " |\n";
            std::cout << "| alpha-Einstein | " << einstein_str(r.einstein) << " |\n";
        } else {
            std::cout << "| tensors | none (lie-only entry) |\n";
        }
        if (!r.pass()) std::cout << "\nfirst failure: " << r.first_failure << "\n";
        if (timing) std::cout << "\nwall time: " << t.ms() << " ms\n";
        std::cout << "\nresult: " << (r.pass() ? "PASS" : "FAIL") << "\n";
    }
    return r.pass() ? 0 : 1;
}

// --------------------------------------------------------------- report-all

std::string golden_path() {
    if (const char* env = std::getenv("SASAKI_CATALOG")) return env;
    return "data/catalog.json";
}

/// Field-by-field diff of the golden file against a fresh recomputation.
std::vector<std::string> diff_golden(const Json& golden, const Json& computed) {
    std::vector<std::string> out;
    if (!golden.contains("format") || golden.at("format") != computed.at("format"))
        out.push_back("format");
    if (!golden.contains("entries") || !golden.at("entries").is_array()) {
        out.push_back("entries");
        return out;
    }
    const Json& ge = golden.at("entries");
    const Json& ce = computed.at("entries");
    if (ge.size() != ce.size()) out.push_back("entries.count");
    for (std::size_t i = 0; i < std::min(ge.size(), ce.size()); ++i) {
        const std::string id = ce.at(i).at("id").get<std::string>();
        for (auto it = ce.at(i).begin(); it != ce.at(i).end(); ++it) {
            if (!ge.at(i).contains(it.key()) || ge.at(i).at(it.key()) != it.value())
                out.push_back(id + "." + it.key());
        }
        for (auto it = ge.at(i).begin(); it != ge.at(i).end(); ++it)
            if (!ce.at(i).contains(it.key())) out.push_back(id + "." + it.key() + " (unexpected)");
    }
    return out;
}

int cmd_report_all(const std::string& format, bool timing) {
    Timer t;
    const bool as_json = format == "json";

    std::string path = golden_path();
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open catalog data file: " + path);
    Json golden;
    try {
        golden = Json::parse(f);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("catalog data file is not valid JSON: " + std::string(e.what()));
    }
    std::vector<std::string> mismatches = diff_golden(golden, golden_catalog());

    struct Row {
        std::string id, params, first_failure;
        bool pass = false;
        std::optional<std::pair<Rat, Rat>> einstein;
        bool has_structure = false;
    };
    std::vector<Row> rows;
    std::size_t failed = 0;
    for (const CatalogEntry& e : Catalog::instance().entries())
        for (const Params& s : e.samples) {
            FullReport r = full_verify(e.id, s);
            rows.push_back({r.id, params_str(r.params), r.first_failure, r.pass(), r.einstein,
                            r.has_structure});
            if (!r.pass()) ++failed;
        }

    const bool ok = mismatches.empty() && failed == 0;

    if (as_json) {
        Json j;
        j["golden_mismatches"] = mismatches;
        Json jrows = Json::array();
        for (const Row& r : rows) {
            Json o;
            o["id"] = r.id;
            o["params"] = r.params;
            o["pass"] = r.pass;
            o["einstein"] = r.einstein ? Json::array({rat_str(r.einstein->first),
                                                      rat_str(r.einstein->second)})
                                       : Json();
            if (!r.pass) o["first_failure"] = r.first_failure;
            jrows.push_back(o);
        }
        j["rows"] = jrows;
        Json cls = Json::array();
        for (const std::string& id : classification_reps()) {
            const CatalogEntry& e = Catalog::instance().at(id);
            Json o;
            o["id"] = id;
            o["profile"] = profile_to_json(*expected_profile(e.iso_class, resolve_params(e, {})));
            cls.push_back(o);
        }
        j["classification"] = cls;
        j["summary"] = Json{{"entries", Catalog::instance().entries().size()},
                            {"rows", rows.size()},
                            {"failed", failed},
                            {"golden_mismatches", mismatches.size()}};
        j["result"] = ok ? "pass" : "fail";
        emit(j, timing, t);
    } else {
        std::cout << "# catalog report\n\n";
        std::cout << "## golden data (" << path << ")\n\n";
        if (mismatches.empty()) {
            std::cout << "match: every stored table equals the recomputation\n";
        } else {
            for (const std::string& m : mismatches) std::cout << "- golden mismatch at " << m << "\n";
        }
        std::cout << "\n## verification rows\n\n";
        std::cout << "| entry | params | result | alpha-Einstein |\n| --- | --- | --- | --- |\n";
        for (const Row& r : rows) {
            std::cout << "| " << r.id << " | " << (r.params.empty() ? "-" : r.params) << " | "
                      << (r.pass ? "pass" : "FAIL: " + r.first_failure) << " | "
                      << (r.has_structure ? einstein_str(r.einstein) : std::string("-")) << " |\n";
        }
        std::cout << "\n## classification representatives\n\n";
        std::cout << "| class | dim center | derived dims | lower central dims | solvable | "
                     "nilpotent | unimodular | killing signature |\n";
        std::cout << "| --- | --- | --- | --- | --- | --- | --- | --- |\n";
        for (const std::string& id : classification_reps()) {
            const CatalogEntry& e = Catalog::instance().at(id);
            Profile p = *expected_profile(e.iso_class, resolve_params(e, {}));
            auto dims = [](const std::vector<std::size_t>& d) {
                std::string s;
                for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
                return s;
            };
            std::cout << "| " << id << " | " << p.dim_center << " | " << dims(p.derived_dims)
                      << " | " << dims(p.lower_central_dims) << " | " << (p.solvable ? "yes" : "no")
                      << " | " << (p.nilpotent ? "yes" : "no") << " | "
                      << (p.unimodular ? "yes" : "no") << " | (" << p.killing_signature.positive
                      << "," << p.killing_signature.negative << "," << p.killing_signature.zero
                      << ") |\n";
        }
        std::cout << "\n## summary\n\n";
        std::cout << "- entries: " << Catalog::instance().entries().size() << "\n";
        std::cout << "- verification rows: " << rows.size() << " (" << rows.size() - failed
                  << " passed, " << failed << " failed)\n";
        std::cout << "- golden mismatches: " << mismatches.size() << "\n";
        if (timing) std::cout << "- wall time: " << t.ms() << " ms\n";
        std::cout << "\nresult: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

// -------------------------------------------------------------------- ricci

int cmd_ricci(const std::string& id, const Params& given, bool as_json, bool timing) {
    Timer t;
    const CatalogEntry& e = Catalog::instance().at(id);
    Params p = resolve_params(e, given);
    auto S = e.structure(p);
    if (!S)
        throw std::invalid_argument("entry " + id +
                                    " has no canonical tensors; the Ricci tensor needs a metric");
    LieAlg L = e.algebra(p);
    Mat ric = ricci(L, S->g);
    auto ein = alpha_einstein(ric, S->g, S->alpha);

    if (as_json) {
        Json j;
        j["id"] = id;
        j["params"] = params_to_json(p);
        j["ricci"] = mat_to_json(ric);
        j["alpha_einstein"] =
            ein ? Json::array({rat_str(ein->first), rat_str(ein->second)}) : Json();
        emit(j, timing, t);
    } else {
        std::cout << "# ricci " << id << "\n\n";
        std::cout << "- params: " << (p.empty() ? "(none)" : params_str(p)) << "\n\n";
        for (std::size_t i = 0; i < ric.rows(); ++i) {
            std::cout << "|";
            for (std::size_t j = 0; j < ric.cols(); ++j) std::cout << " " << rat_str(ric.at(i, j)) << " |";
            std::cout << "\n";
        }
        std::cout << "\nalpha-Einstein: " << einstein_str(ein) << "\n";
        if (timing) std::cout << "\nwall time: " << t.ms() << " ms\n";
    }
    return 0;
}

// ------------------------------------------------------------------ lattice

int cmd_lattice(std::size_t samples, std::uint32_t seed, bool as_json, bool timing) {
    Timer t;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
    auto pt = [&] { return LatticePoint{d(rng), d(rng), d(rng), d(rng), d(rng)}; };

    const LatticePoint unit = lattice_unit();
    std::size_t closed = 0, associative = 0, unit_ok = 0, inverse_ok = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        LatticePoint x = pt(), y = pt(), z = pt();

        // closure: the twisted coordinate, recomputed in wide arithmetic, fits int64
        LatticePoint xy = lattice_mul(x, y);
        __int128 m4 = static_cast<__int128>(y.m4) + static_cast<__int128>(x.m1) * y.m5 +
                      static_cast<__int128>(x.m2) * y.m3 + x.m4;
        if (m4 == static_cast<__int128>(xy.m4)) ++closed;

        if (lattice_mul(xy, z) == lattice_mul(x, lattice_mul(y, z))) ++associative;
        if (lattice_mul(unit, x) == x && lattice_mul(x, unit) == x) ++unit_ok;

        LatticePoint xi{-x.m1, -x.m2, -x.m3, -x.m4 + x.m1 * x.m5 + x.m2 * x.m3, -x.m5};
        if (lattice_mul(x, xi) == unit && lattice_mul(xi, x) == unit) ++inverse_ok;
    }
    bool ok = closed == samples && associative == samples && unit_ok == samples &&
              inverse_ok == samples;

    auto frac = [&](std::size_t k) { return std::to_string(k) + "/" + std::to_string(samples); };
    if (as_json) {
        Json j;
        j["samples"] = samples;
        j["seed"] = seed;
        j["closed"] = closed;
        j["associative"] = associative;
        j["unit_laws"] = unit_ok;
        j["inverses"] = inverse_ok;
        j["result"] = ok ? "pass" : "fail";
        emit(j, timing, t);
    } else {
        std::cout << "# lattice\n\n";
        std::cout << "- samples: " << samples << "\n- seed: " << seed << "\n\n";
        std::cout << "| law | result |\n| --- | --- |\n";
        std::cout << "| closed | " << frac(closed) << " |\n";
        std::cout << "| associative | " << frac(associative) << " |\n";
        std::cout << "| unit laws | " << frac(unit_ok) << " |\n";
        std::cout << "| inverses | " << frac(inverse_ok) << " |\n";
        if (timing) std::cout << "\nwall time: " << t.ms() << " ms\n";
        std::cout << "\nresult: " << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of Sasakian Lie algebra structures"};
    app.require_subcommand(1);

    std::vector<std::string> raw_params;
    std::string id, format = "md";
    bool as_json = false, as_md = false, timing = false;
    std::size_t samples = 100;
    std::uint32_t seed = 7;

    auto add_format = [&](CLI::App* c) {
        c->add_flag("--json", as_json, "machine-readable JSON report");
        c->add_flag("--md", as_md, "Markdown report (default)");
        c->add_flag("--timing", timing, "include wall time in the report");
    };

    CLI::App* verify = app.add_subcommand("verify", "run every check for one catalog entry");
    verify->add_option("id", id, "catalog entry id")->required();
    verify->add_option("--params", raw_params, "parameters as k=v[,k=v...]")->delimiter(',');
    add_format(verify);

    CLI::App* report = app.add_subcommand("report-all", "verify the whole catalog against the data file");
    report->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
    report->add_flag("--timing", timing, "include wall time in the report");

    CLI::App* ric = app.add_subcommand("ricci", "print the exact Ricci tensor of one entry");
    ric->add_option("id", id, "catalog entry id")->required();
    ric->add_option("--params", raw_params, "parameters as k=v[,k=v...]")->delimiter(',');
    add_format(ric);

    CLI::App* lat = app.add_subcommand("lattice", "check the integer lattice group laws");
    lat->add_option("--samples", samples, "number of random triples");
    lat->add_option("--seed", seed, "PRNG seed");
    add_format(lat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        const bool json_out = as_json && !as_md;
        if (verify->parsed()) return cmd_verify(id, parse_params(raw_params), json_out, timing);
        if (report->parsed()) return cmd_report_all(format, timing);
        if (ric->parsed()) return cmd_ricci(id, parse_params(raw_params), json_out, timing);
        if (lat->parsed()) return cmd_lattice(samples, seed, json_out, timing);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
