#include "zeta4/cli.hpp"

#include "zeta4/json_io.hpp"
#include "zeta4/parallel.hpp"
#include "zeta4/reference_data.hpp"
#include "zeta4/verify.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace zeta4 {

namespace {

using json_io::Json;

const Eta kSymEta{3, 3, {1, 1, 1, 1, 1, 1}};
const Eta kBaseEta{68, 57, {22, 23, 24, 25, 26, 27}};

struct RunConfig {
    std::string eta_text = "68 57 22 23 24 25 26 27";
    long n = 1;
    long n_max = 0;
    long oracle_max = 5;
    long precision_bits = 0;  // 0: chosen per command
    unsigned jobs = 0;        // 0: logical cores
    std::string omega_cache;
    std::string out_path;
    bool fast = false;
    bool inject_fault = false;
};

// Kinds of Error that mean the request itself was malformed.
bool is_input_error(const std::string& kind) {
    return kind == "invalid-input" || kind == "invalid-params" || kind == "negative-entry" || kind == "parse" ||
           kind == "insufficient-data" || kind == "invalid-rep";
}

Eta checked_eta(const RunConfig& cfg) {
    const Eta eta = json_io::parse_eta(cfg.eta_text);
    const ValidityReport v = validate_h(from_eta(eta, 1));
    if (!v.ok()) throw Error("invalid-input", "eta violates " + v.first_failure());
    return eta;
}

DirectionPair balanced_directions(const Eta& eta) {
    const DirectionPair d = directions_from_eta(eta);
    if (!is_balanced(d))
        throw Error("invalid-input", "directions are not balanced: beta0 - alpha0 must equal "
                                     "sum_j (beta_j - alpha_j) over j = 1..6");
    return d;
}

const RepSet& reps_for(const DirectionPair& d, std::optional<RepSet>& storage) {
    if (d == default_reps().base) return default_reps();
    storage = coset_reps(d);
    return *storage;
}

LinearForm form_for(const Eta& eta, long n, unsigned jobs) {
    if (eta == kSymEta) return symmetric_form(n, jobs);
    const HParams h = from_eta(eta, n);
    const ValidityReport v = validate_h(h);
    if (!v.ok()) throw Error("invalid-input", "n = " + std::to_string(n) + ": " + v.first_failure());
    LinearForm f = assemble_form(h_to_ab(h), jobs);
    f.n = n;
    return f;
}

int cmd_form(const RunConfig& cfg, Json& doc) {
    const Eta eta = checked_eta(cfg);
    const long lo = cfg.n_max > 0 ? 1 : cfg.n, hi = cfg.n_max > 0 ? cfg.n_max : cfg.n;
    if (lo < 1) throw Error("invalid-input", "n must be >= 1");
    Json forms = Json::array();
    bool ok = true;
    for (long n = lo; n <= hi; ++n) {
        const LinearForm f = form_for(eta, n, cfg.jobs);
        Json j = json_io::form_json(f);
        const mpfr_prec_t prec = cfg.precision_bits > 0 ? cfg.precision_bits : form_precision(f, n, 40.0);
        j["value"] = json_io::decimal(numeric_value(f, prec), 30);
        if (n <= cfg.oracle_max) {
            const HParams h = from_eta(eta, n);
            const SeriesForm s = series_oracle(h);
            const int sg = series_sign(h);
            const bool match = s.z5 == 0 && s.z3 == 0 && s.z2 == 0 && s.z4 == ExactRat(sg * f.u) &&
                               s.r == ExactRat(-sg * f.v);
            j["oracle"] = match ? "match" : "mismatch";
            ok = ok && match;
        } else {
            j["oracle"] = "skipped";
        }
        forms.push_back(std::move(j));
    }
    doc = Json{{"command", "form"}, {"eta", json_io::eta_json(eta)}, {"forms", std::move(forms)}};
    return ok ? kExitOk : kExitFailure;
}

int cmd_omega(const RunConfig& cfg, Json& doc) {
    const Eta eta = checked_eta(cfg);
    const DirectionPair d = balanced_directions(eta);
    std::optional<RepSet> storage;
    const RepSet& reps = reps_for(d, storage);
    const OmegaReport r = omega_group_cached(d, reps, cfg.omega_cache, cfg.jobs);
    doc = json_io::omega_json(r, reps);
    doc["command"] = "omega";
    doc["eta"] = json_io::eta_json(eta);
    return kExitOk;
}

int cmd_measure(const RunConfig& cfg, Json& doc) {
    const Eta eta = checked_eta(cfg);
    const DirectionPair d = balanced_directions(eta);
    std::optional<RepSet> storage;
    const RepSet& reps = reps_for(d, storage);
    const OmegaReport r = omega_group_cached(d, reps, cfg.omega_cache, cfg.jobs);
    const auto [m1, m2] = direction_orders(d);
    const mpfr_prec_t prec = cfg.precision_bits > 0 ? cfg.precision_bits : 128;
    const BigReal c2 = c2_exact(r, m1, m2, prec);
    doc = Json{{"command", "measure"},
               {"eta", json_io::eta_json(eta)},
               {"directions", json_io::directions_json(d)},
               {"m1", m1},
               {"m2", m2},
               {"C2", json_io::decimal(c2, 20)}};

    const long n_max = cfg.n_max > 0 ? cfg.n_max : 16;
    const GrowthEstimate g = estimate_growth(d, n_max, 40.0, cfg.jobs);
    doc["growth"] = json_io::growth_json(g);
    const BigReal c0(g.c0.value, prec), c1(g.c1.value, prec);
    try {
        doc["bound_empirical"] = json_io::decimal(irrationality_bound(c0, c1, c2), 12);
    } catch (const Error& e) {
        doc["bound_empirical"] = nullptr;
        doc["bound_empirical_note"] = e.what();
    }

    if (eta == kBaseEta) {
        const BigReal pc0(parse_rational(refdata::kC0), prec), pc1(parse_rational(refdata::kC1), prec);
        Json ref{{"C0", refdata::kC0}, {"C1", refdata::kC1}, {"published_C2", refdata::kC2},
                 {"published_bound", refdata::kBound}};
        try {
            ref["bound"] = json_io::decimal(irrationality_bound(pc0, pc1, c2), 12);
        } catch (const Error& e) {
            ref["bound"] = nullptr;
            ref["note"] = e.what();
        }
        doc["reference"] = std::move(ref);
    } else {
        doc["reference"] = nullptr;
    }
    return kExitOk;
}

int cmd_group(const RunConfig& cfg, Json& doc) {
    const Eta eta = checked_eta(cfg);
    const DirectionPair d = balanced_directions(eta);
    std::optional<RepSet> storage;
    const RepSet& reps = reps_for(d, storage);
    Json list = Json::array();
    for (std::size_t i = 0; i < reps.reps.size(); ++i)
        list.push_back(Json{{"rep", i + 1},
                            {"word", reps.reps[i].g.word},
                            {"directions", json_io::directions_json(reps.reps[i].image)}});
    doc = Json{{"command", "group"},
               {"eta", json_io::eta_json(eta)},
               {"group_order", generate_group().size()},
               {"trivial_subgroup_order", trivial_subgroup().size()},
               {"representatives", reps.reps.size()},
               {"base", json_io::directions_json(reps.base)},
               {"reps", std::move(list)}};
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, Json& doc, std::ostream& err) {
    set_fault_injection(cfg.inject_fault);
    VerifyOptions opt;
    opt.fast = cfg.fast;
    opt.jobs = cfg.jobs;
    opt.cache_dir = cfg.omega_cache;
    const auto checks = run_verify(opt);
    set_fault_injection(false);
    for (const auto& c : checks) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", c.seconds);
        err << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases, " << buf << " s)\n";
        for (const auto& f : c.failures) err << "  " << f << "\n";
    }
    doc = verify_json(checks, cfg.fast);
    doc["command"] = "verify";
    return all_passed(checks) ? kExitOk : kExitFailure;
}

void write_output(const RunConfig& cfg, const Json& doc, std::ostream& out) {
    const std::string text = json_io::dump(doc);
    if (cfg.out_path.empty()) {
        out << text;
        return;
    }
    const std::string tmp = cfg.out_path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw Error("io", "cannot write " + tmp);
        f << text;
    }
    std::filesystem::rename(tmp, cfg.out_path);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("ZETA4_CACHE")) cfg.omega_cache = env;

    CLI::App app{"Linear forms in zeta(4) and 1: exact construction, p-adic valuation bounds, measure constants"};
    app.name("zeta4");
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--jobs", cfg.jobs, "worker threads (0 = logical cores)");
    app.add_option("--out", cfg.out_path, "write the JSON document here instead of stdout");
    app.add_option("--omega-cache", cfg.omega_cache, "omega cache directory (env ZETA4_CACHE)");
    app.add_option("--precision-bits", cfg.precision_bits, "MPFR precision (0 = automatic)")->check(CLI::NonNegativeNumber);

    auto add_eta = [&](CLI::App* sub) {
        sub->add_option("--eta", cfg.eta_text, "eight integers: eta0 eta-1 eta1 .. eta6");
    };
    auto* form = app.add_subcommand("form", "exact linear form(s) u zeta(4) - v");
    add_eta(form);
    form->add_option("--n", cfg.n, "single index");
    form->add_option("--n-max", cfg.n_max, "all indices 1..n-max");
    form->add_option("--oracle-max", cfg.oracle_max, "cross-check with the series route up to this n");
    auto* omega = app.add_subcommand("omega", "group-boosted valuation function omega on [0, 1)");
    add_eta(omega);
    auto* measure = app.add_subcommand("measure", "C2, empirical C0/C1 and the irrationality-measure bound");
    add_eta(measure);
    measure->add_option("--n-max", cfg.n_max, "largest n for the growth estimates (default 16, >= 8)");
    auto* verify = app.add_subcommand("verify", "run the invariant suite");
    verify->add_flag("--fast", cfg.fast, "n <= 2 only");
    verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
    auto* group = app.add_subcommand("group", "group orders and coset representatives");
    add_eta(group);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "zeta4: " << e.what() << "\n";
        return kExitInvalid;
    }
    for (auto* sub : app.get_subcommands()) {
        if (sub->count("--help") != 0) {
            out << sub->help();
            return kExitOk;
        }
    }
    if (cfg.jobs == 0) cfg.jobs = default_jobs();

    try {
        Json doc;
        int code = kExitOk;
        if (form->parsed()) code = cmd_form(cfg, doc);
        else if (omega->parsed()) code = cmd_omega(cfg, doc);
        else if (measure->parsed()) code = cmd_measure(cfg, doc);
        else if (verify->parsed()) code = cmd_verify(cfg, doc, err);
        else code = cmd_group(cfg, doc);
        write_output(cfg, doc, out);
        return code;
    } catch (const Error& e) {
        set_fault_injection(false);
        err << "zeta4: " << e.what() << "\n";
        return is_input_error(e.kind()) ? kExitInvalid : kExitFailure;
    } catch (const std::exception& e) {
        err << "zeta4: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace zeta4
