#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "fleetopt/error.hpp"
#include "fleetopt/fleet_optimizer.hpp"
#include "fleetopt/oracle.hpp"
#include "fleetopt/report.hpp"
#include "fleetopt/sensitivity.hpp"

namespace fs = std::filesystem;
using namespace fleetopt;

namespace {

enum Exit { kOk = 0, kValidation = 2, kInfeasible = 3, kInternal = 4 };

std::string data_dir() {
    if (const char* env = std::getenv("FLEETOPT_DATA_DIR"); env && *env) return env;
    return FLEETOPT_DEFAULT_DATA_DIR;
}

// Paths that do not exist as given are looked up in the data directory.
std::string resolve(const std::string& path, const char* what) {
    if (fs::exists(path)) return path;
    const fs::path alt = fs::path(data_dir()) / path;
    if (fs::exists(alt)) return alt.string();
    throw ValidationError(std::string(what) + " file '" + path + "' not found (also looked in " + data_dir() + ")");
}

std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

int fail(const std::string& kind, const std::string& msg, int code) {
    std::cerr << "error: kind=" << kind << " message=\"" << one_line(msg) << "\"\n";
    return code;
}

struct Common {
    std::string scenario;
    std::string catalog = "vessels_a1_a2.csv";
    std::string riv;
    std::vector<std::string> overrides;
    std::string rio_policy;
    int max_count = 5;
    int threads = 1;
};

struct Inputs {
    Scenario s;
    VesselCatalog catalog;
    RivTable riv;
};

Inputs load(const Common& c) {
    Inputs in;
    in.s = load_scenario_file(resolve(c.scenario, "scenario"));
    for (const auto& o : c.overrides) apply_override(in.s, o);
    if (!c.rio_policy.empty()) in.s.rio_policy = parse_rio_policy(c.rio_policy);
    in.s.validate();
    in.catalog = load_catalog_file(resolve(c.catalog, "catalog"), c.max_count);
    in.riv = c.riv.empty() ? default_riv_table() : load_riv_table_file(resolve(c.riv, "RIV table"));
    return in;
}

void add_common(CLI::App* app, Common& c) {
    app->add_option("--scenario", c.scenario, "scenario TOML file")->required();
    app->add_option("--catalog", c.catalog, "vessel catalog CSV")->capture_default_str();
    app->add_option("--riv", c.riv, "POLARIS RIV table CSV (built-in table if omitted)");
    app->add_option("--set", c.overrides, "scenario override KEY=VALUE (repeatable)");
    app->add_option("--rio-policy", c.rio_policy, "normal | elevated");
    app->add_option("--max-count", c.max_count, "maximum vessels per type")->capture_default_str();
    app->add_option("--threads", c.threads, "worker threads")->capture_default_str();
}

struct SearchOpts {
    std::uint64_t seed = 0;
    int colony = 40;
    long max_cycles = 50000;
};

void add_search(CLI::App* app, SearchOpts& o) {
    app->add_option("--seed", o.seed, "random seed")->capture_default_str();
    app->add_option("--colony", o.colony, "colony size (even)")->capture_default_str();
    app->add_option("--max-cycles", o.max_cycles, "ABC cycles")->capture_default_str();
}

AbcParams params_of(const SearchOpts& o, const Common& c) {
    AbcParams p;
    p.seed = o.seed;
    p.colony_size = o.colony;
    p.max_cycles = o.max_cycles;
    p.threads = c.threads;
    p.validate();
    return p;
}

std::vector<double> parse_multipliers(const std::string& text) {
    std::vector<double> out;
    for (const auto& item : CLI::detail::split(text, ',')) {
        const std::string t = CLI::detail::trim_copy(item);
        if (t.empty()) continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ValidationError("multiplier '" + t + "' is not a number");
        }
    }
    if (out.empty()) throw ValidationError("--multipliers needs at least one value");
    return out;
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + p.string() + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arctic drilling support fleet optimizer"};
    app.require_subcommand(1);

    Common common;
    SearchOpts search;
    std::string out_dir = ".";
    std::string counts_text, axis, multipliers_text = "0,0.5,1,1.5,2", types_text;

    auto* optimize_cmd = app.add_subcommand("optimize", "two-stage fleet optimization");
    add_common(optimize_cmd, common);
    add_search(optimize_cmd, search);
    optimize_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* evaluate_cmd = app.add_subcommand("evaluate", "cost breakdown of given vessel counts");
    add_common(evaluate_cmd, common);
    evaluate_cmd->add_option("--counts", counts_text, "e.g. Type1=1,Type10=2,Type11=2")->required();

    auto* sens_cmd = app.add_subcommand("sensitivity", "one-axis sensitivity sweep");
    add_common(sens_cmd, common);
    add_search(sens_cmd, search);
    sens_cmd->add_option("--axis", axis, "CR_v, t_op, p_fuel, Cons_rate, dist, S_deck, VH_E, R_op or a scenario key")
        ->required();
    sens_cmd->add_option("--multipliers", multipliers_text, "comma-separated factors")->capture_default_str();
    sens_cmd->add_option("--out", out_dir, "output directory")->capture_default_str();

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive minimum over a small sub-catalog");
    add_common(oracle_cmd, common);
    oracle_cmd->add_option("--types", types_text, "comma-separated vessel type names")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        return fail("usage", msg, kValidation);
    }

    try {
        const Inputs in = load(common);
        if (optimize_cmd->parsed()) {
            const FullSolution sol = optimize(in.s, in.catalog, in.riv, params_of(search, common));
            write_solution_files(out_dir, sol, in.s, in.catalog);
            std::cout << "traditional_fleet " << format_counts(sol.traditional.counts, in.catalog) << "\n"
                      << "traditional_total_usd " << format_usd(sol.traditional.evaluation.total) << "\n"
                      << "ice_strategy " << strategy_letter(sol.ice.strategy.kind) << "\n"
                      << "ice_fleet " << format_counts(sol.ice.strategy.counts(in.catalog.size()), in.catalog)
                      << "\n"
                      << "combined_total_usd " << format_usd(sol.combined_total) << "\n"
                      << "output " << out_dir << "\n";
        } else if (evaluate_cmd->parsed()) {
            const auto counts = parse_counts(counts_text, in.catalog);
            const auto ev = evaluate_fleet(counts, in.s, in.catalog, in.riv);
            std::cout << evaluation_text(ev, in.catalog);
            if (!ev.feasible) return kInfeasible;
        } else if (sens_cmd->parsed()) {
            const auto rows = sensitivity_run(in.s, in.catalog, in.riv, axis, parse_multipliers(multipliers_text),
                                              params_of(search, common));
            const std::string text = sensitivity_csv(rows, axis, in.catalog);
            fs::create_directories(out_dir);
            write_file(fs::path(out_dir) / "sensitivity.csv", text);
            std::cout << text;
        } else if (oracle_cmd->parsed()) {
            std::vector<std::size_t> subset;
            for (const auto& name : CLI::detail::split(types_text, ',')) {
                const std::string t = CLI::detail::trim_copy(name);
                if (!t.empty()) subset.push_back(in.catalog.require_index(t));
            }
            const auto r = exhaustive_search(in.s, in.catalog, in.riv, subset, common.max_count, common.threads);
            std::cout << "points " << r.points << "\n" << "feasible_points " << r.feasible_points << "\n";
            if (!r.found) {
                std::cout << "best none\n";
                return kInfeasible;
            }
            std::cout << "best_fleet " << format_counts(r.counts, in.catalog) << "\n"
                      << "best_total_usd " << format_usd(r.best) << "\n";
        }
    } catch (const InfeasibleError& e) {
        return fail(e.kind(), e.what(), kInfeasible);
    } catch (const Error& e) {
        return fail(e.kind(), e.what(), e.kind() == "internal" ? kInternal : kValidation);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), kInternal);
    }
    return kOk;
}
