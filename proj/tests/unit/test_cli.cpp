#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <regex>

#include "support/process.hpp"

namespace fs = std::filesystem;

namespace {

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

bool one_line_error(const proc::Result& r, const std::string& kind) {
    return lines(r.err) == 1 && r.err.rfind("error: kind=" + kind + " message=\"", 0) == 0;
}

double field(const std::string& text, const std::string& key) {
    std::smatch m;
    const std::regex re("(^|\\n)" + key + " ([-0-9.]+)");
    if (!std::regex_search(text, m, re)) return -1;
    return std::stod(m[2]);
}

}  // namespace

TEST_CASE("help and usage errors") {
    CHECK(proc::run("--help").code == 0);
    const auto none = proc::run("");
    CHECK(none.code == 2);
    CHECK(one_line_error(none, "usage"));
    const auto missing = proc::run("evaluate --counts Type1=1");
    CHECK(missing.code == 2);
    CHECK(one_line_error(missing, "usage"));
}

TEST_CASE("evaluate prints the Case-1 cost") {
    const auto r = proc::run("evaluate --scenario case1.toml --counts Type1=1,Type10=2,Type11=2");
    REQUIRE(r.code == 0);
    const double total = field(r.out, "total_usd");
    CHECK(total == doctest::Approx(24.1e6).epsilon(0.15));
    CHECK(r.out.find("standby") != std::string::npos);
    CHECK(r.err.empty());
}

TEST_CASE("validation errors exit 2 with one line") {
    auto r = proc::run("evaluate --scenario case1.toml --counts Type99=1");
    CHECK(r.code == 2);
    CHECK(one_line_error(r, "validation"));
    r = proc::run("evaluate --scenario nope.toml --counts Type1=1");
    CHECK(r.code == 2);
    CHECK(one_line_error(r, "validation"));
    r = proc::run("evaluate --scenario case1.toml --set operations.t_op=-5 --counts Type1=1");
    CHECK(r.code == 2);
    CHECK(one_line_error(r, "validation"));
    r = proc::run("optimize --scenario case1.toml --colony 5 --out /tmp");
    CHECK(r.code == 2);
    r = proc::run("sensitivity --scenario case1.toml --axis warp --out /tmp");
    CHECK(r.code == 2);
    CHECK(one_line_error(r, "validation"));

    const auto dir = proc::scratch("badcsv");
    std::ofstream(dir / "bad.csv") << "name,deadweight\nX,1\n";
    r = proc::run("evaluate --scenario case1.toml --catalog '" + (dir / "bad.csv").string() + "' --counts X=1");
    CHECK(r.code == 2);
    CHECK(one_line_error(r, "schema"));
}

TEST_CASE("infeasible fleets exit 3") {
    auto r = proc::run("evaluate --scenario case1.toml --counts Type1=1");
    CHECK(r.code == 3);
    r = proc::run("oracle --scenario case1.toml --types Type2,Type7 --max-count 2");
    CHECK(r.code == 3);
    CHECK(r.out.find("best none") != std::string::npos);
    r = proc::run("optimize --scenario case1.toml --catalog vessels_a1_a2.csv --set installation.cons_rate=1e9 "
                  "--max-cycles 50 --out /tmp/fleetopt_never");
    CHECK(r.code == 3);
    CHECK(one_line_error(r, "infeasible"));
}

TEST_CASE("oracle prints the exact optimum") {
    const auto r = proc::run("oracle --scenario case1.toml --types Type1,Type10,Type11 --max-count 2");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("points 27\n") != std::string::npos);
    CHECK(r.out.find("best_fleet Type1=1,Type10=2,Type11=2\n") != std::string::npos);
}

TEST_CASE("optimize writes deterministic output files") {
    const auto a = proc::scratch("opt_a"), b = proc::scratch("opt_b");
    const auto ra = proc::run("optimize --scenario case1.toml --seed 7 --out '" + a.string() + "'");
    const auto rb = proc::run("optimize --scenario case1.toml --seed 7 --threads 3 --out '" + b.string() + "'");
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    for (const char* f : {"solution.json", "breakdown.csv", "kpi.csv", "trace.csv", "spider.svg"}) {
        CAPTURE(f);
        REQUIRE(fs::exists(a / f));
        CHECK(proc::slurp(a / f) == proc::slurp(b / f));
    }
    const auto trace = proc::slurp(a / "trace.csv");
    CHECK(trace.rfind("step,cycle,Type1,Type2,", 0) == 0);
    CHECK(trace.substr(0, trace.find('\n')).find(",objective_musd") != std::string::npos);
    const auto svg = proc::slurp(a / "spider.svg");
    for (const char* label : {"Supply", "Ice management", "Towing", "Fi-Fi", "DP class", "Ice class", "Fleet age",
                              "Environmental friendliness"})
        CHECK(svg.find(label) != std::string::npos);
    CHECK(ra.out.find("traditional_fleet Type1=1,Type10=2,Type11=2") != std::string::npos);
    CHECK(ra.out.find("ice_strategy A") != std::string::npos);
}

TEST_CASE("sensitivity writes a table") {
    const auto dir = proc::scratch("sens");
    const auto r = proc::run("sensitivity --scenario sensitivity_base.toml --axis t_op --multipliers 0.5,1 "
                             "--max-cycles 2000 --out '" + dir.string() + "'");
    REQUIRE(r.code == 0);
    const auto text = proc::slurp(dir / "sensitivity.csv");
    CHECK(text == r.out);
    CHECK(lines(text) == 3);
    CHECK(text.rfind("axis,multiplier,seed,", 0) == 0);
    CHECK(text.find("t_op,1,") != std::string::npos);
}

TEST_CASE("data directory override") {
    const auto dir = proc::scratch("datadir");
    auto r = proc::run("evaluate --scenario case1.toml --counts Type1=1,Type10=2,Type11=2",
                       "FLEETOPT_DATA_DIR='" + dir.string() + "'");
    CHECK(r.code == 2);
    CHECK(one_line_error(r, "validation"));
    fs::copy_file(fs::path(FLEETOPT_DEFAULT_DATA_DIR) / "case1.toml", dir / "case1.toml");
    fs::copy_file(fs::path(FLEETOPT_DEFAULT_DATA_DIR) / "vessels_a1_a2.csv", dir / "vessels_a1_a2.csv");
    r = proc::run("evaluate --scenario case1.toml --counts Type1=1,Type10=2,Type11=2",
                  "FLEETOPT_DATA_DIR='" + dir.string() + "'");
    CHECK(r.code == 0);
}
