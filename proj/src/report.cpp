#include "fleetopt/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "csv.hpp"
#include "fleetopt/cost_engine.hpp"
#include "fleetopt/error.hpp"
#include "util.hpp"

namespace fleetopt {

namespace {

using ojson = nlohmann::ordered_json;

constexpr Duty kDuties[] = {Duty::Supply,       Duty::Towing,      Duty::AnchorHandling, Duty::Standby,
                            Duty::FireFighting, Duty::OilRecovery, Duty::IceManagement};

std::string money(double v) { return util::format_fixed(v, 2); }

ojson counts_json(const std::vector<int>& counts, const VesselCatalog& catalog) {
    ojson o = ojson::object();
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i]) o[catalog[i].name] = counts[i];
    return o;
}

void add_line(std::vector<std::vector<std::string>>& t, const std::string& vessel, const std::string& type,
              const std::string& duty, double charter, double fuel, double asset, double human) {
    t.push_back({vessel, type, duty, money(charter), money(fuel), money(asset), money(human),
                 money(charter + fuel + asset + human)});
}

std::vector<std::vector<std::string>> breakdown_table(const FleetEvaluation& ev, const VesselCatalog& catalog) {
    std::vector<std::vector<std::string>> t;
    t.push_back({"vessel", "type", "duty", "charter_usd", "fuel_usd", "asset_risk_usd", "human_risk_usd",
                 "total_usd"});
    for (const auto& l : ev.breakdown.lines)
        add_line(t, std::to_string(l.vessel + 1), catalog[l.type_index].name, to_string(l.duty), l.charter,
                 l.fuel, l.asset_risk, l.human_risk);
    return t;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + p.string() + "'");
    out << text;
    if (!out) throw ValidationError("failed writing '" + p.string() + "'");
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string format_significant(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

std::string format_usd(double v) { return money(v); }

std::string solution_json(const FullSolution& sol, const Scenario& s, const VesselCatalog& catalog) {
    const auto& tr = sol.traditional;
    const auto& ev = tr.evaluation;
    ojson j;
    j["scenario"] = s.name;
    j["rio_policy"] = to_string(s.rio_policy);
    ojson params;
    params["seed"] = sol.params.seed;
    params["colony_size"] = sol.params.colony_size;
    params["max_cycles"] = sol.params.max_cycles ? ojson(*sol.params.max_cycles) : ojson(nullptr);
    params["rng"] = "mt19937_64/v1";
    j["params"] = params;

    ojson search_types = ojson::array();
    for (auto i : tr.types) search_types.push_back(catalog[i].name);
    j["search_types"] = search_types;

    ojson trad;
    trad["counts"] = counts_json(tr.counts, catalog);
    trad["total_usd"] = ev.total;
    trad["supply_rate_m2_per_month"] = ev.supply_rate;
    ojson assignment = ojson::array();
    for (std::size_t i = 0; i < ev.assignment.vessels.size(); ++i) {
        const auto& v = ev.assignment.vessels[i];
        ojson duties = ojson::array();
        for (Duty d : kDuties)
            if (v.has(d)) duties.push_back(to_string(d));
        assignment.push_back({{"vessel", i + 1}, {"type", catalog[v.type_index].name}, {"duties", duties}});
    }
    trad["assignment"] = assignment;
    trad["breakdown"] = {{"charter_usd", ev.breakdown.charter()},
                         {"fuel_usd", ev.breakdown.fuel()},
                         {"asset_risk_usd", ev.breakdown.asset_risk()},
                         {"human_risk_usd", ev.breakdown.human_risk()}};
    j["traditional"] = trad;

    ojson ice;
    ice["strategy"] = strategy_letter(sol.ice.strategy.kind);
    ice["kind"] = to_string(sol.ice.strategy.kind);
    ice["required_ice_class"] = to_string(sol.ice.required_class);
    ojson ice_vessels = ojson::array();
    for (auto i : sol.ice.strategy.vessels) ice_vessels.push_back(catalog[i].name);
    ice["vessels"] = ice_vessels;
    ice["counts"] = counts_json(sol.ice.strategy.counts(catalog.size()), catalog);
    ice["interruption_probability"] = sol.ice.risk.interruption_probability;
    ice["consequence_usd"] = sol.ice.risk.consequence;
    ice["expected_cost_usd"] = sol.ice.risk.expected_cost;
    ice["strategy_cost_usd"] = sol.ice.risk.strategy_cost;
    j["ice"] = ice;

    j["combined_total_usd"] = sol.combined_total;
    ojson kpis, excess = ojson::array();
    for (auto a : kAllKpiAxes) {
        kpis[kpi_key(a)] = sol.kpis[a];
        if (sol.kpis.excess(a)) excess.push_back(kpi_key(a));
    }
    j["kpis"] = kpis;
    j["kpi_excess_redundancy"] = excess;
    j["search"] = {{"cycles", tr.search.cycles},
                   {"evaluations", tr.search.evaluations},
                   {"improvements", tr.search.trace.size()}};
    j["files"] = {{"breakdown", "breakdown.csv"},
                  {"kpi", "kpi.csv"},
                  {"trace", "trace.csv"},
                  {"spider", "spider.svg"}};
    return j.dump(2) + "\n";
}

std::string evaluation_csv(const FleetEvaluation& ev, const VesselCatalog& catalog) {
    return csv::write(breakdown_table(ev, catalog));
}

std::string breakdown_csv(const FullSolution& sol, const Scenario& s, const VesselCatalog& catalog) {
    const auto& ev = sol.traditional.evaluation;
    auto t = breakdown_table(ev, catalog);
    std::size_t pos = ev.assignment.vessels.size();
    for (auto i : sol.ice.strategy.vessels) {
        const DutyCost c = ice_mgmt_costs(catalog[i], s);
        add_line(t, std::to_string(++pos), catalog[i].name, to_string(Duty::IceManagement), c.charter, c.fuel, 0, 0);
    }
    // interruption risk is an economic loss of the installation
    add_line(t, "", "", "ice_interruption", 0, 0, sol.ice.risk.expected_cost, 0);
    t.push_back({"", "", "total", "", "", "", "", money(sol.combined_total)});
    return csv::write(t);
}

std::string kpi_csv(const KpiVector& k) {
    std::vector<std::vector<std::string>> t;
    t.push_back({"kpi", "label", "value", "display", "excess_redundancy"});
    for (auto a : kAllKpiAxes)
        t.push_back({kpi_key(a), kpi_label(a), util::format_fixed(k[a], 3), util::format_fixed(k.display(a), 3),
                     k.excess(a) ? "true" : "false"});
    return csv::write(t);
}

std::string trace_csv(const TraditionalResult& r, const VesselCatalog& catalog) {
    std::vector<std::vector<std::string>> t;
    std::vector<std::string> header = {"step", "cycle"};
    for (auto i : r.types) header.push_back(catalog[i].name);
    header.push_back("objective_musd");
    t.push_back(header);
    for (const auto& st : r.search.trace) {
        std::vector<std::string> row = {std::to_string(st.step), std::to_string(st.cycle)};
        for (int x : st.x) row.push_back(std::to_string(x));
        row.push_back(st.f >= kInfeasiblePenalty ? "infeasible" : format_significant(st.f / 1e6, 3));
        t.push_back(row);
    }
    return csv::write(t);
}

std::string spider_svg(const KpiVector& k, const std::string& title) {
    constexpr double cx = 320, cy = 300, radius = 200;
    auto point = [&](int axis, double value) {
        const double ang = -std::numbers::pi / 2 + 2 * std::numbers::pi * axis / kKpiCount;
        const double r = radius * value / 100.0;
        return std::make_pair(cx + r * std::cos(ang), cy + r * std::sin(ang));
    };
    auto fmt = [](double v) { return util::format_fixed(v, 1); };
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"600\" viewBox=\"0 0 640 600\" "
         "font-family=\"sans-serif\" font-size=\"13\">\n";
    o << "<rect width=\"640\" height=\"600\" fill=\"white\"/>\n";
    o << "<text x=\"" << fmt(cx) << "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">" << xml_escape(title)
      << "</text>\n";
    for (int ring = 20; ring <= 100; ring += 20) {
        o << "<polygon fill=\"none\" stroke=\"#cccccc\" points=\"";
        for (int a = 0; a < kKpiCount; ++a) {
            auto [x, y] = point(a, ring);
            o << (a ? " " : "") << fmt(x) << ',' << fmt(y);
        }
        o << "\"/>\n";
        auto [lx, ly] = point(0, ring);
        o << "<text x=\"" << fmt(lx + 4) << "\" y=\"" << fmt(ly + 4) << "\" fill=\"#888888\" font-size=\"10\">"
          << ring << "</text>\n";
    }
    for (int a = 0; a < kKpiCount; ++a) {
        auto [x, y] = point(a, 100);
        o << "<line x1=\"" << fmt(cx) << "\" y1=\"" << fmt(cy) << "\" x2=\"" << fmt(x) << "\" y2=\"" << fmt(y)
          << "\" stroke=\"#999999\"/>\n";
        auto [tx, ty] = point(a, 112);
        const char* anchor = std::fabs(tx - cx) < 1 ? "middle" : (tx > cx ? "start" : "end");
        const auto axis = kAllKpiAxes[a];
        o << "<text x=\"" << fmt(tx) << "\" y=\"" << fmt(ty + 4) << "\" text-anchor=\"" << anchor << "\">"
          << xml_escape(kpi_label(axis)) << (k.excess(axis) ? " (>100)" : "") << "</text>\n";
    }
    o << "<polygon fill=\"#1f77b4\" fill-opacity=\"0.3\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"";
    for (int a = 0; a < kKpiCount; ++a) {
        auto [x, y] = point(a, k.display(kAllKpiAxes[a]));
        o << (a ? " " : "") << fmt(x) << ',' << fmt(y);
    }
    o << "\"/>\n";
    for (int a = 0; a < kKpiCount; ++a) {
        const auto axis = kAllKpiAxes[a];
        auto [x, y] = point(a, k.display(axis));
        o << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3.5\" fill=\""
          << (k.excess(axis) ? "#d62728" : "#1f77b4") << "\"><title>" << xml_escape(kpi_label(axis)) << ": "
          << util::format_fixed(k[axis], 1) << "</title></circle>\n";
    }
    o << "</svg>\n";
    return o.str();
}

std::string evaluation_text(const FleetEvaluation& ev, const VesselCatalog& catalog) {
    std::ostringstream o;
    if (!ev.feasible) {
        o << "infeasible\n";
        for (const auto& v : ev.report.violations) {
            const int n = constraint_number(v.id);
            o << "  " << (n ? "constraint " + std::to_string(n) + " " : std::string()) << to_string(v.id) << ": "
              << v.detail << "\n";
        }
        return o.str();
    }
    o << "vessel  type      duty              charter       fuel  asset_risk  human_risk\n";
    for (const auto& l : ev.breakdown.lines) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-7zu %-9s %-15s %11.0f %10.0f %11.0f %11.0f\n", l.vessel + 1,
                      catalog[l.type_index].name.c_str(), to_string(l.duty).c_str(), l.charter, l.fuel,
                      l.asset_risk, l.human_risk);
        o << buf;
    }
    o << "charter_usd " << money(ev.breakdown.charter()) << "\n";
    o << "fuel_usd " << money(ev.breakdown.fuel()) << "\n";
    o << "asset_risk_usd " << money(ev.breakdown.asset_risk()) << "\n";
    o << "human_risk_usd " << money(ev.breakdown.human_risk()) << "\n";
    o << "total_usd " << money(ev.total) << "\n";
    o << "total_musd " << format_significant(ev.total / 1e6, 3) << "\n";
    return o.str();
}

void write_solution_files(const std::string& dir, const FullSolution& sol, const Scenario& s,
                          const VesselCatalog& catalog) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw ValidationError("cannot create output directory '" + dir + "': " + ec.message());
    const std::filesystem::path d(dir);
    write_text(d / "solution.json", solution_json(sol, s, catalog));
    write_text(d / "breakdown.csv", breakdown_csv(sol, s, catalog));
    write_text(d / "kpi.csv", kpi_csv(sol.kpis));
    write_text(d / "trace.csv", trace_csv(sol.traditional, catalog));
    write_text(d / "spider.svg", spider_svg(sol.kpis, s.name + " fleet KPIs"));
}

}  // namespace fleetopt
