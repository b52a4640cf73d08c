#pragma once

#include <string>

#include "fleetopt/fleet_optimizer.hpp"
#include "fleetopt/kpi.hpp"

namespace fleetopt {

// Deterministic output: no timestamps, fixed key order, shortest doubles.
std::string solution_json(const FullSolution& sol, const Scenario& s, const VesselCatalog& catalog);
// One row per (vessel, duty), then ice fleet rows and the interruption risk.
std::string breakdown_csv(const FullSolution& sol, const Scenario& s, const VesselCatalog& catalog);
std::string evaluation_csv(const FleetEvaluation& ev, const VesselCatalog& catalog);
std::string kpi_csv(const KpiVector& kpis);
// step, count per searched type, objective in USD millions (3 significant figures).
std::string trace_csv(const TraditionalResult& r, const VesselCatalog& catalog);
// Eight-axis radar chart on a 0-100 radial scale.
std::string spider_svg(const KpiVector& kpis, const std::string& title);

// Human-readable cost breakdown for the evaluate command.
std::string evaluation_text(const FleetEvaluation& ev, const VesselCatalog& catalog);

// Writes solution.json, breakdown.csv, kpi.csv, trace.csv and spider.svg.
void write_solution_files(const std::string& dir, const FullSolution& sol, const Scenario& s,
                          const VesselCatalog& catalog);

std::string format_significant(double v, int digits);
// Fixed two decimals.
std::string format_usd(double v);

}  // namespace fleetopt
