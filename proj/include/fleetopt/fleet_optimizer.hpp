#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "fleetopt/abc_solver.hpp"
#include "fleetopt/constraints.hpp"
#include "fleetopt/ice_management.hpp"
#include "fleetopt/ice_model.hpp"
#include "fleetopt/kpi.hpp"
#include "fleetopt/risk_engine.hpp"
#include "fleetopt/scenario.hpp"
#include "fleetopt/vessel_catalog.hpp"

namespace fleetopt {

// One (vessel, duty) term of the total cost.
struct CostLine {
    std::size_t vessel = 0;  // position in the assignment
    std::size_t type_index = 0;
    Duty duty = Duty::Supply;
    double charter = 0.0;
    double fuel = 0.0;
    double asset_risk = 0.0;
    double human_risk = 0.0;
    double total() const { return charter + fuel + asset_risk + human_risk; }
};

struct CostBreakdown {
    std::vector<CostLine> lines;
    double ice_risk = 0.0;  // fleet-level interruption risk, stage 2 only

    double charter() const;
    double fuel() const;
    double asset_risk() const;
    double human_risk() const;
    double duty_total(Duty d) const;
    double total() const;
};

struct FleetEvaluation {
    bool feasible = false;
    double total = kInfeasiblePenalty;  // USD, penalty when infeasible
    DutyAssignment assignment;
    CostBreakdown breakdown;
    FeasibilityReport report;
    double supply_rate = 0.0;  // m2/month of the assigned supply vessels
};

// Stage-1 evaluator. Per-type quantities are computed once; objective() is
// pure and safe to call from several threads.
class FleetEvaluator {
public:
    FleetEvaluator(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv);

    // Total USD of the cheapest feasible duty assignment, or the penalty.
    double objective(const std::vector<int>& counts) const;
    FleetEvaluation evaluate(const std::vector<int>& counts) const;

    const Scenario& scenario() const { return s_; }
    const VesselCatalog& catalog() const { return catalog_; }

private:
    struct TypeData {
        bool operable = false;
        bool supply = false;
        double charter = 0.0;  // effective USD/day
        double supply_rate = 0.0;
        double supply_cost = 0.0;
        double useful_deck = 0.0;
        double standby_cost = 0.0;
        double ah_cost = 0.0;
    };
    struct Plan {
        std::size_t standby = 0;
        std::vector<std::size_t> tugs;  // type index per tug
        std::size_t ah_strong = 0, ah_partner = 0;
        std::vector<std::size_t> fifi;  // two type indices
        std::size_t oil = 0;
        double total = 0.0;
    };
    bool plan(const std::vector<int>& counts, Plan* out) const;
    FleetEvaluation diagnose(const std::vector<int>& counts) const;

    Scenario s_;
    VesselCatalog catalog_;
    RivTable riv_;
    std::vector<TypeData> data_;
    std::array<double, 4> towing_risk_{};     // by min(n_tugs, 3)
    std::vector<std::size_t> charter_order_;  // type indices by (charter, index)
};

FleetEvaluation evaluate_fleet(const std::vector<int>& counts, const Scenario& s, const VesselCatalog& catalog,
                               const RivTable& riv);

// Cheapest feasible duty assignment for a concrete vessel list (type
// indices). Infeasible fleets come back with feasible = false and the
// violated constraints in the report.
FleetEvaluation assign_duties(const std::vector<std::size_t>& fleet, const Scenario& s,
                              const VesselCatalog& catalog, const RivTable& riv);

struct TraditionalResult {
    std::vector<std::size_t> types;  // catalog index of each search dimension
    std::vector<int> counts;         // full catalog length
    FleetEvaluation evaluation;
    AbcResult search;

    // Search-space vector expanded to catalog length.
    std::vector<int> expand(const std::vector<int>& x, std::size_t catalog_size) const;
};

// Stage 1: ABC over the operable vessel types (or the given subset).
// Throws InfeasibleError naming the binding constraints if the search ends
// without a feasible fleet.
TraditionalResult optimize_traditional(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv,
                                       const AbcParams& params,
                                       const std::vector<std::size_t>* subset = nullptr);

struct FullSolution {
    TraditionalResult traditional;
    IceStageResult ice;
    double combined_total = 0.0;
    KpiVector kpis;
    AbcParams params;
};

FullSolution optimize(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv,
                      const AbcParams& params);

// KPIs of the traditional plus ice fleet.
KpiVector kpi_report(const FullSolution& solution, const Scenario& s, const VesselCatalog& catalog);

// "Type1=1,Type10=2" style parsing and formatting over the catalog.
std::vector<int> parse_counts(const std::string& text, const VesselCatalog& catalog);
std::string format_counts(const std::vector<int>& counts, const VesselCatalog& catalog);

}  // namespace fleetopt
