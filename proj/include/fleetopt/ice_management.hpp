#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fleetopt/ice_model.hpp"
#include "fleetopt/scenario.hpp"
#include "fleetopt/vessel_catalog.hpp"

namespace fleetopt {

// None marks an ice-free scenario where no ice fleet is chartered.
enum class IceStrategyKind { None, Complete, Active, Passive };
std::string to_string(IceStrategyKind k);
// "A", "B", "C" for the three strategies, "-" for None.
std::string strategy_letter(IceStrategyKind k);

struct IceStrategy {
    IceStrategyKind kind = IceStrategyKind::None;
    std::vector<std::size_t> vessels;  // type indices, leader or escort first

    std::vector<int> counts(std::size_t catalog_size) const;
    bool operator==(const IceStrategy&) const = default;
};

struct IceRiskResult {
    double interruption_probability = 0.0;  // F
    double consequence = 0.0;               // E, USD
    double expected_cost = 0.0;             // R = F E, USD
    double strategy_cost = 0.0;             // charter + fuel of the ice fleet, USD
    double strategy_charter = 0.0;
    double strategy_fuel = 0.0;
    double total() const { return strategy_cost + expected_cost; }
};

struct IceStageResult {
    IceStrategy strategy;
    IceRiskResult risk;
    IceClass required_class = IceClass::None;  // weakest class fit for the design condition
};

double thickness_reduction(double h_eq);
double interruption_probability(IceStrategyKind kind, const Scenario& s);
double interruption_consequence(double traditional_total, const Scenario& s);

IceRiskResult evaluate_ice_strategy(const IceStrategy& strategy, const VesselCatalog& catalog,
                                    const Scenario& s, double traditional_total);

// Exact enumeration over complete (leader + 4), active (leader + 1) and
// passive (1 escort) fleets. Throws InfeasibleError if no strategy can be
// staffed from the catalog.
IceStageResult optimize_ice_fleet(const VesselCatalog& catalog, const Scenario& s, const RivTable& riv,
                                  double traditional_total);

}  // namespace fleetopt
