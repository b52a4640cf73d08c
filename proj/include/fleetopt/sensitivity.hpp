#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fleetopt/abc_solver.hpp"
#include "fleetopt/fleet_optimizer.hpp"

namespace fleetopt {

struct SensitivityRow {
    double multiplier = 1.0;
    std::uint64_t seed = 0;
    std::vector<int> counts;  // traditional fleet
    IceStrategy ice;
    double traditional_total = 0.0;
    double combined_total = 0.0;
    double delta_percent = 0.0;  // combined total against the 1.0 run
    std::string label;           // fleet identity, S1, S2, ... in order of appearance
};

// Re-optimizes the scenario for each multiplier of one axis (see
// scale_axis). Row i uses seed params.seed + i; the 1.0 run is added as the
// reference when it is not in the list. Throws ValidationError on unknown axes.
std::vector<SensitivityRow> sensitivity_run(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv,
                                            std::string_view axis, const std::vector<double>& multipliers,
                                            const AbcParams& params);

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows, std::string_view axis,
                            const VesselCatalog& catalog);

}  // namespace fleetopt
