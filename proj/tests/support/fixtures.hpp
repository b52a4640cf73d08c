#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "fleetopt/fleet_optimizer.hpp"
#include "fleetopt/ice_model.hpp"
#include "fleetopt/scenario.hpp"
#include "fleetopt/vessel_catalog.hpp"

namespace fx {

inline std::string data(const std::string& name) { return std::string(FLEETOPT_DEFAULT_DATA_DIR) + "/" + name; }

inline const fleetopt::VesselCatalog& catalog() {
    static const auto c = fleetopt::load_catalog_file(data("vessels_a1_a2.csv"));
    return c;
}
inline const fleetopt::RivTable& riv() {
    static const auto r = fleetopt::load_riv_table_file(data("polaris_riv.csv"));
    return r;
}
inline fleetopt::Scenario case1() { return fleetopt::load_scenario_file(data("case1.toml")); }
inline fleetopt::Scenario case2() { return fleetopt::load_scenario_file(data("case2.toml")); }
inline fleetopt::Scenario sensitivity_base() { return fleetopt::load_scenario_file(data("sensitivity_base.toml")); }

// Case 2 with only the ice-free mild condition and the elevated RIO band allowed.
inline fleetopt::Scenario case2_mild() {
    auto s = case2();
    fleetopt::apply_override(s, "ice.probabilities=1,0,0");
    s.rio_policy = fleetopt::RioPolicy::AllowElevated;
    return s;
}

inline std::vector<int> counts(const std::string& text) { return fleetopt::parse_counts(text, catalog()); }

inline const fleetopt::VesselType& type(const std::string& name) { return catalog()[catalog().require_index(name)]; }

inline bool rel_close(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b)) || a == b;
}

}  // namespace fx
