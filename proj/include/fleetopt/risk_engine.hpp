#pragma once

#include <optional>
#include <vector>

#include "fleetopt/scenario.hpp"
#include "fleetopt/vessel_catalog.hpp"

namespace fleetopt {

struct RiskPair {
    double asset = 0.0;  // USD
    double human = 0.0;  // USD (fatalities times value of life)
    double total() const { return asset + human; }
};

Severity towing_severity(int n_tugs);
RiskPair towing_risk(int n_tugs, const Scenario& s);

double supply_visit_frequency(const std::vector<const VesselType*>& supply_vessels, const Scenario& s);
// Expected contact loss of one vessel with the given DP class at visit
// frequency n_spw, over the active period.
RiskPair dp_class_risk(int dp_class, double n_spw, const Scenario& s);
RiskPair supply_collision_risk(const std::vector<const VesselType*>& supply_vessels, const Scenario& s);

// Scenario A/B/C from the Fi-Fi classes present; nullopt if fewer than two
// vessels have class >= 1.
std::optional<StrategyLetter> fire_scenario(const std::vector<int>& fifi_classes);
// Throws InfeasibleError if fewer than two Fi-Fi capable vessels.
RiskPair fire_risk(const std::vector<int>& fifi_classes, const Scenario& s);

// Equal split across the vessels of one duty. Throws on zero vessels.
RiskPair allocate_risk(const RiskPair& total, int duty_vessel_count);

}  // namespace fleetopt
