#pragma once

#include <vector>

#include "fleetopt/scenario.hpp"
#include "fleetopt/vessel_catalog.hpp"

namespace fleetopt {

struct DutyCost {
    double charter = 0.0;  // USD
    double fuel = 0.0;     // USD
    double total() const { return charter + fuel; }
};

struct VoyageProfile {
    double t_p = 0.0;       // days of cargo work at the supply port
    double t_pl = 0.0;      // days of cargo work at the installation
    double t_mov = 0.0;     // days of one-way transit
    double t_voyage = 0.0;  // t_p + t_pl + 2 t_mov
    double fuel_per_voyage = 0.0;  // t
};

double towing_time(const Scenario& s);

// Charter rate in effect for the scenario: catalog rate or regression
// estimate, times the scenario charter multiplier.
double effective_charter_rate(const VesselType& v, const Scenario& s);

DutyCost towing_costs(const VesselType& v, int n_tugs, const Scenario& s);
DutyCost ah_costs(const VesselType& v, const Scenario& s);
DutyCost supply_costs(const VesselType& v, const Scenario& s);
DutyCost standby_costs(const VesselType& v, const Scenario& s);
DutyCost ice_mgmt_costs(const VesselType& v, const Scenario& s);

double cruising_speed(const VesselType& v, const Scenario& s);
// Wind speed loss applied to the calm-water speed; BN = 0 returns it unchanged.
double wind_reduced_speed(const VesselType& v, int beaufort, const SpeedLossModel& model);

VoyageProfile voyage_profile(const VesselType& v, const Scenario& s);
double useful_deck_area(const VesselType& v, double s_deck, double k_s = 0.7);
double supply_rate(const std::vector<const VesselType*>& vessels, const Scenario& s);

double ice_class_charter_factor(const VesselType& v);
double charter_rate_estimate(const VesselType& v, const MarketContext& market);

}  // namespace fleetopt
