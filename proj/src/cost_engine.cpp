#include "fleetopt/cost_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fleetopt/error.hpp"

namespace fleetopt {

namespace {

constexpr double kKnotToMs = 0.514444;
constexpr double kGravity = 9.81;

void require_capability(const VesselType& v, Duty d) {
    if (!capability(v, d))
        throw ValidationError("vessel '" + v.name + "' cannot perform duty " + to_string(d));
}

}  // namespace

double towing_time(const Scenario& s) { return s.towing_time(); }

double effective_charter_rate(const VesselType& v, const Scenario& s) {
    double rate = v.charter_rate;
    if (s.charter_mode == CharterMode::Regression) {
        if (!s.market) throw ValidationError("charter regression needs market inputs");
        rate = charter_rate_estimate(v, *s.market);
    }
    return rate * s.charter_multiplier;
}

DutyCost towing_costs(const VesselType& v, int n_tugs, const Scenario& s) {
    require_capability(v, Duty::Towing);
    if (n_tugs < 1) throw ValidationError("towing needs at least one tug");
    const double t = s.towing_time();
    return {effective_charter_rate(v, s) * t,
            s.p_fuel * 24.0 * t * s.k_red * s.towing_power_min(n_tugs) * s.q};
}

DutyCost ah_costs(const VesselType& v, const Scenario& s) {
    require_capability(v, Duty::AnchorHandling);
    return {effective_charter_rate(v, s) * s.t_ah, s.p_fuel * s.t_ah * s.c_ah};
}

DutyCost supply_costs(const VesselType& v, const Scenario& s) {
    require_capability(v, Duty::Supply);
    const VoyageProfile p = voyage_profile(v, s);
    return {effective_charter_rate(v, s) * s.t_op, s.p_fuel * s.t_op * p.fuel_per_voyage / p.t_voyage};
}

DutyCost standby_costs(const VesselType& v, const Scenario& s) {
    require_capability(v, Duty::Standby);
    const double T = s.active_days();
    return {effective_charter_rate(v, s) * T, s.p_fuel * T * s.c_standby};
}

DutyCost ice_mgmt_costs(const VesselType& v, const Scenario& s) {
    require_capability(v, Duty::IceManagement);
    const double T = s.active_days();
    return {effective_charter_rate(v, s) * T, s.p_fuel * T * s.c_ice_management};
}

double wind_reduced_speed(const VesselType& v, int beaufort, const SpeedLossModel& m) {
    if (m.rows.empty()) throw ValidationError("wind speed-loss model has no coefficient rows");
    const double v0 = m.calm_water_speed;
    if (beaufort <= 0) return v0;
    const SpeedLossRow* row = &m.rows.front();
    for (const auto& r : m.rows)
        if (std::fabs(r.block_coefficient - v.block_coefficient) <
            std::fabs(row->block_coefficient - v.block_coefficient))
            row = &r;
    const double fr = v.length_pp > 0 ? v0 * kKnotToMs / std::sqrt(kGravity * v.length_pp) : 0.0;
    const double c_u = row->a + row->b * fr + row->c * fr * fr;
    const double bn = static_cast<double>(beaufort);
    const double disp = v.displacement > 0 ? v.displacement : 1.0;
    const double c_form =
        m.form_linear * bn + std::pow(bn, m.form_power) / (m.form_divisor * std::pow(disp, 2.0 / 3.0));
    const double loss_pct = m.c_beta * c_u * c_form;
    const double speed = v0 * (1.0 - loss_pct / 100.0);
    // keep a positive floor so transit time stays finite
    return std::max(speed, 0.05 * v0);
}

double cruising_speed(const VesselType& v, const Scenario& s) {
    if (s.speed_mode == SpeedMode::WindLoss) {
        if (!s.speed_loss) throw ValidationError("wind speed-loss mode needs a coefficient table");
        return wind_reduced_speed(v, s.beaufort, *s.speed_loss);
    }
    return v.cruising_speed;
}

VoyageProfile voyage_profile(const VesselType& v, const Scenario& s) {
    VoyageProfile p;
    p.t_p = 1.426 + 0.0005 * v.deadweight;
    p.t_pl = 0.6 + 0.00021 * v.deadweight;
    p.t_mov = s.dist_sup / (24.0 * cruising_speed(v, s));
    p.t_voyage = p.t_p + p.t_pl + 2.0 * p.t_mov;
    p.fuel_per_voyage = p.t_p * s.c_port + p.t_pl * s.c_installation + 2.0 * p.t_mov * v.cruising_fuel_rate;
    return p;
}

double useful_deck_area(const VesselType& v, double s_deck, double k_s) {
    return std::min(v.deck_area * k_s, s_deck);
}

double supply_rate(const std::vector<const VesselType*>& vessels, const Scenario& s) {
    double rate = 0.0;
    for (const auto* v : vessels)
        rate += 30.0 * useful_deck_area(*v, s.s_deck, s.k_s) / voyage_profile(*v, s).t_voyage;
    return rate;
}

double ice_class_charter_factor(const VesselType& v) { return 0.55 * v.icebreaking_capability + 1.0; }

double charter_rate_estimate(const VesselType& v, const MarketContext& m) {
    if (m.betas.size() != 14)
        throw ValidationError("charter regression needs exactly 14 coefficients, got " +
                              std::to_string(m.betas.size()));
    const auto& b = m.betas;
    const double age = static_cast<double>(m.reference_year - v.year_launched);
    const double k_dp2 = v.dp_class >= 2 ? 1.0 : 0.0;
    const double lin = b[0] + b[1] * v.deck_area + b[2] * v.power + b[3] * v.deadweight + b[4] * k_dp2 +
                       b[5] * age + b[6] * m.duration + b[7] * m.days_forward +
                       b[8] * (m.k_production ? 1.0 : 0.0) + b[9] * (m.k_drilling ? 1.0 : 0.0) +
                       b[10] * (m.k_brazil ? 1.0 : 0.0) + b[11] * m.oil_price + b[12] * m.spot_rate +
                       b[13] * m.oil_production;
    return std::exp(ice_class_charter_factor(v) * lin);
}

}  // namespace fleetopt
