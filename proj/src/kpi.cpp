#include "fleetopt/kpi.hpp"

#include <algorithm>

#include "fleetopt/error.hpp"
#include "fleetopt/fleet_optimizer.hpp"
#include "fleetopt/risk_engine.hpp"

namespace fleetopt {

std::string kpi_key(KpiAxis a) {
    switch (a) {
        case KpiAxis::Supply: return "supply";
        case KpiAxis::IceManagement: return "ice_management";
        case KpiAxis::Towing: return "towing";
        case KpiAxis::FireFighting: return "fifi";
        case KpiAxis::DpClass: return "dp_class";
        case KpiAxis::IceClass: return "ice_class";
        case KpiAxis::FleetAge: return "fleet_age";
        case KpiAxis::Environmental: return "environmental";
    }
    return "unknown";
}

std::string kpi_label(KpiAxis a) {
    switch (a) {
        case KpiAxis::Supply: return "Supply";
        case KpiAxis::IceManagement: return "Ice management";
        case KpiAxis::Towing: return "Towing";
        case KpiAxis::FireFighting: return "Fi-Fi";
        case KpiAxis::DpClass: return "DP class";
        case KpiAxis::IceClass: return "Ice class";
        case KpiAxis::FleetAge: return "Fleet age";
        case KpiAxis::Environmental: return "Environmental friendliness";
    }
    return "unknown";
}

double KpiVector::display(KpiAxis a) const { return std::clamp((*this)[a], 0.0, 100.0); }

double kpi_supply(double supply_rate, double cons_rate) {
    if (!(cons_rate > 0)) throw ValidationError("supply KPI needs a positive consumption rate");
    return 100.0 * supply_rate / cons_rate;
}

double kpi_dp(const std::vector<int>& dp_classes) {
    if (dp_classes.empty()) return 0.0;
    double sum = 0.0;
    for (int d : dp_classes) sum += d;
    return 100.0 * sum / static_cast<double>(dp_classes.size()) / 3.0;
}

double kpi_ice_class(const std::vector<IceClass>& classes) {
    if (classes.empty()) return 0.0;
    double sum = 0.0;
    for (auto c : classes) sum += 100.0 * ice_class_strength(c) / 11.0;
    return sum / static_cast<double>(classes.size());
}

double kpi_fleet_age(const std::vector<int>& years_launched, int reference_year) {
    if (years_launched.empty()) return 0.0;
    double sum = 0.0;
    for (int y : years_launched) sum += reference_year - y;
    return 100.0 - 2.0 * sum / static_cast<double>(years_launched.size());
}

double kpi_environmental(double fuel_tons) { return 100.0 - (fuel_tons - 4200.0) / 165.0; }

double kpi_letter(std::optional<StrategyLetter> letter) {
    if (!letter) return 0.0;
    return 100.0 * (3 - static_cast<int>(*letter)) / 3.0;
}

std::optional<StrategyLetter> towing_letter(int n_tugs) {
    if (n_tugs >= 3) return StrategyLetter::A;
    if (n_tugs == 2) return StrategyLetter::B;
    if (n_tugs == 1) return StrategyLetter::C;
    return std::nullopt;
}

KpiVector kpi_report(const FullSolution& sol, const Scenario& s, const VesselCatalog& catalog) {
    const auto& ev = sol.traditional.evaluation;
    std::vector<std::size_t> fleet;
    for (const auto& v : ev.assignment.vessels) fleet.push_back(v.type_index);
    for (auto i : sol.ice.strategy.vessels) fleet.push_back(i);

    std::vector<int> dp, years, fifi;
    std::vector<IceClass> classes;
    for (auto i : fleet) {
        const auto& v = catalog.types.at(i);
        dp.push_back(v.dp_class);
        years.push_back(v.year_launched);
        fifi.push_back(v.fifi_class);
        classes.push_back(v.ice_class);
    }

    KpiVector k;
    k[KpiAxis::Supply] = kpi_supply(ev.supply_rate, s.cons_rate);
    std::optional<StrategyLetter> ice_letter;
    switch (sol.ice.strategy.kind) {
        case IceStrategyKind::Complete: ice_letter = StrategyLetter::A; break;
        case IceStrategyKind::Active: ice_letter = StrategyLetter::B; break;
        case IceStrategyKind::Passive: ice_letter = StrategyLetter::C; break;
        case IceStrategyKind::None: break;
    }
    k[KpiAxis::IceManagement] = kpi_letter(ice_letter);
    k[KpiAxis::Towing] = kpi_letter(towing_letter(ev.assignment.n_tugs()));
    k[KpiAxis::FireFighting] = kpi_letter(fire_scenario(fifi));
    k[KpiAxis::DpClass] = kpi_dp(dp);
    k[KpiAxis::IceClass] = kpi_ice_class(classes);
    k[KpiAxis::FleetAge] = kpi_fleet_age(years, s.kpi_reference_year);
    k[KpiAxis::Environmental] = kpi_environmental((ev.breakdown.fuel() + sol.ice.risk.strategy_fuel) / s.p_fuel);
    return k;
}

}  // namespace fleetopt
