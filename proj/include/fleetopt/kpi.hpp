#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fleetopt/scenario.hpp"
#include "fleetopt/vessel_catalog.hpp"

namespace fleetopt {

enum class KpiAxis {
    Supply,
    IceManagement,
    Towing,
    FireFighting,
    DpClass,
    IceClass,
    FleetAge,
    Environmental
};
inline constexpr int kKpiCount = 8;
inline constexpr std::array<KpiAxis, kKpiCount> kAllKpiAxes = {
    KpiAxis::Supply,  KpiAxis::IceManagement, KpiAxis::Towing,   KpiAxis::FireFighting,
    KpiAxis::DpClass, KpiAxis::IceClass,      KpiAxis::FleetAge, KpiAxis::Environmental};

// Snake-case key used in files ("supply", "ice_management", ...).
std::string kpi_key(KpiAxis a);
// Axis label used on the chart ("Supply", "Ice management", ...).
std::string kpi_label(KpiAxis a);

// Raw values may exceed 100; display() clips them and excess() flags it.
struct KpiVector {
    std::array<double, kKpiCount> values{};

    double operator[](KpiAxis a) const { return values[static_cast<int>(a)]; }
    double& operator[](KpiAxis a) { return values[static_cast<int>(a)]; }
    double display(KpiAxis a) const;
    bool excess(KpiAxis a) const { return (*this)[a] > 100.0; }
};

double kpi_supply(double supply_rate, double cons_rate);
double kpi_dp(const std::vector<int>& dp_classes);
// Mean of 100 k / 11 where k is the ladder strength (PC1 = 11 ... IC = 1, none = 0).
double kpi_ice_class(const std::vector<IceClass>& classes);
double kpi_fleet_age(const std::vector<int>& years_launched, int reference_year);
double kpi_environmental(double fuel_tons);
// A -> 100, B -> 66.7, C -> 33.3, nothing -> 0.
double kpi_letter(std::optional<StrategyLetter> letter);
// Towing letter from the number of tugs: >= 3 A, 2 B, 1 C.
std::optional<StrategyLetter> towing_letter(int n_tugs);

}  // namespace fleetopt
