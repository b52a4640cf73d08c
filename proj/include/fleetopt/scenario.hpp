#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fleetopt {

enum class IceLabel { Mild, Average, Severe };
std::string to_string(IceLabel l);
IceLabel parse_ice_label(std::string_view text);

struct IceCondition {
    IceLabel label = IceLabel::Mild;
    double concentration = 0.0;         // fraction 0..1
    double level_ice_thickness = 0.0;   // m
    double ridging = 0.0;               // ball scale
    double snow_thickness = 0.0;        // m
    double probability = 0.0;

    bool operator==(const IceCondition&) const = default;
};

enum class Severity { Insignificant = 0, Minor = 1, Severe = 2 };
std::string to_string(Severity s);

struct Loss {
    double asset = 0.0;       // USD
    double fatalities = 0.0;  // statistical fatalities
    bool operator==(const Loss&) const = default;
};

// Asset and human losses per damage severity.
struct DamageTable {
    std::array<Loss, 3> by_severity{};
    const Loss& operator[](Severity s) const { return by_severity[static_cast<int>(s)]; }
    Loss& operator[](Severity s) { return by_severity[static_cast<int>(s)]; }
    bool operator==(const DamageTable&) const = default;
};

// Fire scenarios A (suppressed early), B, C (escalated).
enum class StrategyLetter { A = 0, B = 1, C = 2 };
std::string to_string(StrategyLetter l);

struct FireTable {
    std::array<Loss, 3> by_scenario{};
    const Loss& operator[](StrategyLetter s) const { return by_scenario[static_cast<int>(s)]; }
    Loss& operator[](StrategyLetter s) { return by_scenario[static_cast<int>(s)]; }
    bool operator==(const FireTable&) const = default;
};

// Base contact frequencies (events/year) per DP class and severity.
struct DpFrequencyTable {
    std::array<std::array<double, 3>, 4> by_dp{};  // [dp][severity]
    bool operator==(const DpFrequencyTable&) const = default;
};

enum class RioPolicy { NormalOnly, AllowElevated };
std::string to_string(RioPolicy p);
RioPolicy parse_rio_policy(std::string_view text);

// Inputs of the optional charter-rate regression.
struct MarketContext {
    double duration = 0.0;         // Dur, days
    double days_forward = 180.0;   // DF, days
    bool k_production = false;
    bool k_drilling = false;
    bool k_brazil = true;
    double oil_price = 60.0;       // USD/bbl
    double spot_rate = 20000.0;    // USD
    double oil_production = 400000.0;  // m3/month
    int reference_year = 2020;     // vessel age is reference_year - year_launched
    std::vector<double> betas;     // exactly 14 when the estimator is used

    bool operator==(const MarketContext&) const = default;
};

enum class CharterMode { Catalog, Regression };
enum class SpeedMode { Catalog, WindLoss };

// Coefficients of the wind speed-loss plug-in:
//   loss% = c_beta * C_U(C_b, Fr) * C_form(BN, displacement)
//   C_U   = a + b*Fr + c*Fr^2, picked from the row with the nearest C_b
//   C_form = form_linear*BN + BN^form_power / (form_divisor * displacement^(2/3))
struct SpeedLossRow {
    double block_coefficient = 0.0;
    double a = 0.0, b = 0.0, c = 0.0;
    bool operator==(const SpeedLossRow&) const = default;
};

struct SpeedLossModel {
    double calm_water_speed = 10.0;  // kn
    double c_beta = 1.0;
    double form_linear = 0.7;
    double form_power = 6.5;
    double form_divisor = 22.0;
    std::vector<SpeedLossRow> rows;
    bool operator==(const SpeedLossModel&) const = default;
};

struct Scenario {
    std::string name = "default";

    // installation
    double cons_rate = 3000.0;              // m2/month
    double s_deck = 300.0;                  // m2
    double h_max = 0.7;                     // m
    double installation_day_rate = 600000;  // USD/day

    // operations
    double t_op = 90.0;    // days
    double t_ah = 18.0;    // days
    double dist_tow = 810.0;  // NM
    double dist_sup = 810.0;  // NM
    double v_tow = 4.0;    // kn
    int beaufort = 4;

    // power requirements, kW; towing entry i is the per-tug minimum for i+1 tugs
    std::vector<double> towing_power = {9600, 5530, 4150, 3120};
    double n_pp_ah_min = 12000.0;

    // fuel
    double p_fuel = 550.0;           // USD/t
    double c_ah = 30.0;              // t/day
    double c_port = 2.0;             // t/day at the supply port
    double c_installation = 10.0;    // t/day at the installation
    double c_standby = 8.0;          // t/day
    double c_ice_management = 20.0;  // t/day
    double k_red = 0.9;
    double q = 0.221e-3;             // t/kWh

    // supply
    double k_s = 0.7;
    double supply_redundancy = 0.0;
    double n_spw_0 = 2.0;

    // risk
    double value_of_life = 30e6;  // USD
    double f_towing = 0.03;       // events/year
    double f_fire = 0.02;         // events/year
    DamageTable damage = default_damage_table();
    FireTable fire = default_fire_table();
    DpFrequencyTable dp_frequency = default_dp_frequency_table();

    // ice
    double p_iceberg = 0.3;
    std::vector<IceCondition> ice_conditions = default_ice_conditions();
    RioPolicy rio_policy = RioPolicy::NormalOnly;

    // charter and speed models
    double charter_multiplier = 1.0;
    CharterMode charter_mode = CharterMode::Catalog;
    std::optional<MarketContext> market;
    SpeedMode speed_mode = SpeedMode::Catalog;
    std::optional<SpeedLossModel> speed_loss;

    int kpi_reference_year = 2020;

    bool operator==(const Scenario&) const = default;

    // Throws ValidationError naming the first offending field.
    void validate() const;

    // Per-tug minimum power for n tugs; n beyond the table reuses the last entry.
    double towing_power_min(int n_tugs) const;

    // Towing duration, days, for both transfer voyages.
    double towing_time() const;
    // Total active days t_op + t_tow + t_ah.
    double active_days() const;

    const IceCondition* find_condition(IceLabel label) const;

    static DamageTable default_damage_table();
    static FireTable default_fire_table();
    static DpFrequencyTable default_dp_frequency_table();
    static std::vector<IceCondition> default_ice_conditions();
};

// Parses a TOML scenario. Missing keys take the defaults above.
Scenario load_scenario(std::string_view source);
Scenario load_scenario_file(const std::string& path);
// Writes every field as TOML; load_scenario(to_toml(s)) == s.
std::string to_toml(const Scenario& s);

// Dotted-key overrides such as "operations.t_op=45". Also accepts the axis
// aliases listed by scenario_axes(). Throws ValidationError on unknown keys.
void apply_override(Scenario& s, std::string_view key, std::string_view value);
void apply_override(Scenario& s, std::string_view assignment);

// Scales a numeric scenario quantity by a factor. Axis names:
//   CR_v       all charter rates
//   t_op       support duration
//   p_fuel     fuel price
//   Cons_rate  cargo consumption
//   dist       towing and supply distances together
//   S_deck     installation deck area
//   VH_E       value of life and every asset loss
//   R_op       installation day rate
// plus any numeric dotted key understood by apply_override.
void scale_axis(Scenario& s, std::string_view axis, double factor);
std::vector<std::string> scenario_axes();
std::vector<std::string> scenario_keys();

}  // namespace fleetopt
