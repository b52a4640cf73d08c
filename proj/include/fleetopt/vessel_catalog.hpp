#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fleetopt {

// Ice classes on one ladder, strongest first. The numeric value is the
// ladder position, so a smaller value means a stronger class.
enum class IceClass : int {
    PC1 = 0, PC2, PC3, PC4, PC5, PC6, PC7, IASuper, IA, IB, IC, None
};

inline constexpr int kIceClassCount = 12;

inline constexpr std::array<IceClass, kIceClassCount> kAllIceClasses = {
    IceClass::PC1, IceClass::PC2, IceClass::PC3, IceClass::PC4,
    IceClass::PC5, IceClass::PC6, IceClass::PC7, IceClass::IASuper,
    IceClass::IA,  IceClass::IB,  IceClass::IC,  IceClass::None};

// Canonical spelling: "PC1".."PC7", "IA-Super", "IA", "IB", "IC", "None".
std::string to_string(IceClass c);
// Accepts the canonical spelling plus common variants ("PC 3", "IA Super",
// "IAS", "0", "none", "below IC"). Throws ParseError otherwise.
IceClass parse_ice_class(std::string_view text);

// 11 for PC1 down to 1 for IC, 0 for no ice class.
inline int ice_class_strength(IceClass c) { return 11 - static_cast<int>(c); }
inline bool stronger_than(IceClass a, IceClass b) { return static_cast<int>(a) < static_cast<int>(b); }
// One step stronger on the ladder; PC1 has no stronger neighbour.
std::optional<IceClass> one_step_stronger(IceClass c);

enum class Duty { Supply, Towing, AnchorHandling, Standby, FireFighting, OilRecovery, IceManagement };

std::string to_string(Duty d);

struct VesselType {
    std::string name;
    std::string reference_name;
    int year_launched = 0;
    double deadweight = 0.0;              // t
    double deck_area = 0.0;               // m2
    double power = 0.0;                   // kW
    IceClass ice_class = IceClass::None;
    double icebreaking_capability = 0.0;  // m
    int fifi_class = 0;
    int dp_class = 0;
    bool can_oil_recovery = false;
    bool can_towing = false;
    bool can_anchor_handling = false;
    bool can_standby = false;
    double charter_rate = 0.0;        // USD/day
    double cruising_fuel_rate = 0.0;  // t/day
    double cruising_speed = 0.0;      // kn
    double displacement = 0.0;        // t
    double block_coefficient = 0.0;
    double length_pp = 0.0;           // m

    bool operator==(const VesselType&) const = default;

    // Throws ValidationError on out-of-range fields.
    void validate() const;
};

struct VesselCatalog {
    std::vector<VesselType> types;
    int max_count_per_type = 5;

    std::size_t size() const { return types.size(); }
    const VesselType& operator[](std::size_t i) const { return types[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    // Like index_of but throws ValidationError naming the unknown type.
    std::size_t require_index(std::string_view name) const;

    bool operator==(const VesselCatalog&) const = default;

    void validate() const;
};

// Parses comma-separated text with a header row. Required columns:
// name, year_launched, deadweight, deck_area, power, ice_class,
// icebreaking_capability, fifi_class, dp_class, can_oil_recovery, can_towing,
// can_anchor_handling, can_standby, charter_rate, cruising_fuel_rate,
// cruising_speed, block_coefficient, displacement.
// Optional: reference_name, length_pp. Flags accept + - 1 0 true false yes no.
// power is in kW.
VesselCatalog load_catalog(std::string_view source, int max_count_per_type = 5);
VesselCatalog load_catalog_file(const std::string& path, int max_count_per_type = 5);
std::string serialize_catalog(const VesselCatalog& catalog);

bool capability(const VesselType& v, Duty d);

}  // namespace fleetopt
