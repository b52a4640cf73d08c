#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fleetopt/scenario.hpp"
#include "fleetopt/vessel_catalog.hpp"

namespace fleetopt {

// WMO stages of development used by POLARIS, thinnest first.
enum class WmoIceType : int {
    IceFree = 0,
    NewIce,
    GreyIce,
    GreyWhiteIce,
    ThinFirstYear1,   // 0.30-0.50 m
    ThinFirstYear2,   // 0.50-0.70 m
    MediumFirstYearThin,  // 0.70-1.00 m
    MediumFirstYear,  // 1.00-1.20 m
    ThickFirstYear,   // >= 1.20 m
    SecondYear,
    LightMultiYear,
    HeavyMultiYear
};
inline constexpr int kWmoIceTypeCount = 12;
std::string to_string(WmoIceType t);

// Partial concentrations in tenths per ice type.
struct IceRegime {
    std::array<double, kWmoIceTypeCount> tenths{};
    double& operator[](WmoIceType t) { return tenths[static_cast<int>(t)]; }
    double operator[](WmoIceType t) const { return tenths[static_cast<int>(t)]; }
    void validate() const;
};

class RivTable {
public:
    RivTable() = default;
    void set(IceClass c, const std::array<int, kWmoIceTypeCount>& values);
    bool covers(IceClass c) const { return rows_.count(c) != 0; }
    int riv(IceClass c, WmoIceType t) const;
    const std::map<IceClass, std::array<int, kWmoIceTypeCount>>& rows() const { return rows_; }

    // (ice type, weaker class, stronger class) triples where the stronger
    // class has a lower RIV, checked along the whole ladder.
    struct Inversion {
        WmoIceType type;
        IceClass weaker;
        IceClass stronger;
    };
    std::vector<Inversion> monotonicity_violations() const;
    // Same check restricted to classes of one family (PC, or Baltic plus None).
    std::vector<Inversion> family_monotonicity_violations() const;

    bool operator==(const RivTable&) const = default;

private:
    std::map<IceClass, std::array<int, kWmoIceTypeCount>> rows_;
};

// POLARIS RIV values for all twelve classes.
RivTable default_riv_table();
// Rows = ice classes (first column "ice_class"), columns = WMO ice types in
// the order of WmoIceType. Throws ParseError/SchemaError.
RivTable load_riv_table(std::string_view source);
RivTable load_riv_table_file(const std::string& path);
std::string serialize_riv_table(const RivTable& riv);

double equivalent_ice_thickness(const IceCondition& ice);

// Level ice of thickness h_i at concentration 10*c tenths, remainder open water.
WmoIceType wmo_type_for_thickness(double h);
IceRegime regime_from_condition(const IceCondition& ice);

enum class RioBand { Normal, Elevated, SpecialConsideration };
std::string to_string(RioBand b);

double risk_index_outcome(IceClass c, const IceRegime& regime, const RivTable& riv);
RioBand classify_rio(double rio);
bool rio_acceptable(double rio, RioPolicy policy);

// Worst condition with positive probability; operational checks use it.
const IceCondition& operational_condition(const Scenario& s);
// Condition labelled severe (the worst by h_eq if none is labelled so);
// ice-class requirements for escort and leader roles use it.
const IceCondition& design_condition(const Scenario& s);

// Weakest class whose RIO on the design condition satisfies the policy.
// Throws InfeasibleError if no class in the table qualifies.
IceClass min_feasible_ice_class(const Scenario& s, const RivTable& riv, RioPolicy policy);

// Vessel operability on the operational condition under the scenario policy.
bool vessel_operable(const VesselType& v, const Scenario& s, const RivTable& riv);

}  // namespace fleetopt
