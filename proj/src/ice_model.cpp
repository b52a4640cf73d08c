#include "fleetopt/ice_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "csv.hpp"
#include "fleetopt/error.hpp"
#include "util.hpp"

namespace fleetopt {

namespace {

const char* wmo_names[kWmoIceTypeCount] = {
    "ice_free", "new_ice", "grey_ice", "grey_white_ice", "thin_first_year_1",
    "thin_first_year_2", "medium_first_year_thin", "medium_first_year", "thick_first_year",
    "second_year", "light_multi_year", "heavy_multi_year"};

// Lower thickness bound (m) of each first-year stage from NewIce upwards.
constexpr double kStageLowerBound[] = {0.0, 0.10, 0.15, 0.30, 0.50, 0.70, 1.00, 1.20};

}  // namespace

std::string to_string(WmoIceType t) { return wmo_names[static_cast<int>(t)]; }

void IceRegime::validate() const {
    double sum = 0.0;
    for (double c : tenths) {
        if (!(c >= 0)) throw ValidationError("ice regime: negative concentration");
        sum += c;
    }
    if (sum > 10.0 + 1e-9) throw ValidationError("ice regime: concentrations exceed 10 tenths");
}

void RivTable::set(IceClass c, const std::array<int, kWmoIceTypeCount>& values) { rows_[c] = values; }

int RivTable::riv(IceClass c, WmoIceType t) const {
    auto it = rows_.find(c);
    if (it == rows_.end()) throw ValidationError("RIV table has no row for ice class " + to_string(c));
    return it->second[static_cast<int>(t)];
}

namespace {

std::vector<RivTable::Inversion> inversions(const RivTable& riv, const std::vector<IceClass>& ladder) {
    std::vector<RivTable::Inversion> out;
    for (int t = 0; t < kWmoIceTypeCount; ++t) {
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            for (std::size_t j = i + 1; j < ladder.size(); ++j) {
                // ladder[i] is stronger than ladder[j]
                if (!riv.covers(ladder[i]) || !riv.covers(ladder[j])) continue;
                const auto type = static_cast<WmoIceType>(t);
                if (riv.riv(ladder[i], type) < riv.riv(ladder[j], type))
                    out.push_back({type, ladder[j], ladder[i]});
            }
        }
    }
    return out;
}

}  // namespace

std::vector<RivTable::Inversion> RivTable::monotonicity_violations() const {
    return inversions(*this, {kAllIceClasses.begin(), kAllIceClasses.end()});
}

std::vector<RivTable::Inversion> RivTable::family_monotonicity_violations() const {
    auto pc = inversions(*this, {IceClass::PC1, IceClass::PC2, IceClass::PC3, IceClass::PC4,
                                 IceClass::PC5, IceClass::PC6, IceClass::PC7});
    auto baltic = inversions(*this, {IceClass::IASuper, IceClass::IA, IceClass::IB, IceClass::IC,
                                     IceClass::None});
    pc.insert(pc.end(), baltic.begin(), baltic.end());
    return pc;
}

RivTable default_riv_table() {
    // Columns follow WmoIceType order.
    RivTable t;
    t.set(IceClass::PC1, {3, 3, 3, 3, 2, 2, 2, 2, 2, 2, 1, 1});
    t.set(IceClass::PC2, {3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 1, 0});
    t.set(IceClass::PC3, {3, 3, 3, 3, 2, 2, 2, 2, 2, 1, 0, -1});
    t.set(IceClass::PC4, {3, 3, 3, 3, 2, 2, 2, 2, 1, 0, -1, -2});
    t.set(IceClass::PC5, {3, 3, 3, 3, 2, 2, 1, 1, 0, -1, -2, -2});
    t.set(IceClass::PC6, {3, 2, 2, 2, 2, 1, 1, 0, -1, -2, -3, -3});
    t.set(IceClass::PC7, {3, 2, 2, 2, 1, 1, 0, -1, -2, -3, -3, -3});
    t.set(IceClass::IASuper, {3, 2, 2, 2, 2, 1, 0, -1, -2, -3, -4, -4});
    t.set(IceClass::IA, {3, 2, 2, 2, 1, 0, -1, -2, -3, -4, -5, -5});
    t.set(IceClass::IB, {3, 2, 2, 1, 0, -1, -2, -3, -4, -5, -6, -6});
    t.set(IceClass::IC, {3, 2, 1, 0, -1, -2, -3, -4, -5, -6, -7, -8});
    t.set(IceClass::None, {3, 1, 0, -1, -2, -3, -4, -5, -6, -7, -8, -8});
    return t;
}

RivTable load_riv_table(std::string_view source) {
    const auto rows = csv::parse(source);
    if (rows.empty()) throw SchemaError("RIV table: missing header row");
    const auto& header = rows.front();
    if (header.size() != kWmoIceTypeCount + 1 || header[0] != "ice_class")
        throw SchemaError("RIV table: header must be ice_class followed by " +
                          std::to_string(kWmoIceTypeCount) + " ice type columns");
    for (int t = 0; t < kWmoIceTypeCount; ++t)
        if (header[t + 1] != wmo_names[t])
            throw SchemaError("RIV table: column " + std::to_string(t + 2) + " must be '" +
                              wmo_names[t] + "', found '" + header[t + 1] + "'");
    RivTable riv;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size())
            throw ParseError("RIV table: row " + std::to_string(r) + " has wrong field count");
        IceClass c;
        try {
            c = parse_ice_class(row[0]);
        } catch (const ParseError&) {
            throw ParseError("RIV table: row " + std::to_string(r) + ", column 'ice_class': unknown class '" + row[0] + "'");
        }
        std::array<int, kWmoIceTypeCount> values{};
        for (int t = 0; t < kWmoIceTypeCount; ++t) {
            const std::string& s = row[t + 1];
            int v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
                throw ParseError("RIV table: row " + std::to_string(r) + ", column '" + header[t + 1] +
                                 "': not an integer '" + s + "'");
            values[t] = v;
        }
        if (riv.covers(c)) throw ValidationError("RIV table: duplicate row for " + to_string(c));
        riv.set(c, values);
    }
    return riv;
}

RivTable load_riv_table_file(const std::string& path) {
    return load_riv_table(util::read_file(path, "RIV table"));
}

std::string serialize_riv_table(const RivTable& riv) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header = {"ice_class"};
    for (auto* n : wmo_names) header.emplace_back(n);
    rows.push_back(header);
    for (IceClass c : kAllIceClasses) {
        if (!riv.covers(c)) continue;
        std::vector<std::string> row = {to_string(c)};
        for (int t = 0; t < kWmoIceTypeCount; ++t)
            row.push_back(std::to_string(riv.riv(c, static_cast<WmoIceType>(t))));
        rows.push_back(row);
    }
    return csv::write(rows);
}

double equivalent_ice_thickness(const IceCondition& ice) {
    const double k_sn = ice.snow_thickness >= 0.5 ? 0.5 : 0.33;
    return ice.concentration *
           (ice.level_ice_thickness + 0.25 * ice.ridging * ice.level_ice_thickness + k_sn * ice.snow_thickness);
}

WmoIceType wmo_type_for_thickness(double h) {
    if (h <= 0.0) return WmoIceType::IceFree;
    int stage = 0;
    for (int i = 0; i < 8; ++i)
        if (h >= kStageLowerBound[i]) stage = i;
    return static_cast<WmoIceType>(stage + 1);
}

IceRegime regime_from_condition(const IceCondition& ice) {
    IceRegime r;
    const double ice_tenths = 10.0 * ice.concentration;
    if (ice_tenths <= 0.0 || ice.level_ice_thickness <= 0.0) {
        r[WmoIceType::IceFree] = 10.0;
        return r;
    }
    r[wmo_type_for_thickness(ice.level_ice_thickness)] = ice_tenths;
    r[WmoIceType::IceFree] = 10.0 - ice_tenths;
    return r;
}

std::string to_string(RioBand b) {
    switch (b) {
        case RioBand::Normal: return "normal";
        case RioBand::Elevated: return "elevated";
        case RioBand::SpecialConsideration: return "special_consideration";
    }
    return "normal";
}

double risk_index_outcome(IceClass c, const IceRegime& regime, const RivTable& riv) {
    if (!riv.covers(c)) throw ValidationError("RIV table has no row for ice class " + to_string(c));
    double rio = 0.0;
    for (int t = 0; t < kWmoIceTypeCount; ++t)
        rio += regime.tenths[t] * riv.riv(c, static_cast<WmoIceType>(t));
    return rio;
}

RioBand classify_rio(double rio) {
    if (rio >= 0) return RioBand::Normal;
    if (rio >= -10) return RioBand::Elevated;
    return RioBand::SpecialConsideration;
}

bool rio_acceptable(double rio, RioPolicy policy) {
    const RioBand b = classify_rio(rio);
    return policy == RioPolicy::NormalOnly ? b == RioBand::Normal : b != RioBand::SpecialConsideration;
}

const IceCondition& operational_condition(const Scenario& s) {
    const IceCondition* worst = nullptr;
    double worst_h = -1.0;
    for (const auto& c : s.ice_conditions) {
        if (c.probability <= 0) continue;
        const double h = equivalent_ice_thickness(c);
        if (!worst || h > worst_h || (h == worst_h && c.label > worst->label)) {
            worst = &c;
            worst_h = h;
        }
    }
    if (!worst) throw ValidationError("scenario has no ice condition with positive probability");
    return *worst;
}

const IceCondition& design_condition(const Scenario& s) {
    if (const auto* c = s.find_condition(IceLabel::Severe)) return *c;
    if (s.ice_conditions.empty()) throw ValidationError("scenario has no ice conditions");
    const IceCondition* worst = &s.ice_conditions.front();
    for (const auto& c : s.ice_conditions)
        if (equivalent_ice_thickness(c) > equivalent_ice_thickness(*worst)) worst = &c;
    return *worst;
}

IceClass min_feasible_ice_class(const Scenario& s, const RivTable& riv, RioPolicy policy) {
    const IceRegime regime = regime_from_condition(design_condition(s));
    for (auto it = kAllIceClasses.rbegin(); it != kAllIceClasses.rend(); ++it) {
        if (!riv.covers(*it)) continue;
        if (rio_acceptable(risk_index_outcome(*it, regime, riv), policy)) return *it;
    }
    throw InfeasibleError("no feasible ice class for the design ice condition");
}

bool vessel_operable(const VesselType& v, const Scenario& s, const RivTable& riv) {
    const IceRegime regime = regime_from_condition(operational_condition(s));
    return rio_acceptable(risk_index_outcome(v.ice_class, regime, riv), s.rio_policy);
}

}  // namespace fleetopt
