#include "fleetopt/vessel_catalog.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "csv.hpp"
#include "fleetopt/error.hpp"

namespace fleetopt {

namespace {

std::string normalize(std::string_view s) {
    std::string out;
    for (char ch : s) {
        if (ch == ' ' || ch == '-' || ch == '_') continue;
        out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
    }
    return out;
}

const std::vector<std::string>& required_columns() {
    static const std::vector<std::string> cols = {
        "name", "year_launched", "deadweight", "deck_area", "power", "ice_class",
        "icebreaking_capability", "fifi_class", "dp_class", "can_oil_recovery",
        "can_towing", "can_anchor_handling", "can_standby", "charter_rate",
        "cruising_fuel_rate", "cruising_speed", "block_coefficient", "displacement"};
    return cols;
}

std::string where(std::size_t row, const std::string& column) {
    return "row " + std::to_string(row) + ", column '" + column + "'";
}

double parse_double(const std::string& text, std::size_t row, const std::string& column) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw ParseError("catalog: cannot parse number '" + text + "' at " + where(row, column));
    return value;
}

int parse_int(const std::string& text, std::size_t row, const std::string& column) {
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || text.empty())
        throw ParseError("catalog: cannot parse integer '" + text + "' at " + where(row, column));
    return value;
}

bool parse_flag(const std::string& text, std::size_t row, const std::string& column) {
    std::string t = normalize(text);
    if (text == "+" || t == "1" || t == "TRUE" || t == "YES" || t == "Y") return true;
    if (text == "-" || t == "0" || t == "FALSE" || t == "NO" || t == "N") return false;
    throw ParseError("catalog: cannot parse flag '" + text + "' at " + where(row, column));
}

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    // Prefer the shortest representation that round-trips.
    for (int p = 1; p <= 17; ++p) {
        std::ostringstream t;
        t.precision(p);
        t << v;
        if (std::stod(t.str()) == v) return t.str();
    }
    return os.str();
}

}  // namespace

std::string to_string(IceClass c) {
    switch (c) {
        case IceClass::PC1: return "PC1";
        case IceClass::PC2: return "PC2";
        case IceClass::PC3: return "PC3";
        case IceClass::PC4: return "PC4";
        case IceClass::PC5: return "PC5";
        case IceClass::PC6: return "PC6";
        case IceClass::PC7: return "PC7";
        case IceClass::IASuper: return "IA-Super";
        case IceClass::IA: return "IA";
        case IceClass::IB: return "IB";
        case IceClass::IC: return "IC";
        case IceClass::None: return "None";
    }
    return "None";
}

IceClass parse_ice_class(std::string_view text) {
    const std::string t = normalize(text);
    static const std::map<std::string, IceClass> table = {
        {"PC1", IceClass::PC1},     {"PC2", IceClass::PC2},  {"PC3", IceClass::PC3},
        {"PC4", IceClass::PC4},     {"PC5", IceClass::PC5},  {"PC6", IceClass::PC6},
        {"PC7", IceClass::PC7},     {"IASUPER", IceClass::IASuper},
        {"IAS", IceClass::IASuper}, {"1AS", IceClass::IASuper}, {"1ASUPER", IceClass::IASuper},
        {"IA", IceClass::IA},       {"1A", IceClass::IA},    {"IB", IceClass::IB},
        {"1B", IceClass::IB},       {"IC", IceClass::IC},    {"1C", IceClass::IC},
        {"NONE", IceClass::None},   {"0", IceClass::None},   {"NOICECLASS", IceClass::None},
        {"BELOWIC", IceClass::None}};
    auto it = table.find(t);
    if (it == table.end()) throw ParseError("unknown ice class '" + std::string(text) + "'");
    return it->second;
}

std::optional<IceClass> one_step_stronger(IceClass c) {
    if (c == IceClass::PC1) return std::nullopt;
    return static_cast<IceClass>(static_cast<int>(c) - 1);
}

std::string to_string(Duty d) {
    switch (d) {
        case Duty::Supply: return "supply";
        case Duty::Towing: return "towing";
        case Duty::AnchorHandling: return "anchor_handling";
        case Duty::Standby: return "standby";
        case Duty::FireFighting: return "fifi";
        case Duty::OilRecovery: return "oil_recovery";
        case Duty::IceManagement: return "ice_management";
    }
    return "unknown";
}

void VesselType::validate() const {
    auto fail = [&](const std::string& what) {
        throw ValidationError("vessel '" + name + "': " + what);
    };
    if (name.empty()) throw ValidationError("vessel with empty name");
    if (!(deck_area > 0)) fail("deck_area must be > 0");
    if (!(deadweight > 0)) fail("deadweight must be > 0");
    if (!(power > 0)) fail("power must be > 0");
    if (!(charter_rate > 0)) fail("charter_rate must be > 0");
    if (fifi_class < 0 || fifi_class > 3) fail("fifi_class must be in 0..3");
    if (dp_class < 0 || dp_class > 3) fail("dp_class must be in 0..3");
    if (!(cruising_speed > 0)) fail("cruising_speed must be > 0");
    if (cruising_fuel_rate < 0) fail("cruising_fuel_rate must be >= 0");
    if (icebreaking_capability < 0) fail("icebreaking_capability must be >= 0");
}

std::optional<std::size_t> VesselCatalog::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < types.size(); ++i)
        if (types[i].name == name) return i;
    return std::nullopt;
}

std::size_t VesselCatalog::require_index(std::string_view name) const {
    auto idx = index_of(name);
    if (!idx) throw ValidationError("unknown vessel type '" + std::string(name) + "'");
    return *idx;
}

void VesselCatalog::validate() const {
    if (max_count_per_type < 1) throw ValidationError("max_count_per_type must be positive");
    std::set<std::string> names;
    for (const auto& v : types) {
        v.validate();
        if (!names.insert(v.name).second)
            throw ValidationError("duplicate vessel name '" + v.name + "'");
    }
}

VesselCatalog load_catalog(std::string_view source, int max_count_per_type) {
    const auto rows = csv::parse(source);
    if (rows.empty()) throw SchemaError("catalog: missing header row");
    const auto& header = rows.front();
    std::map<std::string, std::size_t> col;
    for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;
    for (const auto& c : required_columns())
        if (!col.count(c)) throw SchemaError("catalog: missing column '" + c + "'");

    VesselCatalog cat;
    cat.max_count_per_type = max_count_per_type;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size())
            throw ParseError("catalog: row " + std::to_string(r) + " has " +
                             std::to_string(row.size()) + " fields, expected " +
                             std::to_string(header.size()));
        auto get = [&](const std::string& c) -> const std::string& { return row[col.at(c)]; };
        VesselType v;
        v.name = get("name");
        if (col.count("reference_name")) v.reference_name = get("reference_name");
        v.year_launched = parse_int(get("year_launched"), r, "year_launched");
        v.deadweight = parse_double(get("deadweight"), r, "deadweight");
        v.deck_area = parse_double(get("deck_area"), r, "deck_area");
        v.power = parse_double(get("power"), r, "power");
        try {
            v.ice_class = parse_ice_class(get("ice_class"));
        } catch (const ParseError&) {
            throw ParseError("catalog: unknown ice class '" + get("ice_class") + "' at " +
                             where(r, "ice_class"));
        }
        v.icebreaking_capability =
            parse_double(get("icebreaking_capability"), r, "icebreaking_capability");
        v.fifi_class = parse_int(get("fifi_class"), r, "fifi_class");
        v.dp_class = parse_int(get("dp_class"), r, "dp_class");
        v.can_oil_recovery = parse_flag(get("can_oil_recovery"), r, "can_oil_recovery");
        v.can_towing = parse_flag(get("can_towing"), r, "can_towing");
        v.can_anchor_handling = parse_flag(get("can_anchor_handling"), r, "can_anchor_handling");
        v.can_standby = parse_flag(get("can_standby"), r, "can_standby");
        v.charter_rate = parse_double(get("charter_rate"), r, "charter_rate");
        v.cruising_fuel_rate = parse_double(get("cruising_fuel_rate"), r, "cruising_fuel_rate");
        v.cruising_speed = parse_double(get("cruising_speed"), r, "cruising_speed");
        v.block_coefficient = parse_double(get("block_coefficient"), r, "block_coefficient");
        v.displacement = parse_double(get("displacement"), r, "displacement");
        if (col.count("length_pp")) v.length_pp = parse_double(get("length_pp"), r, "length_pp");
        cat.types.push_back(std::move(v));
    }
    cat.validate();
    return cat;
}

VesselCatalog load_catalog_file(const std::string& path, int max_count_per_type) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open catalog file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str(), max_count_per_type);
}

std::string serialize_catalog(const VesselCatalog& catalog) {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"name", "reference_name", "year_launched", "deadweight", "deck_area", "power",
                    "ice_class", "icebreaking_capability", "fifi_class", "dp_class",
                    "can_oil_recovery", "can_towing", "can_anchor_handling", "can_standby",
                    "charter_rate", "cruising_fuel_rate", "cruising_speed", "displacement",
                    "block_coefficient", "length_pp"});
    auto flag = [](bool b) { return std::string(b ? "+" : "-"); };
    for (const auto& v : catalog.types) {
        rows.push_back({v.name, v.reference_name, std::to_string(v.year_launched),
                        format_number(v.deadweight), format_number(v.deck_area),
                        format_number(v.power), to_string(v.ice_class),
                        format_number(v.icebreaking_capability), std::to_string(v.fifi_class),
                        std::to_string(v.dp_class), flag(v.can_oil_recovery), flag(v.can_towing),
                        flag(v.can_anchor_handling), flag(v.can_standby),
                        format_number(v.charter_rate), format_number(v.cruising_fuel_rate),
                        format_number(v.cruising_speed), format_number(v.displacement),
                        format_number(v.block_coefficient), format_number(v.length_pp)});
    }
    return csv::write(rows);
}

bool capability(const VesselType& v, Duty d) {
    switch (d) {
        case Duty::Supply: return v.deck_area > 0;
        case Duty::Towing: return v.can_towing;
        case Duty::AnchorHandling: return v.can_anchor_handling;
        case Duty::Standby: return v.can_standby;
        case Duty::FireFighting: return v.fifi_class >= 1;
        case Duty::OilRecovery: return v.can_oil_recovery;
        case Duty::IceManagement: return v.ice_class != IceClass::None;
    }
    return false;
}

}  // namespace fleetopt
