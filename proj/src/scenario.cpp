#include "fleetopt/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#define TOML_EXCEPTIONS 1
#define TOML_ENABLE_FORMATTERS 0
#include <toml.hpp>

#include "fleetopt/error.hpp"
#include "util.hpp"

namespace fleetopt {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Numeric scalar fields addressable by dotted key.
struct NumericField {
    std::string key;
    std::function<double&(Scenario&)> ref;
};

const std::vector<NumericField>& numeric_fields() {
    static const std::vector<NumericField> fields = [] {
        std::vector<NumericField> f;
        auto add = [&](std::string key, double Scenario::*member) {
            f.push_back({std::move(key), [member](Scenario& s) -> double& { return s.*member; }});
        };
        add("installation.cons_rate", &Scenario::cons_rate);
        add("installation.s_deck", &Scenario::s_deck);
        add("installation.h_max", &Scenario::h_max);
        add("installation.day_rate", &Scenario::installation_day_rate);
        add("operations.t_op", &Scenario::t_op);
        add("operations.t_ah", &Scenario::t_ah);
        add("operations.dist_tow", &Scenario::dist_tow);
        add("operations.dist_sup", &Scenario::dist_sup);
        add("operations.v_tow", &Scenario::v_tow);
        add("power.ah_min", &Scenario::n_pp_ah_min);
        add("fuel.price", &Scenario::p_fuel);
        add("fuel.c_ah", &Scenario::c_ah);
        add("fuel.c_port", &Scenario::c_port);
        add("fuel.c_installation", &Scenario::c_installation);
        add("fuel.c_standby", &Scenario::c_standby);
        add("fuel.c_ice_management", &Scenario::c_ice_management);
        add("fuel.k_red", &Scenario::k_red);
        add("fuel.q", &Scenario::q);
        add("supply.k_s", &Scenario::k_s);
        add("supply.redundancy", &Scenario::supply_redundancy);
        add("supply.n_spw_0", &Scenario::n_spw_0);
        add("risk.value_of_life", &Scenario::value_of_life);
        add("risk.f_towing", &Scenario::f_towing);
        add("risk.f_fire", &Scenario::f_fire);
        add("ice.p_iceberg", &Scenario::p_iceberg);
        add("charter.multiplier", &Scenario::charter_multiplier);
        const char* sev[] = {"insignificant", "minor", "severe"};
        for (int i = 0; i < 3; ++i) {
            f.push_back({std::string("risk.damage.") + sev[i] + ".asset",
                         [i](Scenario& s) -> double& { return s.damage.by_severity[i].asset; }});
            f.push_back({std::string("risk.damage.") + sev[i] + ".fatalities",
                         [i](Scenario& s) -> double& { return s.damage.by_severity[i].fatalities; }});
        }
        const char* fire[] = {"A", "B", "C"};
        for (int i = 0; i < 3; ++i) {
            f.push_back({std::string("risk.fire.") + fire[i] + ".asset",
                         [i](Scenario& s) -> double& { return s.fire.by_scenario[i].asset; }});
            f.push_back({std::string("risk.fire.") + fire[i] + ".fatalities",
                         [i](Scenario& s) -> double& { return s.fire.by_scenario[i].fatalities; }});
        }
        return f;
    }();
    return fields;
}

const NumericField* find_numeric(std::string_view key) {
    for (const auto& f : numeric_fields())
        if (f.key == key) return &f;
    return nullptr;
}

double to_number(std::string_view key, std::string_view value) {
    double v = 0.0;
    if (!util::parse_double(value, v))
        throw ValidationError("override '" + std::string(key) + "': '" + std::string(value) +
                              "' is not a number");
    return v;
}

std::vector<double> to_number_list(std::string_view key, std::string_view value) {
    std::vector<double> out;
    std::string item;
    std::string text(value);
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) out.push_back(to_number(key, item));
    return out;
}

const char* severity_names[] = {"insignificant", "minor", "severe"};

// ---- TOML helpers ----

const toml::node* at_path(const toml::table& root, std::string_view dotted) {
    const toml::node* node = &root;
    std::size_t start = 0;
    while (start <= dotted.size()) {
        std::size_t dot = dotted.find('.', start);
        std::string_view part = dotted.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
        const auto* tbl = node->as_table();
        if (!tbl) return nullptr;
        node = tbl->get(part);
        if (!node) return nullptr;
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return node;
}

double node_number(const toml::node& n, const std::string& key) {
    if (auto v = n.value<double>()) return *v;
    throw SchemaError("scenario: '" + key + "' must be a number");
}

std::string node_string(const toml::node& n, const std::string& key) {
    if (auto v = n.value<std::string>()) return *v;
    throw SchemaError("scenario: '" + key + "' must be a string");
}

bool node_bool(const toml::node& n, const std::string& key) {
    if (auto v = n.value<bool>()) return *v;
    throw SchemaError("scenario: '" + key + "' must be a boolean");
}

int node_int(const toml::node& n, const std::string& key) {
    if (auto v = n.value<int64_t>()) return static_cast<int>(*v);
    throw SchemaError("scenario: '" + key + "' must be an integer");
}

std::vector<double> node_number_array(const toml::node& n, const std::string& key) {
    const auto* arr = n.as_array();
    if (!arr) throw SchemaError("scenario: '" + key + "' must be an array of numbers");
    std::vector<double> out;
    for (const auto& e : *arr) out.push_back(node_number(e, key));
    return out;
}

void collect_leaves(const toml::table& t, const std::string& prefix, std::vector<std::string>& out) {
    for (const auto& [k, v] : t) {
        std::string key = prefix.empty() ? std::string(k.str()) : prefix + "." + std::string(k.str());
        if (const auto* sub = v.as_table()) collect_leaves(*sub, key, out);
        else out.push_back(key);
    }
}

bool is_known_key(const std::string& key) {
    if (find_numeric(key)) return true;
    static const std::set<std::string> exact = {
        "name", "operations.beaufort", "power.towing_min", "ice.rio_policy", "ice.conditions",
        "charter.mode", "speed.mode", "kpi.reference_year", "risk.dp_frequency.dp0",
        "risk.dp_frequency.dp1", "risk.dp_frequency.dp2", "risk.dp_frequency.dp3"};
    if (exact.count(key)) return true;
    static const std::set<std::string> market = {
        "duration", "days_forward", "k_production", "k_drilling", "k_brazil", "oil_price",
        "spot_rate", "oil_production", "reference_year", "betas"};
    if (key.rfind("charter.market.", 0) == 0 && market.count(key.substr(15))) return true;
    static const std::set<std::string> wind = {"calm_water_speed", "c_beta", "form_linear",
                                               "form_power", "form_divisor", "rows"};
    if (key.rfind("speed.wind_loss.", 0) == 0 && wind.count(key.substr(16))) return true;
    return false;
}

IceCondition parse_condition(const toml::table& t, std::size_t index) {
    const std::string where = "ice.conditions[" + std::to_string(index) + "]";
    auto need = [&](const char* k) -> const toml::node& {
        const toml::node* n = t.get(k);
        if (!n) throw SchemaError("scenario: missing required field '" + where + "." + k + "'");
        return *n;
    };
    static const std::set<std::string> allowed = {"label", "concentration", "level_ice_thickness",
                                                  "ridging", "snow_thickness", "probability"};
    for (const auto& [k, v] : t)
        if (!allowed.count(std::string(k.str())))
            throw SchemaError("scenario: unknown key '" + where + "." + std::string(k.str()) + "'");
    IceCondition c;
    c.label = parse_ice_label(node_string(need("label"), where + ".label"));
    c.concentration = node_number(need("concentration"), where + ".concentration");
    c.level_ice_thickness = node_number(need("level_ice_thickness"), where + ".level_ice_thickness");
    c.ridging = node_number(need("ridging"), where + ".ridging");
    c.snow_thickness = node_number(need("snow_thickness"), where + ".snow_thickness");
    c.probability = node_number(need("probability"), where + ".probability");
    return c;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw ValidationError("scenario: " + message);
}

}  // namespace

std::string to_string(IceLabel l) {
    switch (l) {
        case IceLabel::Mild: return "mild";
        case IceLabel::Average: return "average";
        case IceLabel::Severe: return "severe";
    }
    return "mild";
}

IceLabel parse_ice_label(std::string_view text) {
    const std::string t = lower(text);
    if (t == "mild") return IceLabel::Mild;
    if (t == "average") return IceLabel::Average;
    if (t == "severe") return IceLabel::Severe;
    throw ValidationError("unknown ice condition label '" + std::string(text) + "'");
}

std::string to_string(Severity s) { return severity_names[static_cast<int>(s)]; }

std::string to_string(StrategyLetter l) {
    switch (l) {
        case StrategyLetter::A: return "A";
        case StrategyLetter::B: return "B";
        case StrategyLetter::C: return "C";
    }
    return "C";
}

std::string to_string(RioPolicy p) {
    return p == RioPolicy::NormalOnly ? "normal_only" : "allow_elevated";
}

RioPolicy parse_rio_policy(std::string_view text) {
    const std::string t = lower(text);
    if (t == "normal_only" || t == "normal") return RioPolicy::NormalOnly;
    if (t == "allow_elevated" || t == "elevated") return RioPolicy::AllowElevated;
    throw ValidationError("unknown rio policy '" + std::string(text) + "'");
}

DamageTable Scenario::default_damage_table() {
    DamageTable d;
    d[Severity::Insignificant] = {200000.0, 0.0};
    d[Severity::Minor] = {1e6, 0.2};
    d[Severity::Severe] = {70e6, 2.0};
    return d;
}

FireTable Scenario::default_fire_table() {
    FireTable f;
    f[StrategyLetter::A] = {100000.0, 0.13};
    f[StrategyLetter::B] = {142000.0, 0.17};
    f[StrategyLetter::C] = {7e6, 8.9};
    return f;
}

DpFrequencyTable Scenario::default_dp_frequency_table() {
    DpFrequencyTable t;
    t.by_dp[0] = {0.0, 0.0, 0.217};
    t.by_dp[1] = {0.0, 0.217, 0.0};
    t.by_dp[2] = {0.195, 0.022, 0.0};
    t.by_dp[3] = {0.0, 0.0, 0.0};
    return t;
}

std::vector<IceCondition> Scenario::default_ice_conditions() {
    return {
        {IceLabel::Mild, 0.3, 0.8, 2.0, 0.08, 0.15},
        {IceLabel::Average, 0.9, 1.5, 2.0, 0.12, 0.70},
        {IceLabel::Severe, 1.0, 1.6, 3.0, 0.13, 0.15},
    };
}

double Scenario::towing_power_min(int n_tugs) const {
    if (n_tugs < 1 || towing_power.empty()) return towing_power.empty() ? 0.0 : towing_power.front();
    const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(n_tugs), towing_power.size()) - 1;
    return towing_power[i];
}

double Scenario::towing_time() const { return 2.0 * dist_tow / (24.0 * v_tow); }

double Scenario::active_days() const { return t_op + towing_time() + t_ah; }

const IceCondition* Scenario::find_condition(IceLabel label) const {
    for (const auto& c : ice_conditions)
        if (c.label == label) return &c;
    return nullptr;
}

void Scenario::validate() const {
    auto positive = [](double v) { return std::isfinite(v) && v > 0; };
    auto nonneg = [](double v) { return std::isfinite(v) && v >= 0; };
    require(positive(cons_rate), "cons_rate must be > 0");
    require(positive(s_deck), "s_deck must be > 0");
    require(positive(h_max), "h_max must be > 0");
    require(nonneg(installation_day_rate), "installation day_rate must be >= 0");
    require(positive(t_op), "t_op must be > 0");
    require(positive(t_ah), "t_ah must be > 0");
    require(positive(dist_tow), "dist_tow must be > 0");
    require(positive(dist_sup), "dist_sup must be > 0");
    require(positive(v_tow), "v_tow must be > 0");
    require(beaufort >= 0 && beaufort <= 12, "beaufort must be in 0..12");
    require(!towing_power.empty(), "towing_min must list at least one power value");
    for (std::size_t i = 0; i < towing_power.size(); ++i) {
        require(positive(towing_power[i]), "towing_min values must be > 0");
        if (i > 0)
            require(towing_power[i] < towing_power[i - 1],
                    "towing_min must be strictly decreasing in tug count");
    }
    require(positive(n_pp_ah_min), "ah_min must be > 0");
    require(positive(p_fuel), "fuel price must be > 0");
    require(positive(c_ah), "c_ah must be > 0");
    require(positive(c_port), "c_port must be > 0");
    require(positive(c_installation), "c_installation must be > 0");
    require(positive(c_standby), "c_standby must be > 0");
    require(positive(c_ice_management), "c_ice_management must be > 0");
    require(positive(k_red) && k_red <= 1, "k_red must be in (0,1]");
    require(positive(q), "q must be > 0");
    require(positive(k_s) && k_s <= 1, "k_s must be in (0,1]");
    require(nonneg(supply_redundancy), "supply redundancy must be >= 0");
    require(positive(n_spw_0), "n_spw_0 must be > 0");
    require(nonneg(value_of_life), "value_of_life must be >= 0");
    require(nonneg(f_towing), "f_towing must be >= 0");
    require(nonneg(f_fire), "f_fire must be >= 0");
    for (int i = 0; i < 3; ++i) {
        require(nonneg(damage.by_severity[i].asset) && nonneg(damage.by_severity[i].fatalities),
                "damage losses must be >= 0");
        require(nonneg(fire.by_scenario[i].asset) && nonneg(fire.by_scenario[i].fatalities),
                "fire losses must be >= 0");
        if (i > 0)
            require(damage.by_severity[i].asset >= damage.by_severity[i - 1].asset &&
                        damage.by_severity[i].fatalities >= damage.by_severity[i - 1].fatalities,
                    "damage losses must not decrease with severity");
    }
    for (const auto& row : dp_frequency.by_dp)
        for (double f : row) require(nonneg(f), "dp frequencies must be >= 0");
    require(nonneg(p_iceberg) && p_iceberg <= 1, "p_iceberg must be in [0,1]");
    require(!ice_conditions.empty(), "at least one ice condition is required");
    double total = 0.0;
    std::set<IceLabel> labels;
    for (const auto& c : ice_conditions) {
        require(labels.insert(c.label).second, "duplicate ice condition label '" + to_string(c.label) + "'");
        require(nonneg(c.concentration) && c.concentration <= 1, "ice concentration must be in [0,1]");
        require(nonneg(c.level_ice_thickness), "level ice thickness must be >= 0");
        require(nonneg(c.ridging), "ridging must be >= 0");
        require(nonneg(c.snow_thickness), "snow thickness must be >= 0");
        require(nonneg(c.probability) && c.probability <= 1, "ice probabilities must be in [0,1]");
        total += c.probability;
    }
    require(std::fabs(total - 1.0) <= 1e-9, "ice condition probabilities must sum to 1 (got " +
                                                util::format_double(total) + ")");
    require(positive(charter_multiplier), "charter multiplier must be > 0");
    if (charter_mode == CharterMode::Regression) {
        require(market.has_value(), "charter mode 'regression' needs [charter.market]");
        require(market->betas.size() == 14, "charter.market.betas must hold exactly 14 values");
    }
    if (speed_mode == SpeedMode::WindLoss) {
        require(speed_loss.has_value() && !speed_loss->rows.empty(),
                "speed mode 'wind_loss' needs [speed.wind_loss] with at least one row");
        require(positive(speed_loss->calm_water_speed), "calm_water_speed must be > 0");
    }
}

Scenario load_scenario(std::string_view source) {
    toml::table root;
    try {
        root = toml::parse(source);
    } catch (const toml::parse_error& e) {
        std::ostringstream os;
        os << "scenario: " << e.description() << " at line " << e.source().begin.line << ", column "
           << e.source().begin.column;
        throw ParseError(os.str());
    }

    std::vector<std::string> leaves;
    collect_leaves(root, "", leaves);
    for (const auto& k : leaves)
        if (!is_known_key(k)) throw SchemaError("scenario: unknown key '" + k + "'");

    Scenario s;
    if (const auto* n = root.get("name")) s.name = node_string(*n, "name");
    for (const auto& f : numeric_fields())
        if (const auto* n = at_path(root, f.key)) f.ref(s) = node_number(*n, f.key);
    if (const auto* n = at_path(root, "operations.beaufort")) s.beaufort = node_int(*n, "operations.beaufort");
    if (const auto* n = at_path(root, "power.towing_min"))
        s.towing_power = node_number_array(*n, "power.towing_min");
    if (const auto* n = at_path(root, "ice.rio_policy"))
        s.rio_policy = parse_rio_policy(node_string(*n, "ice.rio_policy"));
    if (const auto* n = at_path(root, "kpi.reference_year"))
        s.kpi_reference_year = node_int(*n, "kpi.reference_year");
    for (int dp = 0; dp < 4; ++dp) {
        const std::string key = "risk.dp_frequency.dp" + std::to_string(dp);
        if (const auto* n = at_path(root, key)) {
            auto v = node_number_array(*n, key);
            if (v.size() != 3)
                throw SchemaError("scenario: '" + key + "' must list [insignificant, minor, severe]");
            for (int i = 0; i < 3; ++i) s.dp_frequency.by_dp[dp][i] = v[i];
        }
    }
    if (const auto* n = at_path(root, "ice.conditions")) {
        const auto* arr = n->as_array();
        if (!arr) throw SchemaError("scenario: 'ice.conditions' must be an array of tables");
        s.ice_conditions.clear();
        std::size_t i = 0;
        for (const auto& e : *arr) {
            const auto* t = e.as_table();
            if (!t) throw SchemaError("scenario: 'ice.conditions' entries must be tables");
            s.ice_conditions.push_back(parse_condition(*t, i++));
        }
    }
    if (const auto* n = at_path(root, "charter.mode")) {
        const std::string m = lower(node_string(*n, "charter.mode"));
        if (m == "catalog") s.charter_mode = CharterMode::Catalog;
        else if (m == "regression") s.charter_mode = CharterMode::Regression;
        else throw ValidationError("scenario: unknown charter.mode '" + m + "'");
    }
    if (const auto* n = at_path(root, "charter.market")) {
        const auto* t = n->as_table();
        if (!t) throw SchemaError("scenario: 'charter.market' must be a table");
        MarketContext m;
        m.duration = s.active_days();
        auto num = [&](const char* k, double& dst) {
            if (const auto* x = t->get(k)) dst = node_number(*x, std::string("charter.market.") + k);
        };
        auto flag = [&](const char* k, bool& dst) {
            if (const auto* x = t->get(k)) dst = node_bool(*x, std::string("charter.market.") + k);
        };
        num("duration", m.duration);
        num("days_forward", m.days_forward);
        flag("k_production", m.k_production);
        flag("k_drilling", m.k_drilling);
        flag("k_brazil", m.k_brazil);
        num("oil_price", m.oil_price);
        num("spot_rate", m.spot_rate);
        num("oil_production", m.oil_production);
        if (const auto* x = t->get("reference_year")) m.reference_year = node_int(*x, "charter.market.reference_year");
        if (const auto* x = t->get("betas")) m.betas = node_number_array(*x, "charter.market.betas");
        s.market = m;
    }
    if (const auto* n = at_path(root, "speed.mode")) {
        const std::string m = lower(node_string(*n, "speed.mode"));
        if (m == "catalog") s.speed_mode = SpeedMode::Catalog;
        else if (m == "wind_loss") s.speed_mode = SpeedMode::WindLoss;
        else throw ValidationError("scenario: unknown speed.mode '" + m + "'");
    }
    if (const auto* n = at_path(root, "speed.wind_loss")) {
        const auto* t = n->as_table();
        if (!t) throw SchemaError("scenario: 'speed.wind_loss' must be a table");
        SpeedLossModel m;
        auto num = [&](const char* k, double& dst) {
            if (const auto* x = t->get(k)) dst = node_number(*x, std::string("speed.wind_loss.") + k);
        };
        num("calm_water_speed", m.calm_water_speed);
        num("c_beta", m.c_beta);
        num("form_linear", m.form_linear);
        num("form_power", m.form_power);
        num("form_divisor", m.form_divisor);
        if (const auto* x = t->get("rows")) {
            const auto* arr = x->as_array();
            if (!arr) throw SchemaError("scenario: 'speed.wind_loss.rows' must be an array");
            for (const auto& e : *arr) {
                const auto* row = e.as_table();
                if (!row) throw SchemaError("scenario: 'speed.wind_loss.rows' entries must be tables");
                SpeedLossRow r;
                auto rn = [&](const char* k, double& dst) {
                    const auto* v = row->get(k);
                    if (!v) throw SchemaError(std::string("scenario: missing required field 'speed.wind_loss.rows.") + k + "'");
                    dst = node_number(*v, std::string("speed.wind_loss.rows.") + k);
                };
                rn("block_coefficient", r.block_coefficient);
                rn("a", r.a);
                rn("b", r.b);
                rn("c", r.c);
                m.rows.push_back(r);
            }
        }
        s.speed_loss = m;
    }
    s.validate();
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    return load_scenario(util::read_file(path, "scenario"));
}

std::string to_toml(const Scenario& s) {
    using util::format_double;
    std::ostringstream os;
    Scenario copy = s;
    auto val = [&](const std::string& key) { return format_double(find_numeric(key)->ref(copy)); };
    auto quoted = [](const std::string& t) {
        std::string out = "\"";
        for (char c : t) {
            if (c == '"' || c == '\\') out.push_back('\\');
            out.push_back(c);
        }
        return out + "\"";
    };
    auto list = [](const std::vector<double>& v) {
        std::string out = "[";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + format_double(v[i]);
        return out + "]";
    };
    os << "name = " << quoted(s.name) << "\n";
    std::string section;
    for (const auto& f : numeric_fields()) {
        const auto dot = f.key.rfind('.');
        const std::string sec = f.key.substr(0, dot);
        if (sec.rfind("risk.damage", 0) == 0 || sec.rfind("risk.fire", 0) == 0) continue;
        if (sec != section) {
            os << "\n[" << sec << "]\n";
            section = sec;
            if (sec == "operations") os << "beaufort = " << s.beaufort << "\n";
            if (sec == "power") os << "towing_min = " << list(s.towing_power) << "\n";
            if (sec == "ice") os << "rio_policy = " << quoted(to_string(s.rio_policy)) << "\n";
            if (sec == "charter")
                os << "mode = " << quoted(s.charter_mode == CharterMode::Catalog ? "catalog" : "regression") << "\n";
        }
        os << f.key.substr(dot + 1) << " = " << val(f.key) << "\n";
    }
    if (s.market) {
        const auto& m = *s.market;
        os << "\n[charter.market]\n"
           << "duration = " << format_double(m.duration) << "\n"
           << "days_forward = " << format_double(m.days_forward) << "\n"
           << "k_production = " << (m.k_production ? "true" : "false") << "\n"
           << "k_drilling = " << (m.k_drilling ? "true" : "false") << "\n"
           << "k_brazil = " << (m.k_brazil ? "true" : "false") << "\n"
           << "oil_price = " << format_double(m.oil_price) << "\n"
           << "spot_rate = " << format_double(m.spot_rate) << "\n"
           << "oil_production = " << format_double(m.oil_production) << "\n"
           << "reference_year = " << m.reference_year << "\n"
           << "betas = " << list(m.betas) << "\n";
    }
    os << "\n[speed]\nmode = " << quoted(s.speed_mode == SpeedMode::Catalog ? "catalog" : "wind_loss") << "\n";
    if (s.speed_loss) {
        const auto& m = *s.speed_loss;
        os << "\n[speed.wind_loss]\n"
           << "calm_water_speed = " << format_double(m.calm_water_speed) << "\n"
           << "c_beta = " << format_double(m.c_beta) << "\n"
           << "form_linear = " << format_double(m.form_linear) << "\n"
           << "form_power = " << format_double(m.form_power) << "\n"
           << "form_divisor = " << format_double(m.form_divisor) << "\n"
           << "rows = [\n";
        for (const auto& r : m.rows)
            os << "  { block_coefficient = " << format_double(r.block_coefficient)
               << ", a = " << format_double(r.a) << ", b = " << format_double(r.b)
               << ", c = " << format_double(r.c) << " },\n";
        os << "]\n";
    }
    os << "\n[kpi]\nreference_year = " << s.kpi_reference_year << "\n";
    for (int i = 0; i < 3; ++i) {
        os << "\n[risk.damage." << severity_names[i] << "]\n"
           << "asset = " << format_double(s.damage.by_severity[i].asset) << "\n"
           << "fatalities = " << format_double(s.damage.by_severity[i].fatalities) << "\n";
    }
    const char* fire[] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        os << "\n[risk.fire." << fire[i] << "]\n"
           << "asset = " << format_double(s.fire.by_scenario[i].asset) << "\n"
           << "fatalities = " << format_double(s.fire.by_scenario[i].fatalities) << "\n";
    }
    os << "\n[risk.dp_frequency]\n";
    for (int dp = 0; dp < 4; ++dp) {
        std::vector<double> row(s.dp_frequency.by_dp[dp].begin(), s.dp_frequency.by_dp[dp].end());
        os << "dp" << dp << " = " << list(row) << "\n";
    }
    for (const auto& c : s.ice_conditions) {
        os << "\n[[ice.conditions]]\n"
           << "label = " << quoted(to_string(c.label)) << "\n"
           << "concentration = " << format_double(c.concentration) << "\n"
           << "level_ice_thickness = " << format_double(c.level_ice_thickness) << "\n"
           << "ridging = " << format_double(c.ridging) << "\n"
           << "snow_thickness = " << format_double(c.snow_thickness) << "\n"
           << "probability = " << format_double(c.probability) << "\n";
    }
    return os.str();
}

void apply_override(Scenario& s, std::string_view key_in, std::string_view value) {
    const std::string key(key_in);
    if (const auto* f = find_numeric(key)) {
        f->ref(s) = to_number(key, value);
    } else if (key == "name") {
        s.name = std::string(value);
    } else if (key == "operations.beaufort") {
        s.beaufort = static_cast<int>(to_number(key, value));
    } else if (key == "kpi.reference_year") {
        s.kpi_reference_year = static_cast<int>(to_number(key, value));
    } else if (key == "power.towing_min") {
        s.towing_power = to_number_list(key, value);
    } else if (key == "ice.rio_policy" || key == "rio_policy") {
        s.rio_policy = parse_rio_policy(value);
    } else if (key == "ice.probabilities") {
        auto p = to_number_list(key, value);
        if (p.size() != s.ice_conditions.size())
            throw ValidationError("override 'ice.probabilities' needs " +
                                  std::to_string(s.ice_conditions.size()) + " values");
        for (std::size_t i = 0; i < p.size(); ++i) s.ice_conditions[i].probability = p[i];
    } else if (key.rfind("ice.", 0) == 0 && std::count(key.begin(), key.end(), '.') == 2) {
        // ice.<label>.<field>
        const auto d1 = key.find('.');
        const auto d2 = key.find('.', d1 + 1);
        const IceLabel label = parse_ice_label(key.substr(d1 + 1, d2 - d1 - 1));
        const std::string field = key.substr(d2 + 1);
        IceCondition* c = nullptr;
        for (auto& x : s.ice_conditions)
            if (x.label == label) c = &x;
        if (!c) throw ValidationError("override '" + key + "': no such ice condition");
        const double v = to_number(key, value);
        if (field == "concentration") c->concentration = v;
        else if (field == "level_ice_thickness") c->level_ice_thickness = v;
        else if (field == "ridging") c->ridging = v;
        else if (field == "snow_thickness") c->snow_thickness = v;
        else if (field == "probability") c->probability = v;
        else throw ValidationError("override '" + key + "': unknown ice condition field");
    } else {
        const auto axes = scenario_axes();
        if (std::find(axes.begin(), axes.end(), key) != axes.end())
            throw ValidationError("override '" + key + "' is a scaling axis; use a dotted key instead");
        throw ValidationError("unknown scenario key '" + key + "'");
    }
}

void apply_override(Scenario& s, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ValidationError("override '" + std::string(assignment) + "' must look like key=value");
    apply_override(s, assignment.substr(0, eq), assignment.substr(eq + 1));
}

void scale_axis(Scenario& s, std::string_view axis, double factor) {
    if (!std::isfinite(factor) || factor < 0) throw ValidationError("axis multiplier must be >= 0");
    const std::string a(axis);
    if (a == "CR_v") {
        s.charter_multiplier *= factor;
    } else if (a == "t_op") {
        s.t_op *= factor;
    } else if (a == "p_fuel") {
        s.p_fuel *= factor;
    } else if (a == "Cons_rate") {
        s.cons_rate *= factor;
    } else if (a == "dist") {
        s.dist_tow *= factor;
        s.dist_sup *= factor;
    } else if (a == "S_deck") {
        s.s_deck *= factor;
    } else if (a == "VH_E") {
        s.value_of_life *= factor;
        for (auto& l : s.damage.by_severity) l.asset *= factor;
        for (auto& l : s.fire.by_scenario) l.asset *= factor;
    } else if (a == "R_op") {
        s.installation_day_rate *= factor;
    } else if (const auto* f = find_numeric(a)) {
        f->ref(s) *= factor;
    } else {
        throw ValidationError("unknown sensitivity axis '" + a + "'");
    }
}

std::vector<std::string> scenario_axes() {
    return {"CR_v", "t_op", "p_fuel", "Cons_rate", "dist", "S_deck", "VH_E", "R_op"};
}

std::vector<std::string> scenario_keys() {
    std::vector<std::string> keys;
    for (const auto& f : numeric_fields()) keys.push_back(f.key);
    for (const char* k : {"name", "operations.beaufort", "power.towing_min", "ice.rio_policy",
                          "ice.probabilities", "kpi.reference_year"})
        keys.push_back(k);
    return keys;
}

}  // namespace fleetopt
