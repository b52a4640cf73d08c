#include "fleetopt/risk_engine.hpp"

#include <algorithm>

#include "fleetopt/cost_engine.hpp"
#include "fleetopt/error.hpp"

namespace fleetopt {

namespace {

RiskPair expected(double frequency, const Loss& loss, const Scenario& s) {
    const double exposure = frequency * s.active_days() / 365.0;
    return {exposure * loss.asset, exposure * loss.fatalities * s.value_of_life};
}

}  // namespace

Severity towing_severity(int n_tugs) {
    if (n_tugs <= 1) return Severity::Severe;
    if (n_tugs == 2) return Severity::Minor;
    return Severity::Insignificant;
}

RiskPair towing_risk(int n_tugs, const Scenario& s) {
    if (n_tugs < 1) throw ValidationError("towing risk needs at least one tug");
    return expected(s.f_towing, s.damage[towing_severity(n_tugs)], s);
}

double supply_visit_frequency(const std::vector<const VesselType*>& vessels, const Scenario& s) {
    if (vessels.empty()) throw ValidationError("visit frequency needs at least one supply vessel");
    double sum = 0.0;
    for (const auto* v : vessels) sum += useful_deck_area(*v, s.s_deck, s.k_s);
    const double mean = sum / static_cast<double>(vessels.size());
    return 7.0 * s.cons_rate / (30.0 * mean);
}

RiskPair dp_class_risk(int dp_class, double n_spw, const Scenario& s) {
    if (dp_class < 0 || dp_class > 3) throw ValidationError("DP class must be 0..3");
    const double scale = n_spw / s.n_spw_0;
    RiskPair r;
    for (int sev = 0; sev < 3; ++sev) {
        const double f = s.dp_frequency.by_dp[dp_class][sev] * scale;
        const RiskPair e = expected(f, s.damage.by_severity[sev], s);
        r.asset += e.asset;
        r.human += e.human;
    }
    return r;
}

RiskPair supply_collision_risk(const std::vector<const VesselType*>& vessels, const Scenario& s) {
    const double n_spw = supply_visit_frequency(vessels, s);
    std::array<int, 4> n_dp{};
    for (const auto* v : vessels) ++n_dp[v->dp_class];
    RiskPair r;
    for (int dp = 0; dp < 4; ++dp) {
        if (!n_dp[dp]) continue;
        const RiskPair per = dp_class_risk(dp, n_spw, s);
        r.asset += per.asset * n_dp[dp];
        r.human += per.human * n_dp[dp];
    }
    const double n = static_cast<double>(vessels.size());
    return {r.asset / n, r.human / n};
}

std::optional<StrategyLetter> fire_scenario(const std::vector<int>& fifi_classes) {
    auto at_least = [&](int cls) {
        return std::count_if(fifi_classes.begin(), fifi_classes.end(), [&](int c) { return c >= cls; });
    };
    if (at_least(3) >= 2) return StrategyLetter::A;
    if (at_least(2) >= 2) return StrategyLetter::B;
    if (at_least(1) >= 2) return StrategyLetter::C;
    return std::nullopt;
}

RiskPair fire_risk(const std::vector<int>& fifi_classes, const Scenario& s) {
    const auto scenario = fire_scenario(fifi_classes);
    if (!scenario) throw InfeasibleError("fire risk needs at least two Fi-Fi capable vessels");
    return expected(s.f_fire, s.fire[*scenario], s);
}

RiskPair allocate_risk(const RiskPair& total, int duty_vessel_count) {
    if (duty_vessel_count < 1) throw ValidationError("risk allocation needs at least one vessel");
    const double n = static_cast<double>(duty_vessel_count);
    return {total.asset / n, total.human / n};
}

}  // namespace fleetopt
