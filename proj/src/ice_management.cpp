#include "fleetopt/ice_management.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "fleetopt/cost_engine.hpp"
#include "fleetopt/error.hpp"

namespace fleetopt {

std::string to_string(IceStrategyKind k) {
    switch (k) {
        case IceStrategyKind::None: return "none";
        case IceStrategyKind::Complete: return "complete";
        case IceStrategyKind::Active: return "active";
        case IceStrategyKind::Passive: return "passive";
    }
    return "unknown";
}

std::string strategy_letter(IceStrategyKind k) {
    switch (k) {
        case IceStrategyKind::Complete: return "A";
        case IceStrategyKind::Active: return "B";
        case IceStrategyKind::Passive: return "C";
        default: return "-";
    }
}

std::vector<int> IceStrategy::counts(std::size_t catalog_size) const {
    std::vector<int> c(catalog_size, 0);
    for (auto i : vessels) ++c.at(i);
    return c;
}

double thickness_reduction(double h_eq) {
    if (h_eq < 0) throw ValidationError("equivalent ice thickness must be >= 0");
    return std::min(0.0204 * std::exp(1.9304 * h_eq), h_eq);
}

double interruption_probability(IceStrategyKind kind, const Scenario& s) {
    if (kind == IceStrategyKind::Complete) return 0.0;
    // no ice fleet behaves like the passive case
    double f0 = 0.0;
    for (const auto& c : s.ice_conditions) {
        const double h = equivalent_ice_thickness(c);
        const double after = kind == IceStrategyKind::Active ? h - thickness_reduction(h) : h;
        if (after > s.h_max) f0 += c.probability;
    }
    f0 = std::min(f0, 1.0);
    return f0 + (1.0 - f0) * s.p_iceberg;
}

double interruption_consequence(double traditional_total, const Scenario& s) {
    return traditional_total + s.installation_day_rate * s.active_days();
}

IceRiskResult evaluate_ice_strategy(const IceStrategy& strategy, const VesselCatalog& catalog,
                                    const Scenario& s, double traditional_total) {
    IceRiskResult r;
    if (strategy.kind == IceStrategyKind::None) return r;
    for (auto i : strategy.vessels) {
        const DutyCost c = ice_mgmt_costs(catalog.types.at(i), s);
        r.strategy_charter += c.charter;
        r.strategy_fuel += c.fuel;
    }
    r.strategy_cost = r.strategy_charter + r.strategy_fuel;
    r.interruption_probability = interruption_probability(strategy.kind, s);
    r.consequence = interruption_consequence(traditional_total, s);
    r.expected_cost = r.interruption_probability * r.consequence;
    return r;
}

namespace {

bool ice_free(const Scenario& s) {
    if (s.p_iceberg > 0) return false;
    return std::all_of(s.ice_conditions.begin(), s.ice_conditions.end(), [](const IceCondition& c) {
        return c.probability <= 0 || equivalent_ice_thickness(c) <= 0;
    });
}

struct Candidate {
    IceStrategy strategy;
    IceRiskResult risk;
    std::vector<std::string> names;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.risk.total() != b.risk.total()) return a.risk.total() < b.risk.total();
    return a.names < b.names;
}

}  // namespace

IceStageResult optimize_ice_fleet(const VesselCatalog& catalog, const Scenario& s, const RivTable& riv,
                                  double traditional_total) {
    IceStageResult out;
    out.required_class = min_feasible_ice_class(s, riv, RioPolicy::NormalOnly);
    const bool no_ice = ice_free(s);
    if (no_ice && out.required_class == IceClass::None) return out;

    std::vector<std::size_t> leaders, secondaries;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const auto& v = catalog[i];
        if (!capability(v, Duty::IceManagement) || !vessel_operable(v, s, riv)) continue;
        secondaries.push_back(i);
        if (stronger_than(v.ice_class, out.required_class)) leaders.push_back(i);
    }
    if (leaders.empty())
        throw InfeasibleError("no vessel type in the catalog is stronger than " +
                              to_string(out.required_class) + " for ice management");
    const int max_count = catalog.max_count_per_type;
    std::vector<double> unit(catalog.size(), 0.0);
    for (auto i : secondaries) unit[i] = ice_mgmt_costs(catalog[i], s).total();

    std::optional<Candidate> best;
    auto consider = [&](IceStrategyKind kind, std::vector<std::size_t> vessels) {
        Candidate c;
        c.strategy.kind = kind;
        c.strategy.vessels = std::move(vessels);
        c.risk = evaluate_ice_strategy(c.strategy, catalog, s, traditional_total);
        for (auto i : c.strategy.vessels) c.names.push_back(catalog[i].name);
        if (!best || better(c, *best)) best = std::move(c);
    };

    for (auto l : leaders) consider(IceStrategyKind::Passive, {l});
    if (!no_ice) {
        for (auto l : leaders)
            for (auto a : secondaries)
                if (a != l || max_count >= 2) consider(IceStrategyKind::Active, {l, a});

        // four secondaries as a non-decreasing index sequence, per-type cap
        // counted together with the leader
        const std::size_t m = secondaries.size();
        for (auto l : leaders) {
            std::vector<std::size_t> pick(4, 0);
            for (pick[0] = 0; pick[0] < m; ++pick[0])
                for (pick[1] = pick[0]; pick[1] < m; ++pick[1])
                    for (pick[2] = pick[1]; pick[2] < m; ++pick[2])
                        for (pick[3] = pick[2]; pick[3] < m; ++pick[3]) {
                            std::vector<std::size_t> v = {l};
                            for (auto p : pick) v.push_back(secondaries[p]);
                            std::vector<int> cnt(catalog.size(), 0);
                            bool ok = true;
                            for (auto i : v)
                                if (++cnt[i] > max_count) ok = false;
                            if (!ok) continue;
                            // lower bound prune: vessel cost alone already worse
                            double cost = 0.0;
                            for (auto i : v) cost += unit[i];
                            if (best && cost > best->risk.total()) continue;
                            consider(IceStrategyKind::Complete, std::move(v));
                        }
        }
    }
    out.strategy = best->strategy;
    out.risk = best->risk;
    return out;
}

}  // namespace fleetopt
