#include "fleetopt/constraints.hpp"

#include <algorithm>

#include "fleetopt/cost_engine.hpp"
#include "fleetopt/error.hpp"
#include "util.hpp"

namespace fleetopt {

std::vector<std::size_t> DutyAssignment::with_duty(Duty d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vessels.size(); ++i)
        if (vessels[i].has(d)) out.push_back(i);
    return out;
}

int DutyAssignment::count(Duty d) const {
    return static_cast<int>(std::count_if(vessels.begin(), vessels.end(),
                                          [d](const AssignedVessel& v) { return v.has(d); }));
}

std::optional<std::size_t> DutyAssignment::standby_vessel() const {
    for (std::size_t i = 0; i < vessels.size(); ++i)
        if (vessels[i].has(Duty::Standby)) return i;
    return std::nullopt;
}

std::vector<int> DutyAssignment::counts(std::size_t catalog_size) const {
    std::vector<int> c(catalog_size, 0);
    for (const auto& v : vessels) ++c.at(v.type_index);
    return c;
}

std::string to_string(ConstraintId id) {
    switch (id) {
        case ConstraintId::Capability: return "capability";
        case ConstraintId::SupplyRate: return "supply_rate";
        case ConstraintId::TowingPower: return "towing_power";
        case ConstraintId::AnchorHandling: return "anchor_handling";
        case ConstraintId::Standby: return "standby";
        case ConstraintId::FireFighting: return "fifi";
        case ConstraintId::OilRecovery: return "oil_recovery";
        case ConstraintId::IceClassMargin: return "ice_class_margin";
        case ConstraintId::IceOperability: return "ice_operability";
    }
    return "unknown";
}

int constraint_number(ConstraintId id) {
    switch (id) {
        case ConstraintId::SupplyRate: return 1;
        case ConstraintId::TowingPower: return 2;
        case ConstraintId::AnchorHandling: return 3;
        case ConstraintId::Standby: return 4;
        case ConstraintId::FireFighting: return 5;
        case ConstraintId::OilRecovery: return 6;
        case ConstraintId::IceClassMargin: return 7;
        default: return 0;
    }
}

bool FeasibilityReport::violates(ConstraintId id) const {
    return std::any_of(violations.begin(), violations.end(),
                       [id](const Violation& v) { return v.id == id; });
}

FeasibilityReport check_feasibility(const DutyAssignment& a, const Scenario& s,
                                    const VesselCatalog& catalog, const RivTable& riv) {
    FeasibilityReport r;
    auto fail = [&](ConstraintId id, std::string detail) {
        r.violations.push_back({id, std::move(detail)});
    };
    for (const auto& v : a.vessels)
        if (v.type_index >= catalog.size())
            throw ValidationError("assignment references vessel type outside the catalog");

    static const Duty all_duties[] = {Duty::Supply,       Duty::Towing,      Duty::AnchorHandling,
                                      Duty::Standby,      Duty::FireFighting, Duty::OilRecovery,
                                      Duty::IceManagement};
    for (const auto& v : a.vessels) {
        const auto& t = catalog[v.type_index];
        for (Duty d : all_duties)
            if (v.has(d) && !capability(t, d))
                fail(ConstraintId::Capability, t.name + " cannot perform " + to_string(d));
    }

    std::vector<const VesselType*> supply;
    for (auto i : a.with_duty(Duty::Supply)) supply.push_back(&catalog[a.vessels[i].type_index]);
    const double rate = supply_rate(supply, s);
    const double required = s.cons_rate * (1.0 + s.supply_redundancy);
    if (supply.empty() || rate < required * (1.0 - 1e-12))
        fail(ConstraintId::SupplyRate, "supply rate " + util::format_fixed(rate, 1) + " m2/month below " +
                                           util::format_fixed(required, 1));

    const int n_tugs = a.n_tugs();
    if (n_tugs < 1) {
        fail(ConstraintId::TowingPower, "no towing vessel");
    } else {
        const double need = s.towing_power_min(n_tugs);
        for (auto i : a.with_duty(Duty::Towing)) {
            const auto& t = catalog[a.vessels[i].type_index];
            if (t.power < need)
                fail(ConstraintId::TowingPower, t.name + " has " + util::format_fixed(t.power, 0) +
                                                    " kW, " + std::to_string(n_tugs) + " tug(s) need " +
                                                    util::format_fixed(need, 0) + " kW each");
        }
    }

    const auto ah = a.with_duty(Duty::AnchorHandling);
    const bool strong_ah = std::any_of(ah.begin(), ah.end(), [&](std::size_t i) {
        return catalog[a.vessels[i].type_index].power >= s.n_pp_ah_min;
    });
    if (ah.size() < 2 || !strong_ah)
        fail(ConstraintId::AnchorHandling, "needs two anchor handling vessels, one with at least " +
                                               util::format_fixed(s.n_pp_ah_min, 0) + " kW (have " +
                                               std::to_string(ah.size()) + ")");

    const auto sb = a.with_duty(Duty::Standby);
    if (sb.size() != 1) {
        fail(ConstraintId::Standby, "needs exactly one dedicated standby vessel (have " +
                                        std::to_string(sb.size()) + ")");
    } else if (a.vessels[sb.front()].duties != duty_bit(Duty::Standby)) {
        fail(ConstraintId::Standby, "standby vessel carries other duties");
    }

    if (a.count(Duty::FireFighting) < 2)
        fail(ConstraintId::FireFighting, "needs two Fi-Fi vessels (have " +
                                             std::to_string(a.count(Duty::FireFighting)) + ")");
    if (a.count(Duty::OilRecovery) < 1) fail(ConstraintId::OilRecovery, "needs an oil recovery vessel");

    const auto im = a.with_duty(Duty::IceManagement);
    if (!im.empty()) {
        try {
            const IceClass min_class = min_feasible_ice_class(s, riv, RioPolicy::NormalOnly);
            const bool margin = std::any_of(im.begin(), im.end(), [&](std::size_t i) {
                return stronger_than(catalog[a.vessels[i].type_index].ice_class, min_class);
            });
            if (!margin)
                fail(ConstraintId::IceClassMargin,
                     "no ice management vessel stronger than " + to_string(min_class));
        } catch (const InfeasibleError& e) {
            fail(ConstraintId::IceClassMargin, e.what());
        }
    }

    for (const auto& v : a.vessels) {
        const auto& t = catalog[v.type_index];
        if (!vessel_operable(t, s, riv))
            fail(ConstraintId::IceOperability,
                 t.name + " (" + to_string(t.ice_class) + ") fails the " + to_string(s.rio_policy) +
                     " RIO policy");
    }

    r.feasible = r.violations.empty();
    return r;
}

}  // namespace fleetopt
