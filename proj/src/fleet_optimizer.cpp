#include "fleetopt/fleet_optimizer.hpp"

#include <algorithm>
#include <numeric>

#include "fleetopt/cost_engine.hpp"
#include "fleetopt/error.hpp"
#include "util.hpp"

namespace fleetopt {

namespace {

constexpr Duty kDutyOrder[] = {Duty::Supply,       Duty::Towing,      Duty::AnchorHandling, Duty::Standby,
                               Duty::FireFighting, Duty::OilRecovery, Duty::IceManagement};

double towing_fuel_per_tug(int n_tugs, const Scenario& s) {
    return s.p_fuel * 24.0 * s.towing_time() * s.k_red * s.towing_power_min(n_tugs) * s.q;
}

std::string describe(const FeasibilityReport& r) {
    std::string out;
    for (const auto& v : r.violations) {
        if (!out.empty()) out += "; ";
        const int n = constraint_number(v.id);
        out += (n ? "constraint " + std::to_string(n) + " " : std::string()) + "(" + to_string(v.id) +
               "): " + v.detail;
    }
    return out;
}

}  // namespace

double CostBreakdown::charter() const {
    double t = 0.0;
    for (const auto& l : lines) t += l.charter;
    return t;
}

double CostBreakdown::fuel() const {
    double t = 0.0;
    for (const auto& l : lines) t += l.fuel;
    return t;
}

double CostBreakdown::asset_risk() const {
    double t = 0.0;
    for (const auto& l : lines) t += l.asset_risk;
    return t;
}

double CostBreakdown::human_risk() const {
    double t = 0.0;
    for (const auto& l : lines) t += l.human_risk;
    return t;
}

double CostBreakdown::duty_total(Duty d) const {
    double t = 0.0;
    for (const auto& l : lines)
        if (l.duty == d) t += l.total();
    return t;
}

double CostBreakdown::total() const {
    double t = ice_risk;
    for (const auto& l : lines) t += l.total();
    return t;
}

FleetEvaluator::FleetEvaluator(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv)
    : s_(s), catalog_(catalog), riv_(riv) {
    s_.validate();
    catalog_.validate();
    data_.resize(catalog_.size());
    for (std::size_t i = 0; i < catalog_.size(); ++i) {
        const auto& v = catalog_[i];
        auto& d = data_[i];
        d.operable = vessel_operable(v, s_, riv_);
        d.charter = effective_charter_rate(v, s_);
        d.supply = capability(v, Duty::Supply);
        if (d.supply) {
            d.useful_deck = useful_deck_area(v, s_.s_deck, s_.k_s);
            d.supply_rate = 30.0 * d.useful_deck / voyage_profile(v, s_).t_voyage;
            d.supply_cost = supply_costs(v, s_).total();
        }
        if (v.can_standby) d.standby_cost = standby_costs(v, s_).total();
        if (v.can_anchor_handling) d.ah_cost = ah_costs(v, s_).total();
    }
    for (int n = 1; n <= 3; ++n) towing_risk_[n] = towing_risk(n, s_).total();
    charter_order_.resize(catalog_.size());
    std::iota(charter_order_.begin(), charter_order_.end(), std::size_t{0});
    std::stable_sort(charter_order_.begin(), charter_order_.end(),
                     [&](std::size_t a, std::size_t b) { return data_[a].charter < data_[b].charter; });
}

bool FleetEvaluator::plan(const std::vector<int>& counts, Plan* out) const {
    const std::size_t n = catalog_.size();
    if (counts.size() != n) throw ValidationError("counts length does not match the catalog");
    int fleet_size = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (counts[i] < 0) throw ValidationError("vessel counts must be >= 0");
        if (counts[i] > 0 && !data_[i].operable) return false;
        fleet_size += counts[i];
    }
    if (fleet_size < 2) return false;

    const double required = s_.cons_rate * (1.0 + s_.supply_redundancy);
    const double t_tow = s_.towing_time();
    bool found = false;
    Plan best;
    std::vector<int> c(counts);
    for (std::size_t sb = 0; sb < n; ++sb) {
        if (counts[sb] == 0 || !catalog_[sb].can_standby) continue;
        c = counts;
        --c[sb];
        Plan p;
        p.standby = sb;

        // every remaining supply-capable vessel carries cargo
        double rate = 0.0, cost = 0.0, deck = 0.0;
        int n_sup = 0;
        std::array<int, 4> n_dp{};
        for (std::size_t i = 0; i < n; ++i) {
            if (!c[i] || !data_[i].supply) continue;
            rate += c[i] * data_[i].supply_rate;
            cost += c[i] * data_[i].supply_cost;
            deck += c[i] * data_[i].useful_deck;
            n_sup += c[i];
            n_dp[catalog_[i].dp_class] += c[i];
        }
        if (n_sup == 0 || rate < required * (1.0 - 1e-12)) continue;
        const double n_spw = 7.0 * s_.cons_rate / (30.0 * (deck / n_sup));
        double supply_risk = 0.0;
        for (int dp = 0; dp < 4; ++dp)
            if (n_dp[dp]) supply_risk += dp_class_risk(dp, n_spw, s_).total() * n_dp[dp];
        supply_risk /= n_sup;

        // two strongest Fi-Fi vessels set the fire scenario
        p.fifi.clear();
        for (int cls = 3; cls >= 1 && p.fifi.size() < 2; --cls)
            for (std::size_t i = 0; i < n && p.fifi.size() < 2; ++i)
                if (catalog_[i].fifi_class == cls)
                    for (int k = 0; k < c[i] && p.fifi.size() < 2; ++k) p.fifi.push_back(i);
        if (p.fifi.size() < 2) continue;
        const double fire =
            fire_risk({catalog_[p.fifi[0]].fifi_class, catalog_[p.fifi[1]].fifi_class}, s_).total();

        bool oil = false;
        for (std::size_t i = 0; i < n && !oil; ++i)
            if (c[i] && catalog_[i].can_oil_recovery) {
                p.oil = i;
                oil = true;
            }
        if (!oil) continue;

        // cheapest n tugs able to meet the per-tug power for n
        int n_tow = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (catalog_[i].can_towing) n_tow += c[i];
        double tow_best = 0.0;
        int tow_n = 0;
        for (int k = 1; k <= n_tow; ++k) {
            const double need = s_.towing_power_min(k);
            double charter = 0.0;
            int taken = 0;
            for (auto i : charter_order_) {
                if (!c[i] || !catalog_[i].can_towing || catalog_[i].power < need) continue;
                const int take = std::min(c[i], k - taken);
                charter += take * data_[i].charter * t_tow;
                taken += take;
                if (taken == k) break;
            }
            if (taken < k) continue;
            const double total = charter + k * towing_fuel_per_tug(k, s_) + towing_risk_[std::min(k, 3)];
            if (tow_n == 0 || total < tow_best) {
                tow_best = total;
                tow_n = k;
            }
        }
        if (tow_n == 0) continue;
        p.tugs.clear();
        {
            const double need = s_.towing_power_min(tow_n);
            for (auto i : charter_order_) {
                if (!c[i] || !catalog_[i].can_towing || catalog_[i].power < need) continue;
                for (int k = 0; k < c[i] && static_cast<int>(p.tugs.size()) < tow_n; ++k) p.tugs.push_back(i);
            }
        }

        // cheapest powerful AH vessel plus the cheapest other one
        bool strong = false;
        for (auto i : charter_order_)
            if (c[i] && catalog_[i].can_anchor_handling && catalog_[i].power >= s_.n_pp_ah_min) {
                p.ah_strong = i;
                strong = true;
                break;
            }
        if (!strong) continue;
        bool partner = false;
        for (auto i : charter_order_)
            if (catalog_[i].can_anchor_handling && c[i] - (i == p.ah_strong ? 1 : 0) > 0) {
                p.ah_partner = i;
                partner = true;
                break;
            }
        if (!partner) continue;
        const double ah = data_[p.ah_strong].ah_cost + data_[p.ah_partner].ah_cost;

        p.total = data_[sb].standby_cost + cost + supply_risk + fire + tow_best + ah;
        if (!found || p.total < best.total) {
            best = std::move(p);
            found = true;
        }
    }
    if (found && out) *out = std::move(best);
    return found;
}

double FleetEvaluator::objective(const std::vector<int>& counts) const {
    Plan p;
    return plan(counts, &p) ? p.total : kInfeasiblePenalty;
}

FleetEvaluation FleetEvaluator::diagnose(const std::vector<int>& counts) const {
    FleetEvaluation e;
    for (std::size_t i = 0; i < counts.size(); ++i)
        for (int k = 0; k < counts[i]; ++k) e.assignment.vessels.push_back({i, 0});
    // a plausible assignment that names what is missing
    std::optional<std::size_t> sb;
    for (auto i : charter_order_)
        if (counts[i] && catalog_[i].can_standby) {
            sb = i;
            break;
        }
    bool sb_done = false;
    for (auto& v : e.assignment.vessels) {
        const auto& t = catalog_[v.type_index];
        if (sb && !sb_done && v.type_index == *sb) {
            v.add(Duty::Standby);
            sb_done = true;
            continue;
        }
        if (capability(t, Duty::Supply)) v.add(Duty::Supply);
        if (t.can_towing) v.add(Duty::Towing);
        if (t.can_anchor_handling) v.add(Duty::AnchorHandling);
        if (t.fifi_class >= 1) v.add(Duty::FireFighting);
        if (t.can_oil_recovery) v.add(Duty::OilRecovery);
    }
    e.report = check_feasibility(e.assignment, s_, catalog_, riv_);
    if (e.report.feasible)
        e.report.violations.push_back({ConstraintId::Capability, "no duty assignment satisfies every constraint"});
    e.report.feasible = false;
    e.feasible = false;
    e.total = kInfeasiblePenalty;
    return e;
}

FleetEvaluation FleetEvaluator::evaluate(const std::vector<int>& counts) const {
    Plan p;
    if (!plan(counts, &p)) return diagnose(counts);

    FleetEvaluation e;
    auto& vs = e.assignment.vessels;
    for (std::size_t i = 0; i < counts.size(); ++i)
        for (int k = 0; k < counts[i]; ++k) vs.push_back({i, 0});
    auto first_free = [&](std::size_t type, Duty d) -> AssignedVessel& {
        for (auto& v : vs) {
            if (v.type_index != type || v.has(d)) continue;
            if (d == Duty::Standby ? v.duties != 0 : v.has(Duty::Standby)) continue;
            return v;
        }
        throw Error("internal", "duty plan references a vessel that is not in the fleet");
    };
    first_free(p.standby, Duty::Standby).add(Duty::Standby);
    for (auto& v : vs)
        if (!v.has(Duty::Standby) && capability(catalog_[v.type_index], Duty::Supply)) v.add(Duty::Supply);
    for (auto t : p.tugs) first_free(t, Duty::Towing).add(Duty::Towing);
    first_free(p.ah_strong, Duty::AnchorHandling).add(Duty::AnchorHandling);
    first_free(p.ah_partner, Duty::AnchorHandling).add(Duty::AnchorHandling);
    for (auto t : p.fifi) first_free(t, Duty::FireFighting).add(Duty::FireFighting);
    first_free(p.oil, Duty::OilRecovery).add(Duty::OilRecovery);

    std::vector<const VesselType*> supply;
    std::vector<int> fifi;
    for (const auto& v : vs) {
        if (v.has(Duty::Supply)) supply.push_back(&catalog_[v.type_index]);
        if (v.has(Duty::FireFighting)) fifi.push_back(catalog_[v.type_index].fifi_class);
    }
    const int n_tugs = e.assignment.n_tugs();
    const RiskPair supply_share = allocate_risk(supply_collision_risk(supply, s_), static_cast<int>(supply.size()));
    const RiskPair tow_share = allocate_risk(towing_risk(n_tugs, s_), n_tugs);
    const RiskPair fire_share = allocate_risk(fire_risk(fifi, s_), static_cast<int>(fifi.size()));

    for (std::size_t pos = 0; pos < vs.size(); ++pos) {
        const auto& v = vs[pos];
        const auto& t = catalog_[v.type_index];
        for (Duty d : kDutyOrder) {
            if (!v.has(d)) continue;
            CostLine l;
            l.vessel = pos;
            l.type_index = v.type_index;
            l.duty = d;
            DutyCost dc;
            RiskPair r;
            switch (d) {
                case Duty::Supply:
                    dc = supply_costs(t, s_);
                    r = supply_share;
                    break;
                case Duty::Towing:
                    dc = towing_costs(t, n_tugs, s_);
                    r = tow_share;
                    break;
                case Duty::AnchorHandling: dc = ah_costs(t, s_); break;
                case Duty::Standby: dc = standby_costs(t, s_); break;
                case Duty::FireFighting: r = fire_share; break;
                default: break;
            }
            l.charter = dc.charter;
            l.fuel = dc.fuel;
            l.asset_risk = r.asset;
            l.human_risk = r.human;
            e.breakdown.lines.push_back(l);
        }
    }
    e.supply_rate = supply_rate(supply, s_);
    e.report = check_feasibility(e.assignment, s_, catalog_, riv_);
    if (!e.report.feasible)
        throw Error("internal", "duty plan failed its own feasibility check: " + describe(e.report));
    e.feasible = true;
    e.total = e.breakdown.total();
    return e;
}

FleetEvaluation evaluate_fleet(const std::vector<int>& counts, const Scenario& s, const VesselCatalog& catalog,
                               const RivTable& riv) {
    return FleetEvaluator(s, catalog, riv).evaluate(counts);
}

FleetEvaluation assign_duties(const std::vector<std::size_t>& fleet, const Scenario& s,
                              const VesselCatalog& catalog, const RivTable& riv) {
    std::vector<int> counts(catalog.size(), 0);
    for (auto i : fleet) {
        if (i >= catalog.size()) throw ValidationError("fleet references vessel type outside the catalog");
        ++counts[i];
    }
    return evaluate_fleet(counts, s, catalog, riv);
}

std::vector<int> TraditionalResult::expand(const std::vector<int>& x, std::size_t catalog_size) const {
    std::vector<int> c(catalog_size, 0);
    for (std::size_t j = 0; j < types.size() && j < x.size(); ++j) c[types[j]] = x[j];
    return c;
}

TraditionalResult optimize_traditional(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv,
                                       const AbcParams& params, const std::vector<std::size_t>* subset) {
    const FleetEvaluator ev(s, catalog, riv);
    TraditionalResult r;
    if (subset) {
        for (auto i : *subset) {
            if (i >= catalog.size()) throw ValidationError("subset references vessel type outside the catalog");
            if (vessel_operable(catalog[i], s, riv)) r.types.push_back(i);
        }
    } else {
        for (std::size_t i = 0; i < catalog.size(); ++i)
            if (vessel_operable(catalog[i], s, riv)) r.types.push_back(i);
    }
    if (r.types.empty())
        throw InfeasibleError("no vessel type is operable under the " + to_string(s.rio_policy) + " RIO policy");

    const std::size_t n = catalog.size();
    auto objective = [&](const std::vector<int>& x) { return ev.objective(r.expand(x, n)); };
    AbcSolver solver(objective, std::vector<int>(r.types.size(), catalog.max_count_per_type), params);
    r.search = solver.solve();
    if (r.search.best_f >= kInfeasiblePenalty) {
        const auto full = ev.evaluate(r.expand(std::vector<int>(r.types.size(), catalog.max_count_per_type), n));
        if (!full.feasible)
            throw InfeasibleError("no feasible fleet: " + describe(full.report));
        throw InfeasibleError("search ended without a feasible fleet; " + describe(ev.evaluate(r.expand(r.search.best_x, n)).report));
    }
    r.counts = r.expand(r.search.best_x, n);
    r.evaluation = ev.evaluate(r.counts);
    return r;
}

FullSolution optimize(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv,
                      const AbcParams& params) {
    FullSolution sol;
    sol.params = params;
    sol.traditional = optimize_traditional(s, catalog, riv, params);
    sol.ice = optimize_ice_fleet(catalog, s, riv, sol.traditional.evaluation.total);
    sol.combined_total = sol.traditional.evaluation.total + sol.ice.risk.total();
    sol.kpis = kpi_report(sol, s, catalog);
    return sol;
}

std::vector<int> parse_counts(const std::string& text, const VesselCatalog& catalog) {
    std::vector<int> counts(catalog.size(), 0);
    for (const auto& item : util::split_list(text)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ValidationError("counts entry '" + item + "' is not NAME=COUNT");
        const auto idx = catalog.require_index(util::trim(std::string_view(item).substr(0, eq)));
        double v = 0.0;
        if (!util::parse_double(std::string_view(item).substr(eq + 1), v) || v < 0 || v != static_cast<int>(v))
            throw ValidationError("count of " + catalog[idx].name + " must be a non-negative integer");
        counts[idx] += static_cast<int>(v);
        if (counts[idx] > catalog.max_count_per_type)
            throw ValidationError("count of " + catalog[idx].name + " exceeds the per-type maximum " +
                                  std::to_string(catalog.max_count_per_type));
    }
    return counts;
}

std::string format_counts(const std::vector<int>& counts, const VesselCatalog& catalog) {
    std::string out;
    for (std::size_t i = 0; i < counts.size() && i < catalog.size(); ++i) {
        if (!counts[i]) continue;
        if (!out.empty()) out += ',';
        out += catalog[i].name + '=' + std::to_string(counts[i]);
    }
    return out;
}

}  // namespace fleetopt
