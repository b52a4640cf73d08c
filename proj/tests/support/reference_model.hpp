#pragma once
// Test-side reference model. Recomputes costs and risks straight from the
// formulas and enumerates duty assignments per vessel instance, without
// calling the library's cost, risk or assignment code.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "fleetopt/scenario.hpp"
#include "fleetopt/vessel_catalog.hpp"

namespace ref {

using fleetopt::Scenario;
using fleetopt::VesselType;

inline double t_tow(const Scenario& s) { return 2.0 * s.dist_tow / (24.0 * s.v_tow); }
inline double T(const Scenario& s) { return s.t_op + t_tow(s) + s.t_ah; }

inline double h_eq(double c, double h, double ridge, double snow) {
    const double k = snow >= 0.5 ? 0.5 : 0.33;
    return c * (h + 0.25 * ridge * h + k * snow);
}

inline double charter(const VesselType& v, const Scenario& s) { return v.charter_rate * s.charter_multiplier; }

inline double useful(const VesselType& v, const Scenario& s) { return std::min(v.deck_area * s.k_s, s.s_deck); }

struct Voyage {
    double days;
    double fuel;
};
inline Voyage voyage(const VesselType& v, const Scenario& s) {
    const double tp = 1.426 + 0.0005 * v.deadweight;
    const double tpl = 0.6 + 0.00021 * v.deadweight;
    const double tm = s.dist_sup / (24.0 * v.cruising_speed);
    return {tp + tpl + 2 * tm, tp * s.c_port + tpl * s.c_installation + 2 * tm * v.cruising_fuel_rate};
}

inline double supply_cost(const VesselType& v, const Scenario& s) {
    const auto vo = voyage(v, s);
    return charter(v, s) * s.t_op + s.p_fuel * s.t_op * vo.fuel / vo.days;
}
inline double supply_rate(const VesselType& v, const Scenario& s) { return 30.0 * useful(v, s) / voyage(v, s).days; }

inline double tow_power(const Scenario& s, int n) {
    const int i = std::min<int>(n, static_cast<int>(s.towing_power.size())) - 1;
    return s.towing_power[i];
}

inline double loss_usd(double asset, double fatalities, const Scenario& s) {
    return asset + fatalities * s.value_of_life;
}

inline double towing_risk(int n, const Scenario& s) {
    const auto& d = s.damage.by_severity[n == 1 ? 2 : n == 2 ? 1 : 0];
    return s.f_towing * loss_usd(d.asset, d.fatalities, s) * T(s) / 365.0;
}

inline double supply_risk(const std::vector<const VesselType*>& sup, const Scenario& s) {
    double mean = 0;
    for (auto* v : sup) mean += useful(*v, s);
    mean /= sup.size();
    const double nspw = 7.0 * s.cons_rate / (30.0 * mean);
    double tot = 0;
    for (auto* v : sup)
        for (int k = 0; k < 3; ++k) {
            const auto& d = s.damage.by_severity[k];
            tot += s.dp_frequency.by_dp[v->dp_class][k] * nspw / s.n_spw_0 * loss_usd(d.asset, d.fatalities, s) *
                   T(s) / 365.0;
        }
    return tot / sup.size();
}

inline std::optional<double> fire_risk(std::vector<int> classes, const Scenario& s) {
    std::sort(classes.rbegin(), classes.rend());
    if (classes.size() < 2 || classes[1] < 1) return std::nullopt;
    const int letter = classes[1] >= 3 ? 0 : classes[1] >= 2 ? 1 : 2;
    const auto& l = s.fire.by_scenario[letter];
    return s.f_fire * loss_usd(l.asset, l.fatalities, s) * T(s) / 365.0;
}

// Exhaustive duty search. Every non-standby vessel that can carry cargo
// supplies; towing and AH are tried on every subset of capable vessels.
// `operable` is applied by the caller.
inline std::optional<double> brute_force(const std::vector<const VesselType*>& fleet, const Scenario& s) {
    std::optional<double> best;
    const std::size_t n = fleet.size();
    for (std::size_t sb = 0; sb < n; ++sb) {
        if (!fleet[sb]->can_standby) continue;
        std::vector<const VesselType*> rest;
        for (std::size_t i = 0; i < n; ++i)
            if (i != sb) rest.push_back(fleet[i]);
        if (rest.empty()) continue;
        std::vector<const VesselType*> sup;
        std::vector<int> fifi;
        bool oil = false;
        double base = charter(*fleet[sb], s) * T(s) + s.p_fuel * T(s) * s.c_standby;
        double rate = 0;
        for (auto* v : rest) {
            if (v->deck_area > 0) {
                sup.push_back(v);
                base += supply_cost(*v, s);
                rate += supply_rate(*v, s);
            }
            fifi.push_back(v->fifi_class);
            oil = oil || v->can_oil_recovery;
        }
        if (sup.empty() || rate < s.cons_rate * (1 + s.supply_redundancy) * (1 - 1e-12) || !oil) continue;
        const auto fire = ref::fire_risk(fifi, s);
        if (!fire) continue;
        base += ref::supply_risk(sup, s) + *fire;
        const std::size_t m = rest.size();
        for (std::size_t tmask = 1; tmask < (1u << m); ++tmask) {
            int nt = 0;
            double tow = 0;
            bool ok = true;
            for (std::size_t i = 0; i < m; ++i)
                if (tmask >> i & 1) ++nt;
            for (std::size_t i = 0; i < m && ok; ++i)
                if (tmask >> i & 1) {
                    if (!rest[i]->can_towing || rest[i]->power < tow_power(s, nt)) ok = false;
                    tow += charter(*rest[i], s) * t_tow(s) +
                           s.p_fuel * 24 * t_tow(s) * s.k_red * tow_power(s, nt) * s.q;
                }
            if (!ok) continue;
            tow += ref::towing_risk(nt, s);
            for (std::size_t amask = 1; amask < (1u << m); ++amask) {
                double ah = 0;
                int na = 0;
                bool strong = false;
                bool aok = true;
                for (std::size_t i = 0; i < m; ++i)
                    if (amask >> i & 1) {
                        if (!rest[i]->can_anchor_handling) aok = false;
                        ++na;
                        strong = strong || rest[i]->power >= s.n_pp_ah_min;
                        ah += charter(*rest[i], s) * s.t_ah + s.p_fuel * s.t_ah * s.c_ah;
                    }
                if (!aok || na < 2 || !strong) continue;
                const double total = base + tow + ah;
                if (!best || total < *best) best = total;
            }
        }
    }
    return best;
}

}  // namespace ref
