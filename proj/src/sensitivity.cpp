#include "fleetopt/sensitivity.hpp"

#include <map>
#include <optional>

#include "csv.hpp"
#include "fleetopt/error.hpp"
#include "util.hpp"

namespace fleetopt {

namespace {

SensitivityRow run_one(const Scenario& base, const VesselCatalog& catalog, const RivTable& riv,
                       std::string_view axis, double multiplier, AbcParams params, std::uint64_t seed) {
    Scenario s = base;
    scale_axis(s, axis, multiplier);
    s.validate();
    params.seed = seed;
    const FullSolution sol = optimize(s, catalog, riv, params);
    SensitivityRow r;
    r.multiplier = multiplier;
    r.seed = seed;
    r.counts = sol.traditional.counts;
    r.ice = sol.ice.strategy;
    r.traditional_total = sol.traditional.evaluation.total;
    r.combined_total = sol.combined_total;
    return r;
}

}  // namespace

std::vector<SensitivityRow> sensitivity_run(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv,
                                            std::string_view axis, const std::vector<double>& multipliers,
                                            const AbcParams& params) {
    {
        Scenario probe = s;
        scale_axis(probe, axis, 1.0);  // rejects unknown axes before any work
    }
    if (multipliers.empty()) throw ValidationError("sensitivity needs at least one multiplier");
    std::vector<SensitivityRow> rows;
    std::optional<std::size_t> ref;
    for (std::size_t i = 0; i < multipliers.size(); ++i) {
        if (!(multipliers[i] >= 0)) throw ValidationError("sensitivity multipliers must be >= 0");
        rows.push_back(run_one(s, catalog, riv, axis, multipliers[i], params, params.seed + i));
        if (multipliers[i] == 1.0 && !ref) ref = i;
    }
    const SensitivityRow reference =
        ref ? rows[*ref] : run_one(s, catalog, riv, axis, 1.0, params, params.seed + multipliers.size());

    // fleet identity labels, the reference fleet first
    std::map<std::pair<std::vector<int>, std::vector<std::size_t>>, std::string> labels;
    auto label_of = [&](const SensitivityRow& r) {
        auto key = std::make_pair(r.counts, r.ice.vessels);
        auto it = labels.find(key);
        if (it != labels.end()) return it->second;
        const std::string l = "S" + std::to_string(labels.size() + 1);
        labels.emplace(std::move(key), l);
        return l;
    };
    label_of(reference);
    for (auto& r : rows) {
        r.label = label_of(r);
        r.delta_percent = 100.0 * (r.combined_total - reference.combined_total) / reference.combined_total;
    }
    if (ref) rows[*ref].delta_percent = 0.0;
    return rows;
}

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows, std::string_view axis,
                            const VesselCatalog& catalog) {
    std::vector<std::vector<std::string>> table;
    table.push_back({"axis", "multiplier", "seed", "fleet", "traditional_fleet", "ice_strategy", "ice_fleet",
                     "traditional_total_usd", "combined_total_usd", "delta_percent"});
    for (const auto& r : rows) {
        table.push_back({std::string(axis), util::format_double(r.multiplier), std::to_string(r.seed), r.label,
                         format_counts(r.counts, catalog), strategy_letter(r.ice.kind),
                         format_counts(r.ice.counts(catalog.size()), catalog),
                         util::format_fixed(r.traditional_total, 2), util::format_fixed(r.combined_total, 2),
                         util::format_fixed(r.delta_percent, 3)});
    }
    return csv::write(table);
}

}  // namespace fleetopt
