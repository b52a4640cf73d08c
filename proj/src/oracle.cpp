#include "fleetopt/oracle.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

#include "fleetopt/error.hpp"

namespace fleetopt {

namespace {

struct Best {
    bool found = false;
    double f = kInfeasiblePenalty;
    std::vector<int> counts;
    std::uint64_t feasible = 0;

    void offer(double value, const std::vector<int>& c) {
        if (value >= kInfeasiblePenalty) return;
        ++feasible;
        if (!found || value < f || (value == f && c < counts)) {
            found = true;
            f = value;
            counts = c;
        }
    }
};

}  // namespace

OracleResult exhaustive_search(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv,
                               const std::vector<std::size_t>& subset, int max_count, int threads) {
    if (max_count < 0) throw ValidationError("oracle max count must be >= 0");
    if (threads < 1) throw ValidationError("threads must be >= 1");
    std::set<std::size_t> seen;
    for (auto i : subset) {
        if (i >= catalog.size()) throw ValidationError("oracle subset references vessel type outside the catalog");
        if (!seen.insert(i).second) throw ValidationError("oracle subset lists " + catalog[i].name + " twice");
    }
    const std::uint64_t radix = static_cast<std::uint64_t>(max_count) + 1;
    std::uint64_t points = 1;
    for (std::size_t k = 0; k < subset.size(); ++k) {
        if (points > kOracleMaxPoints / radix)
            throw ValidationError("oracle search space exceeds " + std::to_string(kOracleMaxPoints) + " points");
        points *= radix;
    }

    const FleetEvaluator ev(s, catalog, riv);
    const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), points));
    std::vector<Best> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto run = [&](int w) {
        try {
            const std::uint64_t lo = points * w / workers, hi = points * (w + 1) / workers;
            std::vector<int> c(catalog.size(), 0);
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                std::uint64_t rest = idx;
                for (std::size_t k = subset.size(); k-- > 0;) {
                    c[subset[k]] = static_cast<int>(rest % radix);
                    rest /= radix;
                }
                partial[w].offer(ev.objective(c), c);
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Best total;
    for (const auto& p : partial) {
        total.feasible += p.feasible;
        if (p.found && (!total.found || p.f < total.f || (p.f == total.f && p.counts < total.counts))) {
            total.found = true;
            total.f = p.f;
            total.counts = p.counts;
        }
    }
    OracleResult r;
    r.found = total.found;
    r.best = total.f;
    r.counts = total.found ? total.counts : std::vector<int>(catalog.size(), 0);
    r.feasible_points = total.feasible;
    r.points = points;
    return r;
}

}  // namespace fleetopt
