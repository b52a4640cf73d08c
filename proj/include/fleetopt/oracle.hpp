#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fleetopt/fleet_optimizer.hpp"

namespace fleetopt {

inline constexpr std::uint64_t kOracleMaxPoints = 10'000'000;

struct OracleResult {
    bool found = false;
    std::vector<int> counts;  // full catalog length, zero outside the subset
    double best = kInfeasiblePenalty;
    std::uint64_t feasible_points = 0;
    std::uint64_t points = 0;
};

// Evaluates every count vector over the subset with each count in
// [0, max_count]. Ties go to the lexicographically smallest vector. Throws
// ValidationError if (max_count + 1)^|subset| exceeds kOracleMaxPoints.
OracleResult exhaustive_search(const Scenario& s, const VesselCatalog& catalog, const RivTable& riv,
                               const std::vector<std::size_t>& subset, int max_count, int threads = 1);

}  // namespace fleetopt
