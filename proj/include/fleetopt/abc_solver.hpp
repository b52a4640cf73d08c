#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <unordered_map>
#include <vector>

namespace fleetopt {

// Reproducible random source: std::mt19937_64 (output fixed by the standard)
// with explicit transforms instead of the implementation-defined std
// distributions. Version tag: "mt19937_64/v1".
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    // Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    // Uniform on [-1, 1].
    double uniform_pm1() { return static_cast<double>(engine_() >> 11) * (2.0 / 9007199254740991.0) - 1.0; }
    // Uniform integer on [lo, hi] by rejection sampling.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

inline constexpr double kInfeasiblePenalty = 1e18;

double fitness(double f);
int neighbor(int x_ij, int x_kj, double phi, int upper_bound);
std::vector<double> selection_probabilities(const std::vector<double>& fitness_values);

struct AbcParams {
    int colony_size = 40;
    std::optional<long> max_cycles = 50000;
    std::optional<double> max_wall_seconds;
    std::optional<double> target_value;
    std::uint64_t seed = 0;
    int threads = 1;
    bool memoize = true;

    int food_sources() const { return colony_size / 2; }
    long scout_limit(int dimension) const { return static_cast<long>(food_sources()) * dimension; }
    void validate() const;
};

struct FoodSource {
    std::vector<int> x;
    double f = 0.0;
    double fit = 0.0;
    long trials = 0;
};

struct TraceStep {
    long step = 0;
    long cycle = 0;  // 0 is the initial population
    std::vector<int> x;
    double f = 0.0;
};

struct AbcResult {
    std::vector<int> best_x;
    double best_f = kInfeasiblePenalty;
    std::vector<TraceStep> trace;
    long cycles = 0;
    long evaluations = 0;  // objective calls (cache hits excluded)
};

using Objective = std::function<double(const std::vector<int>&)>;

// Called after every cycle with the population and the best value so far.
using CycleObserver = std::function<void(long cycle, const std::vector<FoodSource>&, double best_f)>;

class AbcSolver {
public:
    AbcSolver(Objective objective, std::vector<int> upper_bounds, AbcParams params);
    void set_observer(CycleObserver observer) { observer_ = std::move(observer); }
    AbcResult solve();

private:
    std::vector<double> evaluate_batch(const std::vector<std::vector<int>>& xs);
    std::vector<int> random_source(Rng& rng) const;

    Objective objective_;
    std::vector<int> upper_;
    AbcParams params_;
    CycleObserver observer_;
    long evaluations_ = 0;
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept;
    };
    std::unordered_map<std::vector<int>, double, VecHash> cache_;
};

}  // namespace fleetopt
