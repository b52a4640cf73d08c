#include "fleetopt/abc_solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include "fleetopt/error.hpp"

namespace fleetopt {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw ValidationError("uniform_int: empty range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1u;
    if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % span);
    std::uint64_t r;
    do {
        r = engine_();
    } while (r >= limit);
    return lo + static_cast<std::int64_t>(r % span);
}

double fitness(double f) {
    if (!std::isfinite(f)) throw ValidationError("fitness: objective value is not finite");
    return f >= 0 ? 1.0 / (1.0 + f) : 1.0 + std::fabs(f);
}

int neighbor(int x_ij, int x_kj, double phi, int upper_bound) {
    const double step = std::round(phi * static_cast<double>(x_ij - x_kj));
    const long v = std::labs(static_cast<long>(x_ij) + static_cast<long>(step));
    return static_cast<int>(std::clamp<long>(v, 0, upper_bound));
}

std::vector<double> selection_probabilities(const std::vector<double>& fit) {
    if (fit.empty()) throw ValidationError("selection probabilities of an empty population");
    double sum = 0.0;
    for (double v : fit) {
        if (!(v >= 0)) throw ValidationError("selection probabilities need non-negative fitness");
        sum += v;
    }
    if (!(sum > 0)) throw ValidationError("selection probabilities need a positive fitness sum");
    std::vector<double> p(fit.size());
    for (std::size_t i = 0; i < fit.size(); ++i) p[i] = fit[i] / sum;
    return p;
}

void AbcParams::validate() const {
    if (colony_size < 4 || colony_size % 2 != 0)
        throw ValidationError("colony size must be even and at least 4");
    if (!max_cycles && !max_wall_seconds && !target_value)
        throw ValidationError("ABC needs a stop criterion");
    if (max_cycles && *max_cycles < 0) throw ValidationError("max cycles must be >= 0");
    if (threads < 1) throw ValidationError("threads must be >= 1");
}

std::size_t AbcSolver::VecHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

AbcSolver::AbcSolver(Objective objective, std::vector<int> upper_bounds, AbcParams params)
    : objective_(std::move(objective)), upper_(std::move(upper_bounds)), params_(params) {
    params_.validate();
    if (upper_.empty()) throw ValidationError("ABC needs at least one dimension");
    for (int u : upper_)
        if (u < 0) throw ValidationError("ABC upper bounds must be >= 0");
}

std::vector<int> AbcSolver::random_source(Rng& rng) const {
    std::vector<int> x(upper_.size());
    for (std::size_t j = 0; j < upper_.size(); ++j) x[j] = static_cast<int>(rng.uniform_int(0, upper_[j]));
    return x;
}

std::vector<double> AbcSolver::evaluate_batch(const std::vector<std::vector<int>>& xs) {
    std::vector<double> out(xs.size());
    std::vector<std::size_t> todo;
    std::unordered_map<std::vector<int>, std::size_t, VecHash> first;
    std::vector<std::ptrdiff_t> alias(xs.size(), -1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (params_.memoize) {
            auto it = cache_.find(xs[i]);
            if (it != cache_.end()) {
                out[i] = it->second;
                continue;
            }
            auto [pos, inserted] = first.emplace(xs[i], i);
            if (!inserted) {
                alias[i] = static_cast<std::ptrdiff_t>(pos->second);
                continue;
            }
        }
        todo.push_back(i);
    }

    std::exception_ptr error;
    std::mutex error_mutex;
    auto run = [&](std::size_t idx) {
        try {
            const double f = objective_(xs[idx]);
            if (std::isnan(f)) throw ValidationError("objective returned NaN");
            out[idx] = f;
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    const int threads = std::min<int>(params_.threads, static_cast<int>(todo.size()));
    if (threads <= 1) {
        for (auto idx : todo) run(idx);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t k = next++; k < todo.size(); k = next++) run(todo[k]);
            });
        for (auto& th : pool) th.join();
    }
    if (error) {
        try {
            std::rethrow_exception(error);
        } catch (const Error&) {
            throw;
        } catch (const std::exception& e) {
            throw Error("internal", std::string("objective evaluation failed: ") + e.what());
        }
    }
    evaluations_ += static_cast<long>(todo.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (alias[i] >= 0) out[i] = out[static_cast<std::size_t>(alias[i])];
    if (params_.memoize)
        for (auto idx : todo) cache_.emplace(xs[idx], out[idx]);
    for (double& f : out)
        if (f > kInfeasiblePenalty || std::isinf(f)) f = kInfeasiblePenalty;
    return out;
}

AbcResult AbcSolver::solve() {
    const auto start = std::chrono::steady_clock::now();
    const int D = static_cast<int>(upper_.size());
    const int nfs = params_.food_sources();
    const long limit = std::max<long>(1, params_.scout_limit(D));
    Rng rng(params_.seed);
    evaluations_ = 0;

    AbcResult result;
    std::vector<FoodSource> pop(nfs);
    {
        std::vector<std::vector<int>> xs;
        for (int i = 0; i < nfs; ++i) xs.push_back(random_source(rng));
        const auto fs = evaluate_batch(xs);
        for (int i = 0; i < nfs; ++i) pop[i] = {xs[i], fs[i], fitness(fs[i]), 0};
    }

    long cycle = 0;
    auto memorize = [&] {
        const FoodSource* top = &pop.front();
        for (const auto& s : pop)
            if (s.f < top->f) top = &s;
        if (result.trace.empty() || top->f < result.best_f) {
            result.best_f = top->f;
            result.best_x = top->x;
            result.trace.push_back({static_cast<long>(result.trace.size()) + 1, cycle, top->x, top->f});
        }
    };
    memorize();

    auto pick_partner = [&](int i) {
        auto k = static_cast<int>(rng.uniform_int(0, nfs - 2));
        return k >= i ? k + 1 : k;
    };
    auto make_candidate = [&](int i) {
        const int j = static_cast<int>(rng.uniform_int(0, D - 1));
        const int k = pick_partner(i);
        const double phi = rng.uniform_pm1();
        std::vector<int> v = pop[i].x;
        v[j] = neighbor(pop[i].x[j], pop[k].x[j], phi, upper_[j]);
        return v;
    };
    auto greedy = [&](int i, std::vector<int>&& x, double f) {
        const double fit = fitness(f);
        if (fit > pop[i].fit) {
            pop[i] = {std::move(x), f, fit, 0};
        } else {
            ++pop[i].trials;
        }
    };
    auto should_stop = [&] {
        if (params_.max_cycles && cycle >= *params_.max_cycles) return true;
        if (params_.target_value && result.best_f <= *params_.target_value) return true;
        if (params_.max_wall_seconds) {
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
            if (el.count() >= *params_.max_wall_seconds) return true;
        }
        return false;
    };

    while (!should_stop()) {
        ++cycle;

        // employed bees
        {
            std::vector<std::vector<int>> cands;
            for (int i = 0; i < nfs; ++i) cands.push_back(make_candidate(i));
            const auto fs = evaluate_batch(cands);
            for (int i = 0; i < nfs; ++i) greedy(i, std::move(cands[i]), fs[i]);
        }

        // onlooker bees
        {
            const bool any_feasible =
                std::any_of(pop.begin(), pop.end(), [](const FoodSource& s) { return s.f < kInfeasiblePenalty; });
            std::vector<double> fit(nfs);
            for (int i = 0; i < nfs; ++i)
                fit[i] = (any_feasible && pop[i].f >= kInfeasiblePenalty) ? 0.0 : pop[i].fit;
            const auto p = selection_probabilities(fit);
            std::vector<int> chosen;
            std::vector<std::vector<int>> cands;
            for (int o = 0; o < nfs; ++o) {
                const double u = rng.uniform01();
                double acc = 0.0;
                int sel = nfs - 1;
                while (sel > 0 && p[sel] == 0.0) --sel;
                for (int i = 0; i < nfs; ++i) {
                    acc += p[i];
                    if (u < acc) {
                        sel = i;
                        break;
                    }
                }
                chosen.push_back(sel);
                cands.push_back(make_candidate(sel));
            }
            const auto fs = evaluate_batch(cands);
            for (int o = 0; o < nfs; ++o) greedy(chosen[o], std::move(cands[o]), fs[o]);
        }

        // scout bees
        {
            std::vector<int> idx;
            std::vector<std::vector<int>> xs;
            for (int i = 0; i < nfs; ++i)
                if (pop[i].trials >= limit) {
                    idx.push_back(i);
                    xs.push_back(random_source(rng));
                }
            if (!xs.empty()) {
                const auto fs = evaluate_batch(xs);
                for (std::size_t n = 0; n < idx.size(); ++n)
                    pop[idx[n]] = {std::move(xs[n]), fs[n], fitness(fs[n]), 0};
            }
        }

        memorize();
        if (observer_) observer_(cycle, pop, result.best_f);
    }
    result.cycles = cycle;
    result.evaluations = evaluations_;
    return result;
}

}  // namespace fleetopt
