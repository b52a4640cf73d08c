#include <doctest.h>

#include <cmath>
#include <numeric>

#include "fleetopt/abc_solver.hpp"
#include "fleetopt/error.hpp"

using namespace fleetopt;

namespace {

double sum(const std::vector<int>& x) { return std::accumulate(x.begin(), x.end(), 0.0); }

AbcParams quick(std::uint64_t seed, long cycles = 200) {
    AbcParams p;
    p.seed = seed;
    p.max_cycles = cycles;
    return p;
}

// Separable bowl with its minimum inside the box.
double bowl(const std::vector<int>& x) {
    static const int target[] = {2, 0, 4, 1, 3};
    double f = 0;
    for (std::size_t j = 0; j < x.size(); ++j) f += (x[j] - target[j]) * (x[j] - target[j]);
    return f;
}

}  // namespace

TEST_CASE("fitness") {
    CHECK(fitness(0) == 1.0);
    CHECK(fitness(-1) == 2.0);
    CHECK(std::fabs(fitness(3) - 0.25) <= 1e-9 * 0.25);
    CHECK(fitness(kInfeasiblePenalty) > 0);
    CHECK(fitness(kInfeasiblePenalty) < fitness(1e7));
    CHECK_THROWS_AS(fitness(std::nan("")), ValidationError);
}

TEST_CASE("neighbor move") {
    for (double phi : {-1.0, -0.3, 0.0, 0.7, 1.0}) CHECK(neighbor(3, 3, phi, 5) == 3);
    CHECK(neighbor(2, 0, -1.0, 5) == 0);
    CHECK(neighbor(1, 4, 1.0, 5) == 2);
    CHECK(neighbor(5, 0, 1.0, 5) == 5);  // 10 clipped to the bound
    CHECK(neighbor(0, 5, 0.5, 5) == 3);  // round(-2.5) = -3, halves go away from zero
}

TEST_CASE("selection probabilities") {
    const auto p = selection_probabilities({1, 1});
    CHECK(p == std::vector<double>{0.5, 0.5});
    const auto q = selection_probabilities({1, 3});
    CHECK(std::fabs(q[0] - 0.25) <= 1e-9 * 0.25);
    CHECK(std::fabs(q[1] - 0.75) <= 1e-9 * 0.75);
    CHECK(selection_probabilities({0.4}) == std::vector<double>{1.0});
    CHECK_THROWS_AS(selection_probabilities({}), ValidationError);
    CHECK_THROWS_AS(selection_probabilities({0, 0}), ValidationError);
    CHECK_THROWS_AS(selection_probabilities({1, -1}), ValidationError);
}

TEST_CASE("rng is the standard 64-bit Mersenne twister") {
    Rng r(5489);
    CHECK(r.next() == 14514284786278117030ull);
    Rng a(7), b(7);
    for (int i = 0; i < 100; ++i) CHECK(a.uniform_int(0, 5) == b.uniform_int(0, 5));
    Rng c(1);
    for (int i = 0; i < 10000; ++i) {
        const auto v = c.uniform_int(-2, 3);
        CHECK((v >= -2 && v <= 3));
        const double u = c.uniform01();
        CHECK((u >= 0 && u < 1));
        const double w = c.uniform_pm1();
        CHECK((w >= -1 && w <= 1));
    }
}

TEST_CASE("sum of counts is minimized at the origin") {
    AbcSolver solver(sum, {5, 5, 5, 5}, quick(0));
    const auto r = solver.solve();
    CHECK(r.best_x == std::vector<int>{0, 0, 0, 0});
    CHECK(r.best_f == 0.0);
}

TEST_CASE("bowl minimum is found from several seeds") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        AbcSolver solver(bowl, {5, 5, 5, 5, 5}, quick(seed, 500));
        const auto r = solver.solve();
        CHECK(r.best_f == 0.0);
        CHECK(r.best_x == std::vector<int>{2, 0, 4, 1, 3});
    }
}

TEST_CASE("identical seeds give identical traces") {
    auto run = [](std::uint64_t seed, int threads) {
        auto p = quick(seed, 300);
        p.threads = threads;
        AbcSolver s(bowl, {5, 5, 5, 5, 5}, p);
        return s.solve();
    };
    const auto a = run(11, 1), b = run(11, 1), c = run(11, 4);
    REQUIRE(a.trace.size() == b.trace.size());
    REQUIRE(a.trace.size() == c.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].x == b.trace[i].x);
        CHECK(a.trace[i].cycle == b.trace[i].cycle);
        CHECK(a.trace[i].x == c.trace[i].x);
    }
    CHECK(a.evaluations == c.evaluations);
}

TEST_CASE("best value never increases and the population stays in bounds") {
    const std::vector<int> upper = {5, 3, 0, 5, 2};
    auto p = quick(3, 10000);
    p.colony_size = 4;
    p.memoize = false;
    // rugged objective so the search keeps moving
    AbcSolver solver(
        [](const std::vector<int>& x) {
            double f = 0;
            for (std::size_t j = 0; j < x.size(); ++j) f += std::sin(1.7 * x[j] + j) * (j + 1);
            return f + 100;
        },
        upper, p);
    double prev = kInfeasiblePenalty;
    long cycles_seen = 0;
    bool bounds_ok = true, monotone = true;
    solver.set_observer([&](long, const std::vector<FoodSource>& pop, double best) {
        ++cycles_seen;
        if (best > prev) monotone = false;
        prev = best;
        for (const auto& fs : pop)
            for (std::size_t j = 0; j < upper.size(); ++j)
                if (fs.x[j] < 0 || fs.x[j] > upper[j]) bounds_ok = false;
    });
    const auto r = solver.solve();
    CHECK(cycles_seen == 10000);
    CHECK(monotone);
    CHECK(bounds_ok);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        CHECK(r.trace[i].f < r.trace[i - 1].f);
        CHECK(r.trace[i].step == r.trace[i - 1].step + 1);
    }
    CHECK(r.best_f == r.trace.back().f);
}

TEST_CASE("target value stops early") {
    auto p = quick(0, 100000);
    p.target_value = 0.0;
    AbcSolver solver(sum, {3, 3}, p);
    const auto r = solver.solve();
    CHECK(r.best_f == 0.0);
    CHECK(r.cycles < 100000);
}

TEST_CASE("memoization skips repeated points") {
    long calls = 0;
    auto p = quick(0, 200);
    AbcSolver solver(
        [&](const std::vector<int>& x) {
            ++calls;
            return sum(x);
        },
        {1, 1}, p);
    const auto r = solver.solve();
    CHECK(calls <= 4);
    CHECK(r.evaluations == calls);
}

TEST_CASE("parameter validation") {
    AbcParams p;
    p.colony_size = 5;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p.colony_size = 40;
    p.max_cycles.reset();
    CHECK_THROWS_AS(p.validate(), ValidationError);
    p.max_cycles = 10;
    p.threads = 0;
    CHECK_THROWS_AS(p.validate(), ValidationError);
    CHECK_THROWS_AS(AbcSolver(sum, {}, AbcParams{}), ValidationError);
    CHECK_THROWS_AS(AbcSolver(sum, {-1}, AbcParams{}), ValidationError);
    CHECK(AbcParams{}.food_sources() == 20);
    CHECK(AbcParams{}.scout_limit(11) == 220);
}
