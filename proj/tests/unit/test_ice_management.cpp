#include <doctest.h>

#include <cmath>

#include "fleetopt/error.hpp"
#include "fleetopt/ice_management.hpp"
#include "support/fixtures.hpp"
#include "support/reference_model.hpp"

using namespace fleetopt;

namespace {

bool close(double a, double b, double tol = 1e-9) { return fx::rel_close(a, b, tol); }

double ref_reduction(double h) { return std::min(0.0204 * std::exp(1.9304 * h), h); }

// Ice conditions averaged over the two case files, zero iceberg risk.
Scenario averaged_ice(double p_mild, double p_avg, double p_severe) {
    auto s = fx::case1();
    s.p_iceberg = 0.0;
    s.ice_conditions = {
        {IceLabel::Mild, 0.15, 0.4, 1.0, 0.04, p_mild},
        {IceLabel::Average, 0.6, 1.2, 2.0, 0.10, p_avg},
        {IceLabel::Severe, 1.0, 1.45, 2.5, 0.12, p_severe},
    };
    s.validate();
    return s;
}

// Hand evaluation of one strategy under the reference formulas.
double hand_total(IceStrategyKind kind, const std::vector<std::string>& fleet, const Scenario& s, double trad) {
    double f0 = 0;
    for (const auto& c : s.ice_conditions) {
        const double h = ref::h_eq(c.concentration, c.level_ice_thickness, c.ridging, c.snow_thickness);
        const double after = kind == IceStrategyKind::Active ? h - ref_reduction(h) : h;
        if (after > s.h_max) f0 += c.probability;
    }
    const double F = kind == IceStrategyKind::Complete ? 0.0 : f0 + (1 - f0) * s.p_iceberg;
    double cost = 0;
    for (const auto& n : fleet) {
        const auto& v = fx::type(n);
        cost += ref::charter(v, s) * ref::T(s) + s.p_fuel * ref::T(s) * s.c_ice_management;
    }
    return cost + F * (trad + s.installation_day_rate * ref::T(s));
}

}  // namespace

TEST_CASE("thickness reduction") {
    CHECK(close(thickness_reduction(1.0), 0.0204 * std::exp(1.9304)));
    CHECK(thickness_reduction(1.0) == doctest::Approx(0.14061).epsilon(1e-5));
    CHECK(thickness_reduction(0.0) == 0.0);
    CHECK(close(thickness_reduction(2.8429), 2.8429));
    CHECK(0.0204 * std::exp(1.9304 * 2.8429) == doctest::Approx(4.937).epsilon(1e-3));
    CHECK_THROWS_AS(thickness_reduction(-0.1), ValidationError);
}

TEST_CASE("interruption probability") {
    const auto c1 = fx::case1();
    CHECK(interruption_probability(IceStrategyKind::Complete, c1) == 0.0);
    CHECK(close(interruption_probability(IceStrategyKind::Passive, c1), 0.895));
    CHECK(close(interruption_probability(IceStrategyKind::Passive, fx::case2_mild()), 0.01));
    CHECK(interruption_probability(IceStrategyKind::Complete, fx::case2_mild()) == 0.0);
    // Case-2 severe stays above h_max after management, average is already below it
    const auto c2 = fx::case2();
    CHECK(close(interruption_probability(IceStrategyKind::Passive, c2), 0.15 + 0.85 * 0.01));
    CHECK(close(interruption_probability(IceStrategyKind::Active, c2), 0.15 + 0.85 * 0.01));
}

TEST_CASE("interruption consequence") {
    auto s = fx::case1();
    CHECK(close(interruption_consequence(0, s), 74925000.0));
    CHECK(close(interruption_consequence(24.1e6, s), 99025000.0));
    s.installation_day_rate = 0;
    CHECK(interruption_consequence(12345.0, s) == 12345.0);
}

TEST_CASE("strategy evaluation") {
    const auto s = fx::case1();
    IceStrategy st{IceStrategyKind::Complete, {}};
    st.vessels.push_back(fx::catalog().require_index("Type1"));
    for (int i = 0; i < 4; ++i) st.vessels.push_back(fx::catalog().require_index("Type7"));
    const auto r = evaluate_ice_strategy(st, fx::catalog(), s, 24e6);
    CHECK(r.expected_cost == 0.0);
    CHECK(close(r.total(), hand_total(IceStrategyKind::Complete, {"Type1", "Type7", "Type7", "Type7", "Type7"}, s, 24e6)));
    CHECK(close(r.strategy_cost, r.strategy_charter + r.strategy_fuel));

    IceStrategy passive{IceStrategyKind::Passive, {fx::catalog().require_index("Type1")}};
    const auto p = evaluate_ice_strategy(passive, fx::catalog(), s, 24e6);
    CHECK(close(p.expected_cost, 0.895 * (24e6 + 74925000.0)));

    CHECK(evaluate_ice_strategy({}, fx::catalog(), s, 24e6).total() == 0.0);
    CHECK(st.counts(fx::catalog().size()) == fx::counts("Type1=1,Type7=4"));
}

TEST_CASE("Case-1 ice fleet is complete management with Type1 and four Type7") {
    const auto r = optimize_ice_fleet(fx::catalog(), fx::case1(), fx::riv(), 23.89e6);
    CHECK(r.strategy.kind == IceStrategyKind::Complete);
    CHECK(r.strategy.counts(fx::catalog().size()) == fx::counts("Type1=1,Type7=4"));
    CHECK(r.strategy.vessels.front() == fx::catalog().require_index("Type1"));
}

TEST_CASE("Case-2 ice fleet is a single Type1 escort") {
    const auto r = optimize_ice_fleet(fx::catalog(), fx::case2(), fx::riv(), 23.75e6);
    CHECK(r.strategy.kind == IceStrategyKind::Passive);
    CHECK(r.strategy.counts(fx::catalog().size()) == fx::counts("Type1=1"));
    const auto m = optimize_ice_fleet(fx::catalog(), fx::case2_mild(), fx::riv(), 16.4e6);
    CHECK(m.strategy.kind == IceStrategyKind::Passive);
    CHECK(m.strategy.counts(fx::catalog().size()) == fx::counts("Type1=1"));
}

TEST_CASE("ice-free scenario charters no ice fleet") {
    const auto r = optimize_ice_fleet(fx::catalog(), fx::sensitivity_base(), fx::riv(), 10e6);
    CHECK(r.strategy.kind == IceStrategyKind::None);
    CHECK(r.strategy.vessels.empty());
    CHECK(r.risk.total() == 0.0);
    CHECK(strategy_letter(r.strategy.kind) == "-");
}

TEST_CASE("averaged-ice scenarios pick the cheapest strategy by hand evaluation") {
    const double trad = 23.89e6;
    struct Row {
        double pm, pa, ps;
    };
    for (const auto& row : {Row{0.15, 0.7, 0.15}, Row{0.15, 0.75, 0.1}, Row{0.875, 0.025, 0.1}}) {
        const auto s = averaged_ice(row.pm, row.pa, row.ps);
        const double a = hand_total(IceStrategyKind::Complete, {"Type1", "Type7", "Type7", "Type7", "Type7"}, s, trad);
        const double b = hand_total(IceStrategyKind::Active, {"Type1", "Type7"}, s, trad);
        const double c = hand_total(IceStrategyKind::Passive, {"Type1"}, s, trad);
        const auto r = optimize_ice_fleet(fx::catalog(), s, fx::riv(), trad);
        CHECK(r.risk.total() <= std::min({a, b, c}) * (1 + 1e-12));
        const auto expect = a <= b && a <= c ? IceStrategyKind::Complete
                            : b <= c         ? IceStrategyKind::Active
                                             : IceStrategyKind::Passive;
        CHECK(r.strategy.kind == expect);
    }
    // the default probabilities keep complete management
    CHECK(optimize_ice_fleet(fx::catalog(), averaged_ice(0.15, 0.7, 0.15), fx::riv(), trad).strategy.kind ==
          IceStrategyKind::Complete);
}

TEST_CASE("no eligible leader is infeasible") {
    VesselCatalog weak;
    weak.types.push_back(fx::type("Type23"));
    CHECK_THROWS_AS(optimize_ice_fleet(weak, fx::case1(), fx::riv(), 1e6), InfeasibleError);
}
