#include <doctest.h>

#include "fleetopt/cost_engine.hpp"
#include "fleetopt/error.hpp"
#include "support/fixtures.hpp"
#include "support/reference_model.hpp"

using namespace fleetopt;

namespace {

bool close(double a, double b, double tol = 1e-9) { return fx::rel_close(a, b, tol); }

}  // namespace

TEST_CASE("towing time") {
    auto s = fx::case1();
    CHECK(close(towing_time(s), 16.875));
    s.dist_tow = 0;
    CHECK(towing_time(s) == 0.0);
    s.dist_tow = 770;
    CHECK(close(towing_time(s), 770.0 / 48.0));
    CHECK(towing_time(s) == doctest::Approx(16.0417).epsilon(1e-5));
}

TEST_CASE("towing costs") {
    const auto s = fx::case1();
    const auto c = towing_costs(fx::type("Type10"), 1, s);
    CHECK(close(c.charter, 593325.0));
    // 550 * 24 * 16.875 * 0.9 * 9600 * 0.000221
    CHECK(close(c.fuel, 425327.76));
    CHECK(close(towing_costs(fx::type("Type10"), 2, s).fuel, 550 * 24 * 16.875 * 0.9 * 5530 * 0.000221));
    auto z = s;
    z.dist_tow = 0;
    const auto zero = towing_costs(fx::type("Type10"), 1, z);
    CHECK(zero.charter == 0.0);
    CHECK(zero.fuel == 0.0);
    CHECK_THROWS_AS(towing_costs(fx::type("Type2"), 1, s), ValidationError);
    CHECK_THROWS_AS(towing_costs(fx::type("Type10"), 0, s), ValidationError);
}

TEST_CASE("anchor handling costs") {
    auto s = fx::case1();
    const auto c = ah_costs(fx::type("Type11"), s);
    CHECK(close(c.charter, 690120.0));
    CHECK(close(c.fuel, 297000.0));
    s.t_ah = 0;
    CHECK(ah_costs(fx::type("Type11"), s).total() == 0.0);
}

TEST_CASE("cruising speed") {
    auto s = fx::case1();
    CHECK(cruising_speed(fx::type("Type1"), s) == 8.80);
    CHECK(cruising_speed(fx::type("Type15"), s) == 8.11);

    SpeedLossModel m;
    m.rows = {{0.6, 1.7, -1.4, -7.4}, {0.7, 2.2, -2.5, -9.7}};
    s.speed_mode = SpeedMode::WindLoss;
    s.speed_loss = m;
    s.beaufort = 0;
    CHECK(cruising_speed(fx::type("Type1"), s) == 10.0);
    s.beaufort = 4;
    const double v4 = cruising_speed(fx::type("Type1"), s);
    s.beaufort = 7;
    const double v7 = cruising_speed(fx::type("Type1"), s);
    CHECK(v4 < 10.0);
    CHECK(v7 < v4);
    s.speed_loss.reset();
    CHECK_THROWS_AS(cruising_speed(fx::type("Type1"), s), ValidationError);
}

TEST_CASE("voyage profile of Type1") {
    const auto s = fx::case1();
    const auto& t1 = fx::type("Type1");
    const auto p = voyage_profile(t1, s);
    CHECK(close(p.t_p, 2.481));
    CHECK(close(p.t_pl, 1.0431));
    CHECK(close(p.t_mov, 810.0 / (24 * 8.8)));
    CHECK(p.t_mov == doctest::Approx(3.835).epsilon(1e-4));
    CHECK(p.t_voyage == doctest::Approx(11.194).epsilon(1e-4));
    CHECK(p.fuel_per_voyage == doctest::Approx(131.21).epsilon(1e-4));
    const auto r = ref::voyage(t1, s);
    CHECK(close(p.t_voyage, r.days));
    CHECK(close(p.fuel_per_voyage, r.fuel));
}

TEST_CASE("supply costs") {
    auto s = fx::case1();
    CHECK(close(supply_costs(fx::type("Type11"), s).charter, 3450600.0));
    const auto c1 = supply_costs(fx::type("Type1"), s);
    CHECK(c1.fuel == doctest::Approx(580162).epsilon(1e-4));
    CHECK(close(c1.total(), ref::supply_cost(fx::type("Type1"), s)));
    s.t_op = 0;
    CHECK(supply_costs(fx::type("Type1"), s).total() == 0.0);
}

TEST_CASE("useful deck area") {
    VesselType v;
    v.deck_area = 470;
    CHECK(close(useful_deck_area(v, 300), 300.0));
    v.deck_area = 400;
    CHECK(close(useful_deck_area(v, 300), 280.0));
    CHECK(useful_deck_area(v, 1e12) == 400 * 0.7);
}

TEST_CASE("supply rate") {
    const auto s = fx::case1();
    const auto* t1 = &fx::type("Type1");
    const double one = supply_rate({t1}, s);
    CHECK(one == doctest::Approx(804.0).epsilon(1e-4));
    CHECK(close(one, ref::supply_rate(*t1, s)));
    CHECK(supply_rate({}, s) == 0.0);
    CHECK(supply_rate({t1, t1}, s) == 2 * one);
}

TEST_CASE("standby costs") {
    auto s = fx::case1();
    const auto c = standby_costs(fx::type("Type1"), s);
    CHECK(close(c.charter, 124.875 * 32750));
    CHECK(c.charter == doctest::Approx(4089656).epsilon(1e-6));
    CHECK(close(c.fuel, 549450.0));
    s.t_op = s.t_ah = s.dist_tow = 0;
    CHECK(standby_costs(fx::type("Type1"), s).total() == 0.0);
    CHECK_THROWS_AS(standby_costs(fx::type("Type2"), s), ValidationError);
}

TEST_CASE("ice management costs") {
    const auto s = fx::case1();
    const auto c = ice_mgmt_costs(fx::type("Type7"), s);
    CHECK(close(c.charter, 28510 * 124.875));
    CHECK(close(c.fuel, 550 * 124.875 * 20));
}

TEST_CASE("charter multiplier and regression") {
    auto s = fx::case1();
    s.charter_multiplier = 1.5;
    CHECK(close(effective_charter_rate(fx::type("Type1"), s), 1.5 * 32750));

    CHECK(close(ice_class_charter_factor(fx::type("Type1")), 1.99));
    CHECK(ice_class_charter_factor(fx::type("Type23")) == 1.0);

    MarketContext m;
    m.betas.assign(14, 0.0);
    CHECK(charter_rate_estimate(fx::type("Type1"), m) == 1.0);
    m.betas[0] = 10.0;
    CHECK(close(charter_rate_estimate(fx::type("Type23"), m), std::exp(10.0)));
    m.betas.pop_back();
    CHECK_THROWS_AS(charter_rate_estimate(fx::type("Type1"), m), ValidationError);

    s.charter_multiplier = 1.0;
    s.charter_mode = CharterMode::Regression;
    CHECK_THROWS_AS(effective_charter_rate(fx::type("Type1"), s), ValidationError);
    m.betas.assign(14, 0.0);
    s.market = m;
    CHECK(effective_charter_rate(fx::type("Type1"), s) == 1.0);
}
