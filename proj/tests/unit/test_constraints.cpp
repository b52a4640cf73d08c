#include <doctest.h>

#include "fleetopt/constraints.hpp"
#include "fleetopt/error.hpp"
#include "support/fixtures.hpp"

using namespace fleetopt;

namespace {

AssignedVessel vessel(const std::string& type, std::initializer_list<Duty> duties) {
    AssignedVessel v;
    v.type_index = fx::catalog().require_index(type);
    for (Duty d : duties) v.add(d);
    return v;
}

// One Type1 standby, two Type10 on towing + AH + supply, two Type11 on supply + Fi-Fi.
DutyAssignment case1_optimum() {
    DutyAssignment a;
    a.vessels.push_back(vessel("Type1", {Duty::Standby}));
    for (int i = 0; i < 2; ++i)
        a.vessels.push_back(vessel("Type10", {Duty::Towing, Duty::AnchorHandling, Duty::Supply}));
    a.vessels.push_back(vessel("Type11", {Duty::Supply, Duty::FireFighting, Duty::OilRecovery}));
    a.vessels.push_back(vessel("Type11", {Duty::Supply, Duty::FireFighting}));
    return a;
}

std::vector<int> numbers(const FeasibilityReport& r) {
    std::vector<int> out;
    for (const auto& v : r.violations) out.push_back(constraint_number(v.id));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("Case-1 optimized assignment is feasible") {
    const auto r = check_feasibility(case1_optimum(), fx::case1(), fx::catalog(), fx::riv());
    CHECK(r.feasible);
    CHECK(r.violations.empty());
}

TEST_CASE("single weak tug violates towing power") {
    auto a = case1_optimum();
    for (auto& v : a.vessels) v.duties &= ~duty_bit(Duty::Towing);
    a.vessels.push_back(vessel("Type23", {Duty::Towing}));  // 3800 kW
    auto s = fx::case2_mild();
    const auto r = check_feasibility(a, s, fx::catalog(), fx::riv());
    CHECK(r.violates(ConstraintId::TowingPower));
    CHECK(numbers(r) == std::vector<int>{2});
}

TEST_CASE("empty fleet violates every duty constraint") {
    const auto r = check_feasibility({}, fx::case1(), fx::catalog(), fx::riv());
    CHECK_FALSE(r.feasible);
    // constraint 2 counts an empty towing set as a violation too
    CHECK(numbers(r) == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("standby vessel must be dedicated") {
    auto a = case1_optimum();
    a.vessels[0].add(Duty::Supply);
    const auto r = check_feasibility(a, fx::case1(), fx::catalog(), fx::riv());
    CHECK(r.violates(ConstraintId::Standby));
    auto b = case1_optimum();
    b.vessels.push_back(vessel("Type1", {Duty::Standby}));
    CHECK(check_feasibility(b, fx::case1(), fx::catalog(), fx::riv()).violates(ConstraintId::Standby));
}

TEST_CASE("capabilities are enforced") {
    auto a = case1_optimum();
    a.vessels[0] = vessel("Type2", {Duty::Standby});
    const auto r = check_feasibility(a, fx::case1(), fx::catalog(), fx::riv());
    CHECK(r.violates(ConstraintId::Capability));
}

TEST_CASE("anchor handling needs a strong vessel") {
    auto a = case1_optimum();
    a.vessels[1].duties &= ~duty_bit(Duty::AnchorHandling);
    CHECK(check_feasibility(a, fx::case1(), fx::catalog(), fx::riv()).violates(ConstraintId::AnchorHandling));
}

TEST_CASE("supply redundancy raises the required rate") {
    auto s = fx::case1();
    s.supply_redundancy = 2.0;
    CHECK(check_feasibility(case1_optimum(), s, fx::catalog(), fx::riv()).violates(ConstraintId::SupplyRate));
}

TEST_CASE("ice operability follows the RIO policy") {
    auto a = case1_optimum();
    a.vessels.push_back(vessel("Type23", {Duty::Supply}));
    auto s = fx::case1();
    CHECK(check_feasibility(a, s, fx::catalog(), fx::riv()).violates(ConstraintId::IceOperability));
    CHECK_FALSE(check_feasibility(a, fx::case2_mild(), fx::catalog(), fx::riv()).violates(ConstraintId::IceOperability));
}

TEST_CASE("ice management needs a class margin") {
    auto a = case1_optimum();
    a.vessels.push_back(vessel("Type7", {Duty::IceManagement}));
    CHECK(check_feasibility(a, fx::case1(), fx::catalog(), fx::riv()).violates(ConstraintId::IceClassMargin));
    a.vessels.back() = vessel("Type1", {Duty::IceManagement});
    CHECK_FALSE(check_feasibility(a, fx::case1(), fx::catalog(), fx::riv()).violates(ConstraintId::IceClassMargin));
}

TEST_CASE("assignment helpers") {
    const auto a = case1_optimum();
    CHECK(a.n_tugs() == 2);
    CHECK(a.count(Duty::Supply) == 4);
    CHECK(a.standby_vessel() == std::optional<std::size_t>(0));
    const auto counts = a.counts(fx::catalog().size());
    CHECK(counts == fx::counts("Type1=1,Type10=2,Type11=2"));
    DutyAssignment bad;
    bad.vessels.push_back({999, 0});
    CHECK_THROWS_AS(check_feasibility(bad, fx::case1(), fx::catalog(), fx::riv()), ValidationError);
}
