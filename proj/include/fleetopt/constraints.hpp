#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fleetopt/ice_model.hpp"
#include "fleetopt/scenario.hpp"
#include "fleetopt/vessel_catalog.hpp"

namespace fleetopt {

inline std::uint32_t duty_bit(Duty d) { return 1u << static_cast<unsigned>(d); }

// One chartered vessel and the duties it performs.
struct AssignedVessel {
    std::size_t type_index = 0;
    std::uint32_t duties = 0;

    bool has(Duty d) const { return (duties & duty_bit(d)) != 0; }
    void add(Duty d) { duties |= duty_bit(d); }
    bool operator==(const AssignedVessel&) const = default;
};

struct DutyAssignment {
    std::vector<AssignedVessel> vessels;

    std::vector<std::size_t> with_duty(Duty d) const;  // vessel positions
    int count(Duty d) const;
    int n_tugs() const { return count(Duty::Towing); }
    std::optional<std::size_t> standby_vessel() const;
    std::vector<int> counts(std::size_t catalog_size) const;
    bool operator==(const DutyAssignment&) const = default;
};

enum class ConstraintId {
    Capability,      // duties within vessel capabilities
    SupplyRate,      // 1
    TowingPower,     // 2
    AnchorHandling,  // 3
    Standby,         // 4
    FireFighting,    // 5
    OilRecovery,     // 6
    IceClassMargin,  // 7
    IceOperability   // RIO policy
};
std::string to_string(ConstraintId id);
// Row number 1..7 of the duty constraint list, 0 for the others.
int constraint_number(ConstraintId id);

struct Violation {
    ConstraintId id;
    std::string detail;
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<Violation> violations;
    bool violates(ConstraintId id) const;
};

FeasibilityReport check_feasibility(const DutyAssignment& assignment, const Scenario& s,
                                    const VesselCatalog& catalog, const RivTable& riv);

}  // namespace fleetopt
