#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "moulton/continuation.hpp"
#include "moulton/desargues.hpp"

namespace moulton {

/// Once around the cylinder (the plane minus the vertical axis, its
/// direction, and the horizontal direction): out along slope 1, back through
/// the third quadrant, up the left half plane, out along slope -1, and home
/// through the fourth and first quadrants. Default loop of the holonomy
/// command; its via points follow the kinked joining lines, so the same
/// waypoints work for every parameter.
Arc canonical_loop(const MoultonParam& k);

/// Right half plane, lower-left quadrant, and the positive ideal slopes:
/// the union of the builtin U1 and U2 chart domains.
Region u_union_v();

/// The cut cylinder: off the vertical axis and the horizontal ideal
/// direction, with the closed horizontal ray {(x,0): x >= 0} also removed.
/// Simply connected, so continuation over it is path independent.
Region cut_cylinder();

/// One verdict of a scripted demonstration, with exact values attached.
struct ScenarioCheck {
    std::string label;
    bool ok = false;
    nlohmann::json detail;
};

struct ScenarioResult {
    std::string id;
    bool pass = false;
    std::vector<ScenarioCheck> checks;
};

/// Ids accepted by run_scenario, in display order.
const std::vector<std::string>& scenario_ids();

/// Runs one scripted demonstration at the given parameter. `budget` <= 0
/// picks the demonstration's default (search trials, verification lines, or
/// sampled arc pairs, as appropriate). Unknown ids throw GeometryError
/// ("unknown scenario").
ScenarioResult run_scenario(const std::string& id, const MoultonParam& k, std::uint64_t seed,
                            long budget);

} // namespace moulton
