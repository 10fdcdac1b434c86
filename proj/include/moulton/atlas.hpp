#pragma once

#include "moulton/chart.hpp"

namespace moulton {

/// Recorded intersection data for one unordered chart pair: shared sample
/// points, or nothing when the two domains are disjoint.
struct Overlap {
    std::string a, b;
    std::optional<std::vector<Point>> samples;
};

/// Finite family of charts with recorded pairwise overlap samples.
struct Atlas {
    MoultonParam k;
    std::vector<Chart> charts;
    std::vector<Overlap> overlaps;

    /// Chart by name; throws "unknown chart".
    const Chart& find(const std::string& name) const;
    /// Recorded overlap of an unordered pair, or nullptr when none is stored.
    const Overlap* overlap_for(const std::string& a, const std::string& b) const;
};

/// The four-chart atlas of the cylinder: the plane minus the vertical axis,
/// its direction at infinity, and the horizontal direction at infinity.
/// U1 = {x>0} and U3 = {x<0} with identity maps; U2 = open first and third
/// quadrants plus the positive ideal slopes, identity; U4 = open second and
/// fourth quadrants plus the negative ideal slopes, with the left half
/// straightened by (x,y) -> (k*x, y). Consecutive pairs carry five overlap
/// samples each; (U1,U3) and (U2,U4) are disjoint.
Atlas builtin_atlas(const MoultonParam& k);

/// Checks every chart passes verify_chart_homomorphism, every overlap sample
/// set has at least five points lying in both domains with four images in
/// general position. Throws GeometryError on the first violation.
void validate_atlas(const Atlas& atlas, long chart_budget = 64, std::uint64_t seed = 1);

} // namespace moulton
