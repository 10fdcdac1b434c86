#pragma once

#include "moulton/atlas.hpp"

namespace moulton {

/// Raised when some point of an arc lies in no chart domain of the atlas (or
/// no admissible chart handoff exists there). Carries the offending point.
class CoverageError : public GeometryError {
public:
    explicit CoverageError(Point exit)
        : GeometryError("arc leaves atlas coverage"), exit_point(std::move(exit)) {}
    Point exit_point;
};

/// One stage of a chart chain: the chart takes over at `entry`, a point
/// shared with the previous chart's domain.
struct ChainStep {
    std::string chart;
    Point entry;
};

/// Covers the arc with a chain of atlas charts: each leg is cut at every
/// exact domain-boundary position, sub-segments are assigned greedily to the
/// current chart as long as it covers them, and handoffs switch to the chart
/// that covers the most upcoming sub-segments among those sharing a recorded
/// overlap with the current one. Consecutive repeats are merged. Throws
/// CoverageError at the first uncovered point.
std::vector<ChainStep> build_chain(const Atlas& atlas, const Arc& arc,
                                   const std::string& start_chart);

/// Result of continuing a chart along an arc: the chain walked, the final
/// chart refit so all gluings agree, and its value at the arc endpoint.
struct Continuation {
    std::vector<ChainStep> chain;
    Chart final_chart;
    Triple endpoint_image;
};

/// Sequentially glues atlas charts along the arc's chain, starting from the
/// unmodified start chart. Each handoff fits the next chart against the
/// current one over the recorded overlap samples plus the handoff point.
Continuation continue_along(const Atlas& atlas, const Arc& arc, const std::string& start_chart);

/// Holonomy of a loop: the projectivity relating the start chart to its
/// continuation around the loop.
struct Holonomy {
    Projectivity transform;
    bool trivial;
    std::vector<std::string> chain;
};

/// Continues the start chart around the loop (whose endpoints must be equal)
/// and fits `transform` over (original(x), continued(x)) across the start
/// chart's recorded overlap samples and the base point.
Holonomy holonomy(const Atlas& atlas, const Arc& loop, const std::string& start_chart);

} // namespace moulton
