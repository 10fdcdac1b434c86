#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moulton/arc.hpp"
#include "moulton/sampler.hpp"

namespace moulton {

/// One projectivity together with the sub-region it is valid on.
struct Piece {
    Region region;
    Projectivity map;
};

/// Piecewise-projective map from a region of the Moulton point space into the
/// classical projective plane. Points are evaluated through their classical
/// coordinates (x:y:1) / (1:s:0) / (0:1:0); the piece containing the point
/// picks the projectivity. Piece regions partition the domain.
struct Chart {
    std::string name;
    Region domain;
    std::vector<Piece> pieces;
};

/// Image of p ("outside chart" when no piece of the domain contains it).
Triple chart_apply(const Chart& c, const Point& p);

/// A line whose in-domain points have non-collinear images: three sample
/// points certifying the failure.
struct LineWitness {
    Line line;
    std::array<Point, 3> points;
    std::array<Triple, 3> images;
};

struct VerifyResult {
    bool ok = false;
    long lines_checked = 0;
    std::optional<LineWitness> witness;
};

/// Checks the line condition of a local homomorphism by sampling: joins of
/// random in-domain point pairs plus kinked and vertical lines, each tested
/// for exact collinearity of its in-domain images. Fails fast with a witness.
/// Throws "empty domain" when no domain point can be found at all.
VerifyResult verify_chart_homomorphism(const MoultonParam& k, const Chart& c, long budget,
                                       std::uint64_t seed = 1);

/// Refit of `incoming` against `established`: every piece map is
/// post-composed with the projectivity fitted over pairs
/// (incoming(x), established(x)) across the overlap samples, so the result
/// agrees with `established` on all of them exactly. The samples must lie in
/// both domains and have 4 images in general position; a sample set that no
/// single projectivity matches raises "inconsistent correspondences".
Chart glue(const Chart& established, const Chart& incoming,
           const std::vector<Point>& overlap_samples);

/// One chart on the union of the two domains, evaluating `established`
/// where it is defined and `extra` elsewhere.
Chart union_chart(const Chart& established, const Chart& extra);

/// Deterministic enumeration of positions on a projective line, used by the
/// in-domain witness searches: 0, infinity, 1, -1, 2, -2, 1/2, -1/2, 3, ...
LineParam line_position(long index);

/// Value at `query` of the unique extension of a densely-defined chart:
/// intersects the images of the two lines joining `query` to the base points
/// a and b, each image line being recovered from the base point and one more
/// in-domain point. `query` on the line a-b raises "on the removed line"
/// (callers retry with another base pair); a join line with no second
/// in-domain witness among the first `budget` positions raises "insufficient
/// density witnesses".
Triple extend_dense(const MoultonParam& k, const Chart& c, const Point& a, const Point& b,
                    const Point& query, long budget = 64);

} // namespace moulton
