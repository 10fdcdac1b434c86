#pragma once

#include <vector>

#include "moulton/region.hpp"

namespace moulton {

/// Position on the circle of a projective line: a finite coordinate t or the
/// line's single point at infinity. For Graph legs t is the x-coordinate, for
/// Vertical legs the y-coordinate, for the line at infinity the ideal slope.
struct LineParam {
    bool inf = false;
    Rat t;
    static LineParam at(const Rat& v) { return {false, v}; }
    static LineParam infinite() { return {true, {}}; }
    friend bool operator==(const LineParam& a, const LineParam& b) {
        return a.inf == b.inf && (a.inf || a.t == b.t);
    }
};

Point point_at(const MoultonParam& k, const Line& l, const LineParam& t);
/// Inverse of point_at; the point must lie on the line.
LineParam param_of(const Line& l, const Point& p);

/// One traversed closed segment of a projective line. Removing {from, to}
/// from the line's circle leaves two open arcs; the segment is the closure of
/// the arc containing via.
struct Leg {
    Line line;
    Point from, to, via;
    LineParam tf, tt, tv;
};

Leg make_leg(const MoultonParam& k, const Point& from, const Point& to, const Point& via);

/// Chain of legs; waypoints[i] -> waypoints[i+1] is legs[i].
struct Arc {
    std::vector<Point> waypoints;
    std::vector<Point> vias;
    std::vector<Leg> legs;
};

Arc make_arc(const MoultonParam& k, const std::vector<Point>& waypoints,
             const std::vector<Point>& vias);
Arc reversed(const Arc& a);
/// Concatenation; the first arc must end where the second starts.
Arc concat(const Arc& a, const Arc& b);

/// Whether the closed segment contains the circle position z.
bool leg_contains(const Leg& leg, const LineParam& z);

/// Order-preserving rational rescaling of a leg: a projective chart of the
/// circle punctured outside the segment, mapping the segment onto a closed
/// finite interval so interval bookkeeping becomes exact.
class LegScale {
public:
    explicit LegScale(const Leg& leg);
    Rat tau(const LineParam& t) const;
    LineParam param(const Rat& tau) const;
    Rat tau_from() const { return tf_; }
    Rat tau_to() const { return tt_; }

private:
    bool puncture_at_inf_;
    Rat r_;
    Rat tf_, tt_;
};

/// Exact positions (as LegScale values, in traversal order, endpoints
/// included) where membership of the leg in the region can change.
std::vector<Rat> leg_breakpoints(const MoultonParam& k, const Leg& leg, const Region& r,
                                 const LegScale& scale);

/// True iff the whole closed segment lies inside the region: membership is
/// checked at every breakpoint and at one interior witness per gap.
bool leg_in_region(const MoultonParam& k, const Leg& leg, const Region& r);

} // namespace moulton
