#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "moulton/sampler.hpp"

namespace moulton {

/// Join/meet/incidence face of a Moulton plane, for model-generic
/// configuration code.
struct MoultonModel {
    MoultonParam k;
    using P = Point;
    using L = Line;
    L join(const P& p, const P& q) const { return mjoin(k, p, q); }
    P meet(const L& l, const L& m) const { return mmeet(k, l, m); }
    bool incident(const P& p, const L& l) const { return mincident(k, p, l); }
    /// Exact incidence defect: zero iff incident. Affine points against a
    /// graph line measure y - slope(x)*x - b on the point's branch; slope
    /// classes against graph lines measure the slope difference; structural
    /// mismatches (e.g. an affine point against the line at infinity) give 1.
    Rat residual(const P& p, const L& l) const;
};

/// The same face for the classical plane in homogeneous coordinates.
struct ClassicalModel {
    using P = Triple;
    using L = Triple;
    L join(const P& p, const P& q) const { return pjoin(p, q); }
    P meet(const L& l, const L& m) const { return pmeet(l, m); }
    bool incident(const P& p, const L& l) const { return pincident(p, l); }
    /// The incidence dot product (a determinant of the join construction).
    Rat residual(const P& p, const L& l) const;
};

/// Two triangles in perspective from a center.
template <class P>
struct DConfig {
    P o;
    std::array<P, 3> a, b;
};

/// The three meets of corresponding triangle sides and their exact
/// collinearity verdict. `residual` is the incidence defect of the third
/// meet against the axis of the first two — zero exactly when closing.
template <class M>
struct Closure {
    typename M::P c12, c13, c23;
    bool closes;
    std::optional<typename M::L> axis;
    Rat residual;
};

namespace detail {

template <class M>
void validate_config(const M& m, const DConfig<typename M::P>& cfg) {
    const std::array<typename M::P, 7> pts{cfg.o,    cfg.a[0], cfg.a[1], cfg.a[2],
                                           cfg.b[0], cfg.b[1], cfg.b[2]};
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i] == pts[j]) throw GeometryError("degenerate configuration");
    for (int i = 0; i < 3; ++i)
        if (!m.incident(cfg.b[i], m.join(cfg.o, cfg.a[i])))
            throw GeometryError("degenerate configuration");
    if (m.incident(cfg.a[2], m.join(cfg.a[0], cfg.a[1])) ||
        m.incident(cfg.b[2], m.join(cfg.b[0], cfg.b[1])))
        throw GeometryError("degenerate configuration");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (m.join(cfg.a[i], cfg.a[j]) == m.join(cfg.b[i], cfg.b[j]))
                throw GeometryError("degenerate configuration");
}

} // namespace detail

/// Exact Desargues closure test; the configuration is validated first
/// ("degenerate configuration").
template <class M>
Closure<M> desargues_closes(const M& m, const DConfig<typename M::P>& cfg) {
    detail::validate_config(m, cfg);
    auto meet_of_sides = [&](int i, int j) {
        return m.meet(m.join(cfg.a[i], cfg.a[j]), m.join(cfg.b[i], cfg.b[j]));
    };
    Closure<M> out{meet_of_sides(0, 1), meet_of_sides(0, 2), meet_of_sides(1, 2), false,
                   std::nullopt, Rat(0)};
    if (out.c12 == out.c13) {
        out.closes = true;
        if (!(out.c12 == out.c23)) out.axis = m.join(out.c12, out.c23);
    } else {
        out.axis = m.join(out.c12, out.c13);
        out.closes = m.incident(out.c23, *out.axis);
        out.residual = m.residual(out.c23, *out.axis);
    }
    return out;
}

struct NonClosing {
    DConfig<Point> config;
    Closure<MoultonModel> witness;
};

/// Deterministic seeded search for a non-closing configuration whose ten
/// points (center, triangles, side meets) all lie in the region. Tries a
/// table of known shapes rescaled into the region's window first, then
/// random centers with three random lines and two points per line. Absence
/// is a value: std::nullopt after `budget` trials.
std::optional<NonClosing> find_nonclosing(const MoultonModel& m, const Region& region,
                                          long budget, std::uint64_t seed);

} // namespace moulton
