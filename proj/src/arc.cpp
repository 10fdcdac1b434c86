#include "moulton/arc.hpp"

#include <algorithm>

#include "moulton/errors.hpp"

namespace moulton {

Point point_at(const MoultonParam& k, const Line& l, const LineParam& t) {
    if (const auto* g = std::get_if<Graph>(&l)) {
        if (t.inf) return Ideal{g->s};
        const Rat s = t.t.sign() >= 0 ? g->s : slope_left(k, g->s);
        return Affine{t.t, s * t.t + g->b};
    }
    if (const auto* v = std::get_if<Vertical>(&l)) {
        if (t.inf) return IdealVertical{};
        return Affine{v->c, t.t};
    }
    if (t.inf) return IdealVertical{};
    return Ideal{t.t};
}

LineParam param_of(const Line& l, const Point& p) {
    if (std::holds_alternative<Graph>(l)) {
        if (const auto* a = std::get_if<Affine>(&p)) return LineParam::at(a->x);
        if (std::holds_alternative<Ideal>(p)) return LineParam::infinite();
        throw GeometryError("point not on line");
    }
    if (std::holds_alternative<Vertical>(l)) {
        if (const auto* a = std::get_if<Affine>(&p)) return LineParam::at(a->y);
        if (std::holds_alternative<IdealVertical>(p)) return LineParam::infinite();
        throw GeometryError("point not on line");
    }
    if (const auto* i = std::get_if<Ideal>(&p)) return LineParam::at(i->s);
    if (std::holds_alternative<IdealVertical>(p)) return LineParam::infinite();
    throw GeometryError("point not on line");
}

namespace {

// Sign of the cross ratio (a,b; c,d) on the circle of a projective line.
// Negative iff {a,b} separates {c,d}. Pre: a != b and c,d distinct from a,b.
int cross_sign(const LineParam& a, const LineParam& b, const LineParam& c, const LineParam& d) {
    if (c == d) return 1;
    std::array<const LineParam*, 4> pts{&a, &b, &c, &d};
    bool any_inf = false;
    for (auto* p : pts) any_inf = any_inf || p->inf;
    std::array<Rat, 4> v;
    if (!any_inf) {
        v = {a.t, b.t, c.t, d.t};
    } else {
        // Moebius shift 1/(t - m) keeps the cross ratio and lands all finite.
        Rat m(0);
        bool first = true;
        for (auto* p : pts)
            if (!p->inf) {
                m = first ? p->t : max(m, p->t);
                first = false;
            }
        m += Rat(1);
        for (std::size_t i = 0; i < 4; ++i)
            v[i] = pts[i]->inf ? Rat(0) : Rat(1) / (pts[i]->t - m);
    }
    return (v[2] - v[0]).sign() * (v[3] - v[1]).sign() * (v[2] - v[1]).sign() * (v[3] - v[0]).sign();
}

} // namespace

bool leg_contains(const Leg& leg, const LineParam& z) {
    if (z == leg.tf || z == leg.tt) return true;
    return cross_sign(leg.tf, leg.tt, z, leg.tv) > 0;
}

Leg make_leg(const MoultonParam& k, const Point& from, const Point& to, const Point& via) {
    Line line = mjoin(k, from, to);
    if (via == from || via == to || !mincident(k, via, line))
        throw GeometryError("invalid arc leg");
    return Leg{line, from, to, via, param_of(line, from), param_of(line, to), param_of(line, via)};
}

Arc make_arc(const MoultonParam& k, const std::vector<Point>& waypoints,
             const std::vector<Point>& vias) {
    if (waypoints.size() < 2 || vias.size() + 1 != waypoints.size())
        throw GeometryError("invalid arc leg");
    Arc arc;
    arc.waypoints = waypoints;
    arc.vias = vias;
    for (std::size_t i = 0; i + 1 < waypoints.size(); ++i)
        arc.legs.push_back(make_leg(k, waypoints[i], waypoints[i + 1], vias[i]));
    return arc;
}

Arc reversed(const Arc& a) {
    Arc out;
    out.waypoints.assign(a.waypoints.rbegin(), a.waypoints.rend());
    out.vias.assign(a.vias.rbegin(), a.vias.rend());
    for (auto it = a.legs.rbegin(); it != a.legs.rend(); ++it) {
        Leg l = *it;
        std::swap(l.from, l.to);
        std::swap(l.tf, l.tt);
        out.legs.push_back(std::move(l));
    }
    return out;
}

Arc concat(const Arc& a, const Arc& b) {
    if (a.waypoints.empty() || b.waypoints.empty() || !(a.waypoints.back() == b.waypoints.front()))
        throw GeometryError("invalid arc leg");
    Arc out = a;
    out.waypoints.insert(out.waypoints.end(), b.waypoints.begin() + 1, b.waypoints.end());
    out.vias.insert(out.vias.end(), b.vias.begin(), b.vias.end());
    out.legs.insert(out.legs.end(), b.legs.begin(), b.legs.end());
    return out;
}

LegScale::LegScale(const Leg& leg) {
    const LineParam &f = leg.tf, &t = leg.tt, &v = leg.tv;
    if (!f.inf && !t.inf) {
        const Rat lo = min(f.t, t.t), hi = max(f.t, t.t);
        if (!v.inf && lo < v.t && v.t < hi) {
            puncture_at_inf_ = true; // segment is the plain interval [lo, hi]
            r_ = Rat(0);
        } else {
            puncture_at_inf_ = false; // segment wraps through infinity
            r_ = (lo + hi) / Rat(2);
        }
    } else {
        // exactly one endpoint at infinity; via is finite and picks the side
        const Rat a = f.inf ? t.t : f.t;
        puncture_at_inf_ = false;
        r_ = v.t > a ? a - Rat(1) : a + Rat(1);
    }
    tf_ = tau(f);
    tt_ = tau(t);
}

Rat LegScale::tau(const LineParam& t) const {
    if (puncture_at_inf_) {
        if (t.inf) throw GeometryError("parameter outside leg");
        return t.t;
    }
    if (t.inf) return Rat(0);
    if (t.t == r_) throw GeometryError("parameter outside leg");
    return Rat(1) / (t.t - r_);
}

LineParam LegScale::param(const Rat& tau) const {
    if (puncture_at_inf_) return LineParam::at(tau);
    if (tau.is_zero()) return LineParam::infinite();
    return LineParam::at(r_ + Rat(1) / tau);
}

namespace {

void add_param(std::vector<LineParam>& out, const Rat& t) { out.push_back(LineParam::at(t)); }

// Parameters on the line where an atom's truth value can flip.
void atom_criticals(const MoultonParam& k, const Line& line,
                    const std::variant<Region::Atom, Region::Box, Region::SlopeBand>& leaf,
                    std::vector<LineParam>& out) {
    using Atom = Region::Atom;
    if (const auto* g = std::get_if<Graph>(&line)) {
        auto solve_y = [&](const Rat& v) {
            if (!g->s.is_zero()) {
                Rat t = (v - g->b) / g->s;
                if (t.sign() >= 0) add_param(out, t);
                const Rat ls = slope_left(k, g->s);
                t = (v - g->b) / ls;
                if (t.sign() <= 0) add_param(out, t);
            }
        };
        if (const auto* a = std::get_if<Atom>(&leaf)) {
            switch (*a) {
            case Atom::XPos:
            case Atom::XNeg: add_param(out, Rat(0)); break;
            case Atom::YPos:
            case Atom::YNeg: solve_y(Rat(0)); break;
            case Atom::NotOnRay: solve_y(Rat(0)); add_param(out, Rat(0)); break;
            default: break; // affine/ideal flips happen only at infinity
            }
        } else if (const auto* b = std::get_if<Region::Box>(&leaf)) {
            if (b->x_lo) add_param(out, *b->x_lo);
            if (b->x_hi) add_param(out, *b->x_hi);
            if (b->y_lo) solve_y(*b->y_lo);
            if (b->y_hi) solve_y(*b->y_hi);
        }
        return;
    }
    if (const auto* vl = std::get_if<Vertical>(&line)) {
        if (const auto* a = std::get_if<Atom>(&leaf)) {
            if (*a == Atom::YPos || *a == Atom::YNeg || *a == Atom::NotOnRay)
                add_param(out, Rat(0));
        } else if (const auto* b = std::get_if<Region::Box>(&leaf)) {
            if (b->y_lo) add_param(out, *b->y_lo);
            if (b->y_hi) add_param(out, *b->y_hi);
        }
        (void)vl;
        return;
    }
    // line at infinity: only slope bands have finite boundaries
    if (const auto* band = std::get_if<Region::SlopeBand>(&leaf)) {
        if (band->lo) add_param(out, *band->lo);
        if (band->hi) add_param(out, *band->hi);
    }
}

} // namespace

std::vector<Rat> leg_breakpoints(const MoultonParam& k, const Leg& leg, const Region& r,
                                 const LegScale& scale) {
    std::vector<LineParam> cand{leg.tf, leg.tt, LineParam::infinite()};
    if (std::holds_alternative<Graph>(leg.line)) cand.push_back(LineParam::at(Rat(0)));
    r.for_each_atom([&](const auto& leaf) { atom_criticals(k, leg.line, leaf, cand); });

    std::vector<Rat> taus;
    for (const auto& c : cand)
        if (leg_contains(leg, c)) taus.push_back(scale.tau(c));
    std::sort(taus.begin(), taus.end());
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
    if (scale.tau_from() > scale.tau_to()) std::reverse(taus.begin(), taus.end());
    return taus;
}

bool leg_in_region(const MoultonParam& k, const Leg& leg, const Region& r) {
    LegScale scale(leg);
    const auto taus = leg_breakpoints(k, leg, r, scale);
    // The decision covers the relative interior of the segment: interior
    // crossing parameters and one representative per open subinterval. The
    // two endpoints themselves are waypoints and are judged by the caller.
    for (std::size_t i = 1; i + 1 < taus.size(); ++i)
        if (!r.contains(point_at(k, leg.line, scale.param(taus[i])))) return false;
    for (std::size_t i = 0; i + 1 < taus.size(); ++i) {
        const Rat mid = (taus[i] + taus[i + 1]) / Rat(2);
        if (!r.contains(point_at(k, leg.line, scale.param(mid)))) return false;
    }
    return true;
}

} // namespace moulton
