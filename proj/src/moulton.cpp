#include "moulton/moulton.hpp"

#include "moulton/errors.hpp"

namespace moulton {

Rat slope_left(const MoultonParam& k, const Rat& s) {
    return s.sign() < 0 ? k.k * s : s;
}

bool mincident(const MoultonParam& k, const Point& p, const Line& l) {
    if (const auto* a = std::get_if<Affine>(&p)) {
        if (const auto* v = std::get_if<Vertical>(&l)) return a->x == v->c;
        if (const auto* g = std::get_if<Graph>(&l)) {
            const Rat s = a->x.sign() >= 0 ? g->s : slope_left(k, g->s);
            return a->y == s * a->x + g->b;
        }
        return false; // line at infinity
    }
    if (const auto* i = std::get_if<Ideal>(&p)) {
        if (const auto* g = std::get_if<Graph>(&l)) return i->s == g->s;
        return std::holds_alternative<LineAtInfinity>(l);
    }
    // ideal vertical
    return !std::holds_alternative<Graph>(l);
}

Line mjoin(const MoultonParam& k, const Point& p, const Point& q) {
    if (p == q) throw GeometryError("degenerate join");

    if (const auto* a = std::get_if<Affine>(&p)) {
        if (const auto* b = std::get_if<Affine>(&q)) {
            if (a->x == b->x) return Vertical{a->x};
            const Affine& l = a->x < b->x ? *a : *b; // leftmost
            const Affine& r = a->x < b->x ? *b : *a;
            const Rat chord = (r.y - l.y) / (r.x - l.x);
            if (l.x.sign() >= 0) // both on the right half: the graph is straight there
                return Graph{chord, l.y - chord * l.x};
            if (r.x.sign() <= 0) { // both on the left half
                const Rat s = chord.sign() < 0 ? chord / k.k : chord;
                return Graph{s, l.y - chord * l.x}; // intercept uses the left-half slope
            }
            // straddling the axis
            if (chord.sign() >= 0) return Graph{chord, r.y - chord * r.x};
            const Rat s = (r.y - l.y) / (r.x - k.k * l.x);
            return Graph{s, r.y - s * r.x};
        }
        if (const auto* i = std::get_if<Ideal>(&q)) {
            const Rat s = a->x.sign() >= 0 ? i->s : slope_left(k, i->s);
            return Graph{i->s, a->y - s * a->x};
        }
        return Vertical{a->x}; // through the vertical direction
    }
    if (std::holds_alternative<Affine>(q)) return mjoin(k, q, p);
    return LineAtInfinity{}; // two distinct points at infinity
}

Point mmeet(const MoultonParam& k, const Line& l, const Line& m) {
    if (l == m) throw GeometryError("degenerate meet");

    if (std::holds_alternative<LineAtInfinity>(l) || std::holds_alternative<LineAtInfinity>(m)) {
        const Line& o = std::holds_alternative<LineAtInfinity>(l) ? m : l;
        if (const auto* g = std::get_if<Graph>(&o)) return Ideal{g->s};
        return IdealVertical{};
    }
    if (const auto* v = std::get_if<Vertical>(&l)) {
        if (std::holds_alternative<Vertical>(m)) return IdealVertical{};
        const auto& g = std::get<Graph>(m);
        const Rat s = v->c.sign() >= 0 ? g.s : slope_left(k, g.s);
        return Affine{v->c, s * v->c + g.b};
    }
    if (std::holds_alternative<Vertical>(m)) return mmeet(k, m, l);

    const auto& g = std::get<Graph>(l);
    const auto& h = std::get<Graph>(m);
    if (g.s == h.s) return Ideal{g.s}; // parallel: same slope class never meets affinely
    // at most one affine crossing; try the right half, then the left
    Rat x = (h.b - g.b) / (g.s - h.s);
    if (x.sign() >= 0) return Affine{x, g.s * x + g.b};
    const Rat gl = slope_left(k, g.s), hl = slope_left(k, h.s);
    x = (h.b - g.b) / (gl - hl);
    if (x.sign() > 0) throw GeometryError("degenerate meet"); // unreachable for k > 0
    return Affine{x, gl * x + g.b};
}

Point Automorphism::apply(const Point& p) const {
    if (const auto* af = std::get_if<Affine>(&p)) return Affine{a * af->x, b * af->y + c};
    if (const auto* i = std::get_if<Ideal>(&p)) return Ideal{b * i->s / a};
    return IdealVertical{};
}

Line Automorphism::apply(const Line& l) const {
    if (const auto* v = std::get_if<Vertical>(&l)) return Vertical{a * v->c};
    if (const auto* g = std::get_if<Graph>(&l)) return Graph{b * g->s / a, b * g->b + c};
    return LineAtInfinity{};
}

Triple embed_point(const Point& p) {
    if (const auto* a = std::get_if<Affine>(&p)) return Triple::point(a->x, a->y, 1);
    if (const auto* i = std::get_if<Ideal>(&p)) return Triple::point(1, i->s, 0);
    return Triple::point(0, 1, 0);
}

Triple embed_line(const Line& l) {
    if (const auto* v = std::get_if<Vertical>(&l)) return Triple::line(1, 0, -v->c);
    if (const auto* g = std::get_if<Graph>(&l)) return Triple::line(g->s, -1, g->b);
    return Triple::line(0, 0, 1);
}

std::string point_str(const Point& p) {
    if (const auto* a = std::get_if<Affine>(&p))
        return "(" + a->x.str() + ", " + a->y.str() + ")";
    if (const auto* i = std::get_if<Ideal>(&p)) return "Ideal(" + i->s.str() + ")";
    return "IdealVertical";
}

std::string line_str(const Line& l) {
    if (const auto* v = std::get_if<Vertical>(&l)) return "Vertical(" + v->c.str() + ")";
    if (const auto* g = std::get_if<Graph>(&l))
        return "Graph(" + g->s.str() + ", " + g->b.str() + ")";
    return "LineAtInfinity";
}

} // namespace moulton
