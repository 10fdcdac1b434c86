#include "moulton/region.hpp"

namespace moulton {

Region Region::atom(Atom a) {
    auto n = std::make_shared<Node>();
    n->leaf = a;
    return Region(std::move(n));
}

Region Region::box(Bound x_lo, Bound x_hi, Bound y_lo, Bound y_hi) {
    auto n = std::make_shared<Node>();
    n->leaf = Box{std::move(x_lo), std::move(x_hi), std::move(y_lo), std::move(y_hi)};
    return Region(std::move(n));
}

Region Region::ideal_slope_in(Bound lo, Bound hi) {
    auto n = std::make_shared<Node>();
    n->leaf = SlopeBand{std::move(lo), std::move(hi)};
    return Region(std::move(n));
}

Region operator&(const Region& a, const Region& b) {
    auto n = std::make_shared<Region::Node>();
    n->op = Region::Node::Op::And;
    n->kids = {a.node_, b.node_};
    return Region(std::move(n));
}

Region operator|(const Region& a, const Region& b) {
    auto n = std::make_shared<Region::Node>();
    n->op = Region::Node::Op::Or;
    n->kids = {a.node_, b.node_};
    return Region(std::move(n));
}

Region operator~(const Region& a) {
    auto n = std::make_shared<Region::Node>();
    n->op = Region::Node::Op::Not;
    n->kids = {a.node_};
    return Region(std::move(n));
}

namespace {

bool in_bounds(const Rat& v, const Bound& lo, const Bound& hi) {
    if (lo && !(*lo < v)) return false;
    if (hi && !(v < *hi)) return false;
    return true;
}

bool leaf_contains(const std::variant<Region::Atom, Region::Box, Region::SlopeBand>& leaf,
                   const Point& p) {
    using Atom = Region::Atom;
    if (const auto* a = std::get_if<Atom>(&leaf)) {
        const auto* af = std::get_if<Affine>(&p);
        switch (*a) {
        case Atom::XPos: return af && af->x.sign() > 0;
        case Atom::XNeg: return af && af->x.sign() < 0;
        case Atom::YPos: return af && af->y.sign() > 0;
        case Atom::YNeg: return af && af->y.sign() < 0;
        case Atom::IsAffine: return af != nullptr;
        case Atom::IsIdeal: return af == nullptr;
        case Atom::NotOnRay: return !(af && af->y.is_zero() && af->x.sign() >= 0);
        }
        return false;
    }
    if (const auto* b = std::get_if<Region::Box>(&leaf)) {
        const auto* af = std::get_if<Affine>(&p);
        return af && in_bounds(af->x, b->x_lo, b->x_hi) && in_bounds(af->y, b->y_lo, b->y_hi);
    }
    const auto& band = std::get<Region::SlopeBand>(leaf);
    const auto* id = std::get_if<Ideal>(&p);
    return id && in_bounds(id->s, band.lo, band.hi);
}

bool node_contains(const Region::Node& n, const Point& p) {
    using Op = Region::Node::Op;
    switch (n.op) {
    case Op::Leaf: return leaf_contains(n.leaf, p);
    case Op::And:
        for (const auto& c : n.kids)
            if (!node_contains(*c, p)) return false;
        return true;
    case Op::Or:
        for (const auto& c : n.kids)
            if (node_contains(*c, p)) return true;
        return false;
    case Op::Not: return !node_contains(*n.kids[0], p);
    }
    return false;
}

void node_atoms(const Region::Node& n,
                const std::function<void(const std::variant<Region::Atom, Region::Box, Region::SlopeBand>&)>& fn) {
    if (n.op == Region::Node::Op::Leaf) {
        fn(n.leaf);
        return;
    }
    for (const auto& c : n.kids) node_atoms(*c, fn);
}

} // namespace

bool Region::contains(const Point& p) const { return node_contains(*node_, p); }

void Region::for_each_atom(
    const std::function<void(const std::variant<Atom, Box, SlopeBand>&)>& fn) const {
    node_atoms(*node_, fn);
}

} // namespace moulton
