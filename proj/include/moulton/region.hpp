#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "moulton/moulton.hpp"

namespace moulton {

/// Point-set predicate over the Moulton point space, built from exact atoms
/// and and/or/not. Membership and boundary crossings along a line are exactly
/// decidable (all atom boundaries are linear in the coordinates).
class Region {
public:
    enum class Atom { XPos, XNeg, YPos, YNeg, IsAffine, IsIdeal, NotOnRay };

    /// Open box a < x < b, c < y < d on affine points; absent bounds are
    /// unbounded. Never contains points at infinity.
    struct Box {
        Bound x_lo, x_hi, y_lo, y_hi;
    };
    /// Points at infinity Ideal(s) with lo < s < hi (open, optionally
    /// unbounded). Never contains IdealVertical or affine points.
    struct SlopeBand {
        Bound lo, hi;
    };

    static Region x_pos() { return atom(Atom::XPos); }
    static Region x_neg() { return atom(Atom::XNeg); }
    static Region y_pos() { return atom(Atom::YPos); }
    static Region y_neg() { return atom(Atom::YNeg); }
    static Region affine_points() { return atom(Atom::IsAffine); }
    static Region ideal_points() { return atom(Atom::IsIdeal); }
    /// Everything except the closed horizontal ray {(x,0): x >= 0}.
    static Region not_on_ray() { return atom(Atom::NotOnRay); }
    static Region box(Bound x_lo, Bound x_hi, Bound y_lo, Bound y_hi);
    static Region ideal_slope_in(Bound lo, Bound hi);

    friend Region operator&(const Region& a, const Region& b);
    friend Region operator|(const Region& a, const Region& b);
    friend Region operator~(const Region& a);

    bool contains(const Point& p) const;

    /// Visits every atom in the tree (used for exact crossing computation).
    void for_each_atom(const std::function<void(const std::variant<Atom, Box, SlopeBand>&)>& fn) const;

    struct Node;
    explicit Region(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    const Node& root() const { return *node_; }

private:
    static Region atom(Atom a);
    std::shared_ptr<const Node> node_;
};

struct Region::Node {
    // leaf if kids is empty; op meaningful otherwise
    enum class Op { Leaf, And, Or, Not };
    Op op = Op::Leaf;
    std::variant<Atom, Box, SlopeBand> leaf;
    std::vector<std::shared_ptr<const Node>> kids;
};

} // namespace moulton
