#pragma once

#include <string>
#include <variant>

#include "moulton/projective.hpp"
#include "moulton/rational.hpp"

namespace moulton {

/// Kink parameter k > 0. Lines with negative slope s run with slope s on
/// x >= 0 and slope k*s on x <= 0; k = 1 is the classical plane.
struct MoultonParam {
    Rat k;
    explicit MoultonParam(const Rat& kk) : k(kk) {
        if (k.sign() <= 0) throw GeometryError("k must be positive");
    }
};

struct Affine {
    Rat x, y;
    friend bool operator==(const Affine&, const Affine&) = default;
};
/// Common point at infinity of all lines whose right-half slope is s.
struct Ideal {
    Rat s;
    friend bool operator==(const Ideal&, const Ideal&) = default;
};
/// Common point at infinity of the vertical lines.
struct IdealVertical {
    friend bool operator==(const IdealVertical&, const IdealVertical&) = default;
};

using Point = std::variant<Affine, Ideal, IdealVertical>;

struct Vertical {
    Rat c;
    friend bool operator==(const Vertical&, const Vertical&) = default;
};
/// y = s*x + b on x >= 0 and y = slope_left(k,s)*x + b on x <= 0.
struct Graph {
    Rat s, b;
    friend bool operator==(const Graph&, const Graph&) = default;
};
struct LineAtInfinity {
    friend bool operator==(const LineAtInfinity&, const LineAtInfinity&) = default;
};

using Line = std::variant<Vertical, Graph, LineAtInfinity>;

inline bool is_affine(const Point& p) { return std::holds_alternative<Affine>(p); }

/// Effective slope on the left half plane: s for s >= 0, k*s for s < 0.
Rat slope_left(const MoultonParam& k, const Rat& s);

/// Exact point-line incidence.
bool mincident(const MoultonParam& k, const Point& p, const Line& l);
/// The unique line through two distinct points ("degenerate join" otherwise).
Line mjoin(const MoultonParam& k, const Point& p, const Point& q);
/// The unique common point of two distinct lines ("degenerate meet" otherwise).
Point mmeet(const MoultonParam& k, const Line& l, const Line& m);

/// (x,y) -> (a*x, b*y + c) with a,b > 0; an automorphism for every k, fixing
/// the vertical axis and the horizontal direction at infinity.
struct Automorphism {
    Rat a, b, c;
    Automorphism(const Rat& aa, const Rat& bb, const Rat& cc) : a(aa), b(bb), c(cc) {
        if (a.sign() <= 0 || b.sign() <= 0)
            throw GeometryError("automorphism parameters must be positive");
    }
    Point apply(const Point& p) const;
    Line apply(const Line& l) const;
};

/// Classical homogeneous coordinates of the underlying point set:
/// (x,y) -> (x:y:1), Ideal(s) -> (1:s:0), IdealVertical -> (0:1:0).
Triple embed_point(const Point& p);
/// Homogeneous line coordinates matching embed_point for k = 1.
Triple embed_line(const Line& l);

std::string point_str(const Point& p);
std::string line_str(const Line& l);

} // namespace moulton
