#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "moulton/rational.hpp"

namespace moulton {

enum class TripleKind { Point, Line };

/// Homogeneous coordinate triple over the rationals, stored canonically:
/// coprime integer entries with the first nonzero entry positive. Two triples
/// name the same projective element iff they compare equal.
class Triple {
public:
    Triple(TripleKind kind, const Rat& a, const Rat& b, const Rat& c);

    static Triple point(const Rat& a, const Rat& b, const Rat& c) {
        return Triple(TripleKind::Point, a, b, c);
    }
    static Triple line(const Rat& a, const Rat& b, const Rat& c) {
        return Triple(TripleKind::Line, a, b, c);
    }

    TripleKind kind() const { return kind_; }
    const mpz_class& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    Rat at(int i) const { return Rat(c_[static_cast<std::size_t>(i)]); }

    std::string str() const;

    friend bool operator==(const Triple& a, const Triple& b) {
        return a.kind_ == b.kind_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Triple& a, const Triple& b) { return !(a == b); }

private:
    std::array<mpz_class, 3> c_;
    TripleKind kind_;
};

/// Line through two distinct points. Throws "degenerate join" on equal points.
Triple pjoin(const Triple& p, const Triple& q);
/// Intersection point of two distinct lines. Throws "degenerate meet".
Triple pmeet(const Triple& l, const Triple& m);
/// Point-line incidence.
bool pincident(const Triple& p, const Triple& l);
/// Whether three points (or three lines) are collinear (concurrent).
bool collinear(const Triple& a, const Triple& b, const Triple& c);
/// Exact 3x3 determinant of three triples, in row order.
Rat det3(const Triple& a, const Triple& b, const Triple& c);

/// Invertible projective transformation, canonical integer 3x3 matrix
/// (coprime entries, first nonzero entry positive in row-major order).
class Projectivity {
public:
    explicit Projectivity(const std::array<std::array<Rat, 3>, 3>& m);

    static Projectivity identity();
    static Projectivity diagonal(const Rat& a, const Rat& b, const Rat& c);

    Triple apply(const Triple& p) const;
    Projectivity inverse() const;

    Rat at(int r, int c) const { return Rat(m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]); }
    std::string str() const;

    friend bool operator==(const Projectivity& a, const Projectivity& b) { return a.m_ == b.m_; }
    friend bool operator!=(const Projectivity& a, const Projectivity& b) { return !(a == b); }

private:
    Projectivity() = default;
    std::array<std::array<mpz_class, 3>, 3> m_;
    friend Projectivity compose(const Projectivity&, const Projectivity&);
};

/// compose(s, t): the map applying s first, then t (matrix product t*s).
Projectivity compose(const Projectivity& s, const Projectivity& t);

inline bool proj_equal(const Projectivity& a, const Projectivity& b) { return a == b; }

/// Least-squares-free exact fit: the unique projectivity sending every pair's
/// first entry to its second. Needs 4 source points in general position among
/// `pairs` ("insufficient general position" otherwise); every pair in `pairs`
/// and `validation` must be matched exactly ("inconsistent correspondences").
Projectivity fit_projectivity(const std::vector<std::pair<Triple, Triple>>& pairs,
                              const std::vector<std::pair<Triple, Triple>>& validation = {});

} // namespace moulton
