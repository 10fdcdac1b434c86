#include "moulton/projective.hpp"

#include <numeric>

#include "moulton/errors.hpp"

namespace moulton {

namespace {

// Scale rational coordinates to coprime integers, first nonzero positive.
std::array<mpz_class, 3> canonical_ints(const std::array<Rat, 3>& v) {
    mpz_class l = 1;
    for (const auto& r : v) {
        mpz_class d = r.den();
        l = l / gcd(l, d) * d;
    }
    std::array<mpz_class, 3> out;
    mpz_class g = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        out[i] = v[i].num() * (l / v[i].den());
        g = gcd(g, out[i]);
    }
    if (g == 0) return out; // all zero; caller rejects
    int lead = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (out[i] != 0) { lead = sgn(out[i]); break; }
    if (lead < 0) g = -g;
    for (auto& z : out) z /= g;
    return out;
}

} // namespace

Triple::Triple(TripleKind kind, const Rat& a, const Rat& b, const Rat& c) : kind_(kind) {
    c_ = canonical_ints({a, b, c});
    if (c_[0] == 0 && c_[1] == 0 && c_[2] == 0)
        throw GeometryError("zero triple");
}

std::string Triple::str() const {
    return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
}

static std::array<Rat, 3> cross(const Triple& u, const Triple& v) {
    return {Rat(mpz_class(u[1] * v[2] - u[2] * v[1])),
            Rat(mpz_class(u[2] * v[0] - u[0] * v[2])),
            Rat(mpz_class(u[0] * v[1] - u[1] * v[0]))};
}

Triple pjoin(const Triple& p, const Triple& q) {
    if (p == q) throw GeometryError("degenerate join");
    auto c = cross(p, q);
    return Triple(TripleKind::Line, c[0], c[1], c[2]);
}

Triple pmeet(const Triple& l, const Triple& m) {
    if (l == m) throw GeometryError("degenerate meet");
    auto c = cross(l, m);
    return Triple(TripleKind::Point, c[0], c[1], c[2]);
}

bool pincident(const Triple& p, const Triple& l) {
    return p[0] * l[0] + p[1] * l[1] + p[2] * l[2] == 0;
}

Rat det3(const Triple& a, const Triple& b, const Triple& c) {
    mpz_class d = a[0] * (b[1] * c[2] - b[2] * c[1])
                - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0]);
    return Rat(d);
}

bool collinear(const Triple& a, const Triple& b, const Triple& c) {
    return det3(a, b, c).is_zero();
}

Projectivity::Projectivity(const std::array<std::array<Rat, 3>, 3>& m) {
    // flatten, canonicalize like a 9-vector, then check invertibility
    mpz_class l = 1;
    for (const auto& row : m)
        for (const auto& r : row) {
            mpz_class d = r.den();
            l = l / gcd(l, d) * d;
        }
    mpz_class g = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            m_[i][j] = m[i][j].num() * (l / m[i][j].den());
            g = gcd(g, m_[i][j]);
        }
    if (g == 0) throw GeometryError("singular matrix");
    int lead = 0;
    for (std::size_t i = 0; i < 3 && lead == 0; ++i)
        for (std::size_t j = 0; j < 3 && lead == 0; ++j)
            if (m_[i][j] != 0) lead = sgn(m_[i][j]);
    if (lead < 0) g = -g;
    for (auto& row : m_)
        for (auto& z : row) z /= g;
    mpz_class det = m_[0][0] * (m_[1][1] * m_[2][2] - m_[1][2] * m_[2][1])
                  - m_[0][1] * (m_[1][0] * m_[2][2] - m_[1][2] * m_[2][0])
                  + m_[0][2] * (m_[1][0] * m_[2][1] - m_[1][1] * m_[2][0]);
    if (det == 0) throw GeometryError("singular matrix");
}

Projectivity Projectivity::identity() {
    return diagonal(1, 1, 1);
}

Projectivity Projectivity::diagonal(const Rat& a, const Rat& b, const Rat& c) {
    std::array<std::array<Rat, 3>, 3> m{{{a, Rat(0), Rat(0)},
                                         {Rat(0), b, Rat(0)},
                                         {Rat(0), Rat(0), c}}};
    return Projectivity(m);
}

Triple Projectivity::apply(const Triple& p) const {
    std::array<Rat, 3> out;
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = Rat(mpz_class(m_[i][0] * p[0] + m_[i][1] * p[1] + m_[i][2] * p[2]));
    return Triple(p.kind(), out[0], out[1], out[2]);
}

Projectivity Projectivity::inverse() const {
    // adjugate equals the inverse up to the (nonzero) determinant scale
    auto c = [&](int i, int j) { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    std::array<std::array<Rat, 3>, 3> adj;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r1 = (j + 1) % 3, r2 = (j + 2) % 3; // transposed cofactor
            int c1 = (i + 1) % 3, c2 = (i + 2) % 3;
            adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                Rat(mpz_class(c(r1, c1) * c(r2, c2) - c(r1, c2) * c(r2, c1)));
        }
    return Projectivity(adj);
}

Projectivity compose(const Projectivity& s, const Projectivity& t) {
    std::array<std::array<Rat, 3>, 3> m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            mpz_class acc = 0;
            for (std::size_t k = 0; k < 3; ++k) acc += t.m_[i][k] * s.m_[k][j];
            m[i][j] = Rat(acc);
        }
    return Projectivity(m);
}

std::string Projectivity::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < 3; ++i) {
        s += (i ? "; " : "");
        for (std::size_t j = 0; j < 3; ++j)
            s += (j ? "," : "") + m_[i][j].get_str();
    }
    return s + "]";
}

namespace {

bool general_position4(const Triple& a, const Triple& b, const Triple& c, const Triple& d) {
    return !collinear(a, b, c) && !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d);
}

// Matrix sending the standard frame e1,e2,e3,(1:1:1) to p1..p4, or nothing if
// the four images are degenerate.
std::optional<std::array<std::array<Rat, 3>, 3>> frame_matrix(const Triple& p1, const Triple& p2,
                                                              const Triple& p3, const Triple& p4) {
    Rat d = det3(p1, p2, p3);
    if (d.is_zero()) return std::nullopt;
    Rat l1 = det3(p4, p2, p3) / d;
    Rat l2 = det3(p1, p4, p3) / d;
    Rat l3 = det3(p1, p2, p4) / d;
    if (l1.is_zero() || l2.is_zero() || l3.is_zero()) return std::nullopt;
    std::array<std::array<Rat, 3>, 3> m;
    for (int i = 0; i < 3; ++i) {
        m[static_cast<std::size_t>(i)][0] = l1 * p1.at(i);
        m[static_cast<std::size_t>(i)][1] = l2 * p2.at(i);
        m[static_cast<std::size_t>(i)][2] = l3 * p3.at(i);
    }
    return m;
}

} // namespace

Projectivity fit_projectivity(const std::vector<std::pair<Triple, Triple>>& pairs,
                              const std::vector<std::pair<Triple, Triple>>& validation) {
    const std::size_t n = pairs.size();
    if (n < 4) throw GeometryError("insufficient general position");

    // first 4-subset of sources in general position, scanned lexicographically
    std::array<std::size_t, 4> idx{};
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i)
        for (std::size_t j = i + 1; j < n && !found; ++j)
            for (std::size_t l = j + 1; l < n && !found; ++l)
                for (std::size_t r = l + 1; r < n && !found; ++r)
                    if (general_position4(pairs[i].first, pairs[j].first, pairs[l].first, pairs[r].first)) {
                        idx = {i, j, l, r};
                        found = true;
                    }
    if (!found) throw GeometryError("insufficient general position");

    auto a = frame_matrix(pairs[idx[0]].first, pairs[idx[1]].first, pairs[idx[2]].first, pairs[idx[3]].first);
    auto b = frame_matrix(pairs[idx[0]].second, pairs[idx[1]].second, pairs[idx[2]].second, pairs[idx[3]].second);
    if (!a) throw GeometryError("insufficient general position");
    if (!b) throw GeometryError("inconsistent correspondences");

    Projectivity t = compose(Projectivity(*a).inverse(), Projectivity(*b));

    for (const auto& [src, dst] : pairs)
        if (t.apply(src) != dst) throw GeometryError("inconsistent correspondences");
    for (const auto& [src, dst] : validation)
        if (t.apply(src) != dst) throw GeometryError("inconsistent correspondences");
    return t;
}

} // namespace moulton
