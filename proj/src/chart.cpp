#include "moulton/chart.hpp"

#include <numeric>

#include "moulton/errors.hpp"

namespace moulton {

Triple chart_apply(const Chart& c, const Point& p) {
    if (!c.domain.contains(p)) throw GeometryError("outside chart");
    for (const auto& piece : c.pieces)
        if (piece.region.contains(p)) return piece.map.apply(embed_point(p));
    throw GeometryError("outside chart");
}

namespace {

/// In-domain points of the line, probed at the deterministic positions plus
/// a few seeded ones; capped at `want`.
std::vector<Point> domain_points_on_line(const MoultonParam& k, const Chart& c, const Line& line,
                                         Sampler& s, std::size_t want) {
    std::vector<Point> out;
    auto consider = [&](const LineParam& pos) {
        if (out.size() >= want) return;
        const Point p = point_at(k, line, pos);
        if (!c.domain.contains(p)) return;
        for (const auto& q : out)
            if (q == p) return;
        out.push_back(p);
    };
    for (long i = 0; i < 40 && out.size() < want; ++i) consider(line_position(i));
    for (int i = 0; i < 8 && out.size() < want; ++i) consider(LineParam::at(s.rat(8, 8)));
    return out;
}

} // namespace

VerifyResult verify_chart_homomorphism(const MoultonParam& k, const Chart& c, long budget,
                                       std::uint64_t seed) {
    Sampler s(seed);
    const Window w = region_window(c.domain);
    auto draw_point = [&]() -> Point {
        auto p = point_in_region(s, c.domain, w, 400);
        if (!p) throw GeometryError("empty domain");
        return *p;
    };
    (void)draw_point(); // surface "empty domain" before any line work

    VerifyResult result;
    const long max_attempts = budget * 20;
    for (long attempt = 0; attempt < max_attempts && result.lines_checked < budget; ++attempt) {
        Line line;
        switch (s.bits() % 8) {
        case 5:
        case 6: // kinked line: negative slope, intercept near the window
            line = Graph{Rat(-s.pick(1, 4), s.pick(1, 3)), s.rat(3, 4)};
            break;
        case 7:
            line = s.bits() % 4 == 0 ? Line(LineAtInfinity{})
                                     : Line(Vertical{s.between(w.x_lo, w.x_hi)});
            break;
        default: {
            const Point p = draw_point(), q = draw_point();
            if (p == q) continue;
            line = mjoin(k, p, q);
            break;
        }
        }

        const auto pts = domain_points_on_line(k, c, line, s, 8);
        if (pts.size() < 3) continue;
        std::vector<Triple> imgs;
        imgs.reserve(pts.size());
        for (const auto& p : pts) imgs.push_back(chart_apply(c, p));

        std::size_t second = 0;
        for (std::size_t i = 1; i < imgs.size() && second == 0; ++i)
            if (imgs[i] != imgs[0]) second = i;
        if (second == 0) continue; // all images coincide; nothing to join
        const Triple axis = pjoin(imgs[0], imgs[second]);
        for (std::size_t i = 1; i < imgs.size(); ++i) {
            if (i == second || pincident(imgs[i], axis)) continue;
            result.witness = LineWitness{line,
                                         {pts[0], pts[second], pts[i]},
                                         {imgs[0], imgs[second], imgs[i]}};
            result.lines_checked += 1;
            return result;
        }
        result.lines_checked += 1;
    }
    result.ok = true;
    return result;
}

Chart glue(const Chart& established, const Chart& incoming,
           const std::vector<Point>& overlap_samples) {
    std::vector<std::pair<Triple, Triple>> pairs;
    pairs.reserve(overlap_samples.size());
    for (const auto& x : overlap_samples) {
        if (!established.domain.contains(x) || !incoming.domain.contains(x))
            throw GeometryError("overlap sample outside chart domains");
        pairs.emplace_back(chart_apply(incoming, x), chart_apply(established, x));
    }
    const Projectivity psi = fit_projectivity(pairs);
    Chart out = incoming;
    for (auto& piece : out.pieces) piece.map = compose(piece.map, psi);
    return out;
}

Chart union_chart(const Chart& established, const Chart& extra) {
    Chart out{established.name + "+" + extra.name, established.domain | extra.domain, {}};
    for (const auto& piece : established.pieces)
        out.pieces.push_back({piece.region & established.domain, piece.map});
    for (const auto& piece : extra.pieces)
        out.pieces.push_back({piece.region & extra.domain & ~established.domain, piece.map});
    return out;
}

LineParam line_position(long index) {
    if (index == 0) return LineParam::at(Rat(0));
    if (index == 1) return LineParam::infinite();
    long i = index - 2;
    for (long h = 2;; ++h) {
        for (long num = h - 1; num >= 1; --num) {
            const long den = h - num;
            if (std::gcd(num, den) != 1) continue;
            if (i == 0) return LineParam::at(Rat(num, den));
            if (i == 1) return LineParam::at(Rat(-num, den));
            i -= 2;
        }
    }
}

namespace {

/// Image line of `l` under the chart: joins the image of the given on-line
/// base point with the image of one further in-domain point of l.
Triple image_line(const MoultonParam& k, const Chart& c, const Line& l, const Point& base,
                  const Triple& base_img, long budget) {
    for (long i = 0; i < budget; ++i) {
        const Point p = point_at(k, l, line_position(i));
        if (p == base || !c.domain.contains(p)) continue;
        const Triple img = chart_apply(c, p);
        if (img == base_img) continue;
        return pjoin(base_img, img);
    }
    throw GeometryError("insufficient density witnesses");
}

} // namespace

Triple extend_dense(const MoultonParam& k, const Chart& c, const Point& a, const Point& b,
                    const Point& query, long budget) {
    const Line removed = mjoin(k, a, b);
    if (mincident(k, query, removed)) throw GeometryError("on the removed line");
    const Triple ia = chart_apply(c, a), ib = chart_apply(c, b);
    if (ia == ib) throw GeometryError("degenerate join");
    const Triple la = image_line(k, c, mjoin(k, a, query), a, ia, budget);
    const Triple lb = image_line(k, c, mjoin(k, b, query), b, ib, budget);
    return pmeet(la, lb);
}

} // namespace moulton
