#include "moulton/continuation.hpp"

#include <algorithm>

namespace moulton {

namespace {

/// Boundary positions of the leg against every chart domain, merged and
/// ordered in traversal direction. Endpoints included.
std::vector<Rat> merged_breakpoints(const Atlas& atlas, const Leg& leg, const LegScale& scale) {
    std::vector<Rat> all;
    for (const auto& chart : atlas.charts) {
        const auto bs = leg_breakpoints(atlas.k, leg, chart.domain, scale);
        all.insert(all.end(), bs.begin(), bs.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    if (scale.tau_from() > scale.tau_to()) std::reverse(all.begin(), all.end());
    return all;
}

bool in_no_chart(const Atlas& atlas, const Point& p) {
    for (const auto& c : atlas.charts)
        if (c.domain.contains(p)) return false;
    return true;
}

} // namespace

std::vector<ChainStep> build_chain(const Atlas& atlas, const Arc& arc,
                                   const std::string& start_chart) {
    if (arc.waypoints.size() < 2) throw GeometryError("invalid arc leg");
    const Point& origin = arc.waypoints.front();
    if (!atlas.find(start_chart).domain.contains(origin)) throw CoverageError(origin);

    std::vector<ChainStep> chain{{start_chart, origin}};
    std::string current = start_chart;

    for (const auto& leg : arc.legs) {
        const LegScale scale(leg);
        const auto taus = merged_breakpoints(atlas, leg, scale);
        auto pt = [&](const Rat& tau) { return point_at(atlas.k, leg.line, scale.param(tau)); };

        std::vector<Point> bounds, mids;
        for (const auto& t : taus) bounds.push_back(pt(t));
        for (std::size_t i = 0; i + 1 < taus.size(); ++i)
            mids.push_back(pt((taus[i] + taus[i + 1]) / Rat(2)));

        auto covers = [&](const Chart& c, std::size_t cell) {
            return c.domain.contains(bounds[cell]) && c.domain.contains(mids[cell]) &&
                   c.domain.contains(bounds[cell + 1]);
        };

        for (std::size_t i = 0; i < mids.size(); ++i) {
            if (covers(atlas.find(current), i)) continue;

            const Chart* best = nullptr;
            std::size_t best_reach = 0;
            for (const auto& cand : atlas.charts) {
                if (cand.name == current || !covers(cand, i)) continue;
                const Overlap* ov = atlas.overlap_for(current, cand.name);
                if (!ov || !ov->samples) continue;
                std::size_t reach = i + 1;
                while (reach < mids.size() && covers(cand, reach)) ++reach;
                if (!best || reach > best_reach) {
                    best = &cand;
                    best_reach = reach;
                }
            }
            if (!best) {
                if (in_no_chart(atlas, bounds[i])) throw CoverageError(bounds[i]);
                if (in_no_chart(atlas, mids[i])) throw CoverageError(mids[i]);
                if (in_no_chart(atlas, bounds[i + 1])) throw CoverageError(bounds[i + 1]);
                throw CoverageError(mids[i]);
            }
            chain.push_back({best->name, bounds[i]});
            current = best->name;
        }
    }
    return chain;
}

Continuation continue_along(const Atlas& atlas, const Arc& arc, const std::string& start_chart) {
    auto chain = build_chain(atlas, arc, start_chart);
    Chart current = atlas.find(chain.front().chart);
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const Overlap* ov = atlas.overlap_for(chain[i - 1].chart, chain[i].chart);
        std::vector<Point> samples = *ov->samples;
        samples.push_back(chain[i].entry);
        current = glue(current, atlas.find(chain[i].chart), samples);
    }
    const Triple endpoint_image = chart_apply(current, arc.waypoints.back());
    return Continuation{std::move(chain), std::move(current), endpoint_image};
}

Holonomy holonomy(const Atlas& atlas, const Arc& loop, const std::string& start_chart) {
    if (loop.waypoints.size() < 2 || !(loop.waypoints.front() == loop.waypoints.back()))
        throw GeometryError("loop endpoints differ");
    Continuation cont = continue_along(atlas, loop, start_chart);

    Chart around = std::move(cont.final_chart);
    if (around.name != start_chart) {
        const Overlap* ov = atlas.overlap_for(around.name, start_chart);
        if (!ov || !ov->samples) throw CoverageError(loop.waypoints.back());
        std::vector<Point> samples = *ov->samples;
        samples.push_back(loop.waypoints.back());
        around = glue(around, atlas.find(start_chart), samples);
    }

    const Chart& base = atlas.find(start_chart);
    std::vector<std::pair<Triple, Triple>> pairs;
    for (const auto& ov : atlas.overlaps) {
        if (!ov.samples || (ov.a != start_chart && ov.b != start_chart)) continue;
        for (const auto& x : *ov.samples)
            pairs.emplace_back(chart_apply(base, x), chart_apply(around, x));
    }
    pairs.emplace_back(chart_apply(base, loop.waypoints.front()),
                       chart_apply(around, loop.waypoints.front()));

    Projectivity transform = fit_projectivity(pairs);
    const bool trivial = proj_equal(transform, Projectivity::identity());
    std::vector<std::string> names;
    names.reserve(cont.chain.size());
    for (const auto& step : cont.chain) names.push_back(step.chart);
    return Holonomy{std::move(transform), trivial, std::move(names)};
}

} // namespace moulton
