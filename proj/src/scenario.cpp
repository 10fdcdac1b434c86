#include "moulton/scenario.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "moulton/json_io.hpp"
#include "moulton/sampler.hpp"

namespace moulton {

namespace {

using nlohmann::json;

Point aff(const Rat& x, const Rat& y) { return Point{Affine{x, y}}; }
Point ideal(const Rat& s) { return Point{Ideal{s}}; }

ScenarioResult finish(ScenarioResult r) {
    r.pass = std::all_of(r.checks.begin(), r.checks.end(),
                         [](const ScenarioCheck& c) { return c.ok; });
    return r;
}

/// Runs the seeded search and re-validates any witness from scratch: the
/// closure test is recomputed and all ten derived points are checked against
/// the region again.
ScenarioCheck nonclosing_check(const std::string& label, const MoultonParam& k,
                               const Region& region, long budget, std::uint64_t seed) {
    const MoultonModel m{k};
    ScenarioCheck c{label, false, json::object()};
    const auto found = find_nonclosing(m, region, budget, seed);
    if (!found) {
        c.detail["found"] = false;
        return c;
    }
    const Closure<MoultonModel> again = desargues_closes(m, found->config);
    bool in_region = region.contains(found->config.o);
    for (int i = 0; i < 3; ++i)
        in_region = in_region && region.contains(found->config.a[i]) &&
                    region.contains(found->config.b[i]);
    in_region = in_region && region.contains(again.c12) && region.contains(again.c13) &&
                region.contains(again.c23);
    c.ok = !again.closes && again.residual == found->witness.residual && in_region;
    c.detail["found"] = true;
    c.detail["all_points_in_region"] = in_region;
    c.detail["config"] = io::config_to_json(found->config);
    c.detail["closure"] = io::closure_to_json(again);
    return c;
}

ScenarioResult scenario_shrinking_boxes(const MoultonParam& k, std::uint64_t seed, long budget) {
    ScenarioResult r{"6.1", false, {}};
    if (budget <= 0) budget = 100000;
    Rat half(1);
    for (int i = 0; i <= 8; ++i) {
        const Region box = Region::box(-half, half, -half, half);
        r.checks.push_back(
            nonclosing_check("non-closing configuration inside the open box of half-width " +
                                 half.str(),
                             k, box, budget, seed + static_cast<std::uint64_t>(i)));
        half = half / Rat(2);
    }
    return finish(std::move(r));
}

ScenarioResult scenario_cylinder_holonomy(const MoultonParam& k, std::uint64_t seed,
                                          long budget) {
    ScenarioResult r{"6.3", false, {}};
    if (budget <= 0) budget = 1000;
    const Atlas atlas = builtin_atlas(k);
    for (const Chart& c : atlas.charts) {
        const VerifyResult vr = verify_chart_homomorphism(k, c, budget, seed);
        json d{{"lines_checked", vr.lines_checked}};
        if (vr.witness) d["witness_line"] = io::line_to_json(vr.witness->line);
        r.checks.push_back({"chart " + c.name + " sends lines into lines", vr.ok, d});
    }

    const Arc loop = canonical_loop(k);
    const Holonomy h = holonomy(atlas, loop, "U1");
    const Projectivity expected = Projectivity::diagonal(Rat(1) / k.k, Rat(1), Rat(1));
    const bool expect_trivial = proj_equal(expected, Projectivity::identity());
    r.checks.push_back({"loop holonomy is the diagonal class scaling x by 1/k",
                        proj_equal(h.transform, expected) && h.trivial == expect_trivial,
                        json{{"transform", io::projectivity_to_json(h.transform)},
                             {"trivial", h.trivial},
                             {"chain", h.chain}}});
    {
        const MoultonParam one{Rat(1)};
        const Holonomy h1 = holonomy(builtin_atlas(one), canonical_loop(one), "U1");
        r.checks.push_back({"the same loop at the straight parameter has trivial holonomy",
                            h1.trivial && proj_equal(h1.transform, Projectivity::identity()),
                            json{{"transform", io::projectivity_to_json(h1.transform)},
                                 {"trivial", h1.trivial}}});
    }
    {
        const Holonomy hr = holonomy(atlas, reversed(loop), "U1");
        r.checks.push_back({"the reversed loop carries the inverse holonomy",
                            proj_equal(hr.transform, h.transform.inverse()),
                            json{{"transform", io::projectivity_to_json(hr.transform)}}});
    }
    {
        const Holonomy h2 = holonomy(atlas, concat(loop, loop), "U1");
        r.checks.push_back({"the doubled loop carries the squared holonomy",
                            proj_equal(h2.transform, compose(h.transform, h.transform)),
                            json{{"transform", io::projectivity_to_json(h2.transform)}}});
    }
    return finish(std::move(r));
}

ScenarioResult scenario_two_chart_glue(const MoultonParam& k, std::uint64_t seed, long budget) {
    ScenarioResult r{"6.4", false, {}};
    if (budget <= 0) budget = 100000;
    const Atlas atlas = builtin_atlas(k);
    const Chart& u1 = atlas.find("U1");
    const Chart g2 = glue(u1, atlas.find("U2"), *atlas.overlap_for("U1", "U2")->samples);
    bool identity_transition = true;
    for (const Piece& p : g2.pieces)
        identity_transition = identity_transition && proj_equal(p.map, Projectivity::identity());
    r.checks.push_back({"the quadrant chart glues onto the half-plane chart unchanged",
                        identity_transition,
                        json{{"transition", io::projectivity_to_json(g2.pieces[0].map)}}});

    const Chart uv = union_chart(u1, g2);
    const Line witness{Graph{Rat(-1), Rat(-1)}};
    const std::array<Point, 3> pts = {aff(Rat(1), Rat(-2)), aff(Rat(2), Rat(-3)),
                                      aff(Rat(-1) / (Rat(2) * k.k), Rat(-1, 2))};
    bool placed = true;
    for (const Point& p : pts) placed = placed && mincident(k, p, witness) && uv.domain.contains(p);
    const std::array<Triple, 3> images = {chart_apply(uv, pts[0]), chart_apply(uv, pts[1]),
                                          chart_apply(uv, pts[2])};
    json pj = json::array(), ij = json::array();
    for (int i = 0; i < 3; ++i) {
        pj.push_back(io::point_to_json(pts[i]));
        ij.push_back(io::triple_to_json(images[i]));
    }
    r.checks.push_back({"a kinked line of the union domain has non-collinear glued images",
                        placed && !collinear(images[0], images[1], images[2]),
                        json{{"line", io::line_to_json(witness)}, {"points", pj}, {"images", ij}}});

    r.checks.push_back(nonclosing_check("non-closing configuration inside the union domain", k,
                                        u_union_v(), budget, seed));
    return finish(std::move(r));
}

/// Identity on its right part and below-straightening on its left part; the
/// domain wraps around the bottom of the cylinder and overlaps the two glued
/// charts in two separated components.
Chart lower_wrap_chart(const MoultonParam& k) {
    const Region dom = (Region::x_pos() & Region::box({}, {}, {}, Rat(-1))) |
                       (Region::x_neg() & Region::box({}, {}, Rat(-1), {})) |
                       Region::ideal_slope_in({}, Rat(0));
    return Chart{"W",
                 dom,
                 {{Region::x_neg(), Projectivity::diagonal(k.k, Rat(1), Rat(1))},
                  {Region::x_pos() | Region::ideal_points(), Projectivity::identity()}}};
}

ScenarioResult scenario_cover_closure(const MoultonParam& k, std::uint64_t seed, long budget) {
    ScenarioResult r{"6.5", false, {}};
    if (budget <= 0) budget = 1000;
    const Atlas atlas = builtin_atlas(k);
    const Chart& u1 = atlas.find("U1");
    const Chart g2 = glue(u1, atlas.find("U2"), *atlas.overlap_for("U1", "U2")->samples);
    bool identity_transition = true;
    for (const Piece& p : g2.pieces)
        identity_transition = identity_transition && proj_equal(p.map, Projectivity::identity());
    r.checks.push_back({"the first two charts glue consistently", identity_transition,
                        json{{"transition", io::projectivity_to_json(g2.pieces[0].map)}}});
    const Chart est = union_chart(u1, g2);

    const Chart w = lower_wrap_chart(k);
    const VerifyResult vr = verify_chart_homomorphism(k, w, budget, seed);
    r.checks.push_back({"the wrap-around chart sends lines into lines", vr.ok,
                        json{{"lines_checked", vr.lines_checked}}});

    const Region cylinder = Region::x_pos() | Region::x_neg() |
                            Region::ideal_slope_in({}, Rat(0)) |
                            Region::ideal_slope_in(Rat(0), {});
    Sampler rng(seed);
    const Window win = region_window(cylinder);
    bool covered = true;
    int sampled = 0;
    for (int i = 0; i < 200; ++i) {
        const auto p = point_in_region(rng, cylinder, win);
        if (!p) continue;
        ++sampled;
        covered = covered && (est.domain.contains(*p) || w.domain.contains(*p));
    }
    r.checks.push_back({"the glued pair and the wrap-around chart cover the cylinder", covered,
                        json{{"samples", sampled}}});

    // four aligned points pin the transition on the right component to the
    // identity; the left-component samples then contradict it unless k = 1
    const std::vector<Point> span = {aff(Rat(1), Rat(-2)),  aff(Rat(2), Rat(-2)),
                                     aff(Rat(1), Rat(-3)),  aff(Rat(3), Rat(-3)),
                                     aff(Rat(-1), Rat(-1, 2)), aff(Rat(-2), Rat(-3, 4))};
    bool raised = false;
    std::string message;
    try {
        glue(est, w, span);
    } catch (const GeometryError& e) {
        message = e.what();
        raised = message == "inconsistent correspondences";
    }
    json sj = json::array();
    for (const Point& p : span) sj.push_back(io::point_to_json(p));
    r.checks.push_back({"gluing the wrap-around chart against both overlap components is rejected",
                        raised, json{{"samples", sj}, {"error", message}}});
    return finish(std::move(r));
}

/// The continued chart over the cut cylinder, assembled by gluing the four
/// builtin charts along the sector path that avoids the removed ray.
Chart continued_on_cut(const Atlas& atlas) {
    const Region q1 = Region::x_pos() & Region::y_pos();
    Chart est{"G", q1, {{q1, Projectivity::identity()}}};
    const std::array<std::pair<const char*, const char*>, 3> hops = {
        std::pair{"U1", "U2"}, std::pair{"U2", "U3"}, std::pair{"U3", "U4"}};
    for (const auto& [prev, next] : hops) {
        const Chart g = glue(est, atlas.find(next), *atlas.overlap_for(prev, next)->samples);
        est = union_chart(est, g);
    }
    return est;
}

/// Generates piecewise-line routes inside the cut cylinder. Sectors walk the
/// path: first quadrant (0) - positive slopes (1) - left half plane (2) -
/// negative slopes (3) - fourth quadrant (4); the removed ray separates
/// sectors 4 and 0.
struct CutRouter {
    const MoultonParam& k;
    Sampler& rng;

    static int sector(const Point& p) {
        if (const auto* a = std::get_if<Affine>(&p)) {
            if (a->x.sign() < 0) return 2;
            return a->y.sign() > 0 ? 0 : 4;
        }
        return std::get<Ideal>(p).s.sign() > 0 ? 1 : 3;
    }

    Point random_in(int sec) {
        switch (sec) {
        case 0: return aff(rng.between(Rat(0), Rat(4)), rng.between(Rat(0), Rat(4)));
        case 1: return ideal(rng.between(Rat(0), Rat(4)));
        case 2: return aff(rng.between(Rat(-4), Rat(0)), rng.between(Rat(-4), Rat(4)));
        case 3: return ideal(rng.between(Rat(-4), Rat(0)));
        default: return aff(rng.between(Rat(0), Rat(4)), rng.between(Rat(-4), Rat(0)));
        }
    }

    /// Exact in-sector move: axis-aligned legs in affine sectors, a slide
    /// along the line at infinity between ideal points. No-op when equal.
    void settle(std::vector<Point>& wps, std::vector<Point>& vias, const Point& target) {
        const Point cur = wps.back();
        if (cur == target) return;
        if (const auto* ci = std::get_if<Ideal>(&cur)) {
            vias.push_back(ideal((ci->s + std::get<Ideal>(target).s) / Rat(2)));
            wps.push_back(target);
            return;
        }
        const auto& ca = std::get<Affine>(cur);
        const auto& ta = std::get<Affine>(target);
        if (ca.x != ta.x) {
            vias.push_back(aff((ca.x + ta.x) / Rat(2), ca.y));
            wps.push_back(aff(ta.x, ca.y));
        }
        if (ca.y != ta.y) {
            vias.push_back(aff(ta.x, (ca.y + ta.y) / Rat(2)));
            wps.push_back(target);
        }
    }

    /// One boundary crossing into the adjacent sector, at a fresh random
    /// point. Legs to and from ideal points ride the branch that stays in
    /// one quadrant: slope-1 exits keep y of one sign, so every leg lies in
    /// the cut cylinder in full.
    void step(std::vector<Point>& wps, std::vector<Point>& vias, int to_sec) {
        const int from_sec = sector(wps.back());
        if (from_sec == 2) {
            // leave the left half plane from the matching quadrant: lower
            // for positive slopes, upper for negative ones
            const Rat y = to_sec == 1 ? rng.between(Rat(-4), Rat(0)) : rng.between(Rat(0), Rat(4));
            settle(wps, vias, aff(rng.between(Rat(-4), Rat(0)), y));
        }
        const Point cur = wps.back();
        switch (from_sec * 10 + to_sec) {
        case 1: { // first quadrant -> positive slopes, along the right branch
            const auto& a = std::get<Affine>(cur);
            const Rat s = rng.between(Rat(0), Rat(4));
            vias.push_back(aff(a.x + Rat(1), a.y + s));
            wps.push_back(ideal(s));
            break;
        }
        case 10: {
            const Rat s = std::get<Ideal>(cur).s;
            const Point t = random_in(0);
            const auto& a = std::get<Affine>(t);
            vias.push_back(aff(a.x + Rat(1), a.y + s));
            wps.push_back(t);
            break;
        }
        case 12: { // positive slopes -> lower-left quadrant, left branch
            const Rat s = std::get<Ideal>(cur).s;
            const Point t = aff(rng.between(Rat(-4), Rat(0)), rng.between(Rat(-4), Rat(0)));
            const auto& a = std::get<Affine>(t);
            vias.push_back(aff(a.x - Rat(1), a.y - slope_left(k, s)));
            wps.push_back(t);
            break;
        }
        case 21: {
            const auto& a = std::get<Affine>(cur);
            const Rat s = rng.between(Rat(0), Rat(4));
            vias.push_back(aff(a.x - Rat(1), a.y - slope_left(k, s)));
            wps.push_back(ideal(s));
            break;
        }
        case 23: { // upper-left quadrant -> negative slopes, left branch
            const auto& a = std::get<Affine>(cur);
            const Rat s = rng.between(Rat(-4), Rat(0));
            vias.push_back(aff(a.x - Rat(1), a.y - slope_left(k, s)));
            wps.push_back(ideal(s));
            break;
        }
        case 32: {
            const Rat s = std::get<Ideal>(cur).s;
            const Point t = aff(rng.between(Rat(-4), Rat(0)), rng.between(Rat(0), Rat(4)));
            const auto& a = std::get<Affine>(t);
            vias.push_back(aff(a.x - Rat(1), a.y - slope_left(k, s)));
            wps.push_back(t);
            break;
        }
        case 34: { // negative slopes -> fourth quadrant, right branch
            const Rat s = std::get<Ideal>(cur).s;
            const Point t = random_in(4);
            const auto& a = std::get<Affine>(t);
            vias.push_back(aff(a.x + Rat(1), a.y + s));
            wps.push_back(t);
            break;
        }
        case 43: {
            const auto& a = std::get<Affine>(cur);
            const Rat s = rng.between(Rat(-4), Rat(0));
            vias.push_back(aff(a.x + Rat(1), a.y + s));
            wps.push_back(ideal(s));
            break;
        }
        default: break;
        }
    }

    /// Route from one point to another, optionally via a detour sector;
    /// random wandering inside sectors along the way.
    io::ArcSpec route(const Point& from, const Point& to, int detour) {
        std::vector<Point> wps{from};
        std::vector<Point> vias;
        int cur = sector(from);
        const auto walk_to = [&](int target_sec) {
            while (cur != target_sec) {
                const int next = cur < target_sec ? cur + 1 : cur - 1;
                if (rng.pick(0, 1) == 0) settle(wps, vias, random_in(cur));
                step(wps, vias, next);
                cur = next;
            }
        };
        if (detour >= 0) walk_to(detour);
        walk_to(sector(to));
        settle(wps, vias, to);
        return {wps, vias};
    }
};

ScenarioResult scenario_cut_cylinder(const MoultonParam& k, std::uint64_t seed, long budget) {
    ScenarioResult r{"6.6", false, {}};
    if (budget <= 0) budget = 20;
    const Region cut = cut_cylinder();
    const Atlas atlas = builtin_atlas(k);
    const Chart g = continued_on_cut(atlas);

    {
        // the fixed witness: a straight line that meets three sectors but is
        // separated by the removed ray and the removed vertical axis
        const Line witness{Graph{Rat(1), Rat(-1)}};
        const std::array<Point, 3> pts = {aff(Rat(2), Rat(1)), aff(Rat(-1), Rat(-2)),
                                          aff(Rat(1, 2), Rat(-1, 2))};
        const std::array<Point, 2> off = {aff(Rat(1), Rat(0)), aff(Rat(0), Rat(-1))};
        bool placed = true;
        for (const Point& p : pts) placed = placed && mincident(k, p, witness) && cut.contains(p);
        for (const Point& p : off) placed = placed && mincident(k, p, witness) && !cut.contains(p);
        const std::array<Triple, 3> images = {chart_apply(g, pts[0]), chart_apply(g, pts[1]),
                                              chart_apply(g, pts[2])};
        json pj = json::array(), ij = json::array(), oj = json::array();
        for (int i = 0; i < 3; ++i) {
            pj.push_back(io::point_to_json(pts[i]));
            ij.push_back(io::triple_to_json(images[i]));
        }
        for (const Point& p : off) oj.push_back(io::point_to_json(p));
        r.checks.push_back({"a line disconnected by the cuts has non-collinear continued images",
                            placed && !collinear(images[0], images[1], images[2]),
                            json{{"line", io::line_to_json(witness)},
                                 {"points", pj},
                                 {"images", ij},
                                 {"separating_points_outside", oj}}});
    }

    Sampler rng(seed);
    CutRouter router{k, rng};
    const std::array<const char*, 5> start_of = {"U1", "U2", "U3", "U4", "U1"};
    const Projectivity unwind = Projectivity::diagonal(k.k, Rat(1), Rat(1));
    bool all_ok = true;
    long agreed = 0;
    json first;
    for (long i = 0; i < budget; ++i) {
        const Point p0 = router.random_in(static_cast<int>(rng.pick(0, 4)));
        Point p1 = router.random_in(static_cast<int>(rng.pick(0, 4)));
        while (p1 == p0) p1 = router.random_in(static_cast<int>(rng.pick(0, 4)));
        const io::ArcSpec sa = router.route(p0, p1, -1);
        const io::ArcSpec sb = router.route(p0, p1, static_cast<int>(rng.pick(0, 4)));
        const Arc a = make_arc(k, sa.waypoints, sa.vias);
        const Arc b = make_arc(k, sb.waypoints, sb.vias);
        bool inside = true;
        for (const Arc* arc : {&a, &b}) {
            for (const Leg& leg : arc->legs) inside = inside && leg_in_region(k, leg, cut);
            for (const Point& w : arc->waypoints) inside = inside && cut.contains(w);
        }
        const std::string start = start_of[static_cast<size_t>(CutRouter::sector(p0))];
        const Continuation ca = continue_along(atlas, a, start);
        const Continuation cb = continue_along(atlas, b, start);
        // oracle: the assembled chart above, corrected when the start germ
        // sits on its straightened side
        Triple expect = chart_apply(g, p1);
        if (CutRouter::sector(p0) >= 3) expect = unwind.apply(expect);
        const bool ok =
            inside && ca.endpoint_image == cb.endpoint_image && ca.endpoint_image == expect;
        all_ok = all_ok && ok;
        if (ok) ++agreed;
        if (i == 0)
            first = json{{"arc", io::arc_to_json(sa)},
                         {"alternate", io::arc_to_json(sb)},
                         {"endpoint_image", io::triple_to_json(ca.endpoint_image)}};
    }
    r.checks.push_back({"homotopic arc pairs continue to identical endpoint images", all_ok,
                        json{{"pairs", budget}, {"agreed", agreed}, {"first", first}}});
    return finish(std::move(r));
}

} // namespace

Arc canonical_loop(const MoultonParam& k) {
    // the via of the outbound kinked leg is read off the joining line, so
    // the same waypoints work for every parameter
    const Point via4 =
        point_at(k, mjoin(k, aff(Rat(-1), Rat(1)), ideal(Rat(-1))), LineParam::at(Rat(-2)));
    const std::vector<Point> wps = {aff(Rat(1), Rat(1)),  ideal(Rat(1)),
                                    aff(Rat(-1), Rat(-1)), aff(Rat(-1), Rat(1)),
                                    ideal(Rat(-1)),        aff(Rat(2), Rat(-3)),
                                    aff(Rat(2), Rat(2)),   aff(Rat(1), Rat(1))};
    const std::vector<Point> vias = {aff(Rat(2), Rat(2)),  aff(Rat(-2), Rat(-2)),
                                     aff(Rat(-1), Rat(0)), via4,
                                     aff(Rat(3), Rat(-4)), aff(Rat(2), Rat(0)),
                                     aff(Rat(3, 2), Rat(3, 2))};
    return make_arc(k, wps, vias);
}

Region u_union_v() {
    return Region::x_pos() | (Region::x_neg() & Region::y_neg()) |
           Region::ideal_slope_in(Rat(0), {});
}

Region cut_cylinder() {
    return Region::not_on_ray() &
           (Region::x_pos() | Region::x_neg() | Region::ideal_slope_in({}, Rat(0)) |
            Region::ideal_slope_in(Rat(0), {}));
}

const std::vector<std::string>& scenario_ids() {
    static const std::vector<std::string> ids = {"6.1", "6.3", "6.4", "6.5", "6.6"};
    return ids;
}

ScenarioResult run_scenario(const std::string& id, const MoultonParam& k, std::uint64_t seed,
                            long budget) {
    if (id == "6.1") return scenario_shrinking_boxes(k, seed, budget);
    if (id == "6.3") return scenario_cylinder_holonomy(k, seed, budget);
    if (id == "6.4") return scenario_two_chart_glue(k, seed, budget);
    if (id == "6.5") return scenario_cover_closure(k, seed, budget);
    if (id == "6.6") return scenario_cut_cylinder(k, seed, budget);
    throw GeometryError("unknown scenario");
}

} // namespace moulton
