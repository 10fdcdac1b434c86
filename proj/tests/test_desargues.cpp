#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moulton/arc.hpp"
#include "moulton/desargues.hpp"
#include "moulton/sampler.hpp"
#include "testers.hpp"

using namespace moulton;

namespace {

const MoultonModel M2{MoultonParam{Rat(2)}};
const MoultonModel M1{MoultonParam{Rat(1)}};

Point aff(int x, int y) { return Affine{Rat(x), Rat(y)}; }
Point affq(const Rat& x, const Rat& y) { return Affine{x, y}; }

/// Perspective triangles built from a center, three directions, and a
/// parameter pair per ray.
DConfig<Point> rays_config(const MoultonModel& m, const Point& o,
                           const std::array<Point, 3>& dirs,
                           const std::array<std::pair<Rat, Rat>, 3>& params) {
    DConfig<Point> cfg{o, {}, {}};
    for (int i = 0; i < 3; ++i) {
        const Line l = mjoin(m.k, o, dirs[i]);
        cfg.a[i] = point_at(m.k, l, LineParam::at(params[i].first));
        cfg.b[i] = point_at(m.k, l, LineParam::at(params[i].second));
    }
    return cfg;
}

} // namespace

TEST_CASE("configurations close in the classical plane, exactly") {
    Sampler s(47);
    int done = 0;
    while (done < 300) {
        // center plus three rays and two points per ray, all in homogeneous form
        const Triple o = Triple::point(s.rat(4, 3), s.rat(4, 3), Rat(1));
        std::vector<Triple> a, b;
        bool bad = false;
        for (int i = 0; i < 3 && !bad; ++i) {
            try {
                const Triple d = Triple::point(s.rat(4, 3), s.rat(4, 3), Rat(1));
                // two more points on the ray as o + t*d, projectively
                auto on_ray = [&](const Rat& t) {
                    return Triple::point(Rat(o[0]) + t * Rat(d[0]), Rat(o[1]) + t * Rat(d[1]),
                                         Rat(o[2]) + t * Rat(d[2]));
                };
                a.push_back(on_ray(s.rat(3, 2)));
                b.push_back(on_ray(s.rat(3, 2)));
            } catch (const GeometryError&) {
                bad = true;
            }
        }
        if (bad) continue;
        const DConfig<Triple> cfg{o, {a[0], a[1], a[2]}, {b[0], b[1], b[2]}};
        try {
            const auto cl = desargues_closes(ClassicalModel{}, cfg);
            REQUIRE(cl.closes);
            REQUIRE(cl.residual == Rat(0));
            ++done;
        } catch (const GeometryError&) {
            // degenerate draw; try again
        }
    }
}

TEST_CASE("the straightened model closes every valid configuration") {
    Sampler s(53);
    const Window w{Rat(-4), Rat(4), Rat(-4), Rat(4)};
    int done = 0;
    while (done < 200) {
        const Point o = affine_in(s, w);
        const std::array<Point, 3> dirs = {affine_in(s, w), affine_in(s, w), affine_in(s, w)};
        std::array<std::pair<Rat, Rat>, 3> params;
        for (auto& pr : params) pr = {s.between(Rat(-4), Rat(4)), s.between(Rat(-4), Rat(4))};
        try {
            const DConfig<Point> cfg = rays_config(M1, o, dirs, params);
            const auto cl = desargues_closes(M1, cfg);
            REQUIRE(cl.closes);
            ++done;
        } catch (const GeometryError&) {
        }
    }
}

TEST_CASE("a configuration clear of the kink closes even in the bent plane") {
    // everything happens at x > 0 where the plane is classical
    const DConfig<Point> cfg = rays_config(
        M2, aff(3, 3), {aff(4, 3), aff(4, 4), aff(3, 4)},
        {{std::pair<Rat, Rat>{Rat(5), Rat(6)}, {Rat(5), Rat(6)}, {Rat(4), Rat(5)}}});
    const auto cl = desargues_closes(M2, cfg);
    CHECK(cl.closes);
    CHECK(cl.residual == Rat(0));
}

TEST_CASE("the frozen witness straddling the kink fails to close") {
    const DConfig<Point> cfg{
        affq(Rat(3, 4), Rat(1, 4)),
        {affq(Rat(-1, 4), Rat(3, 4)), affq(Rat(-1, 2), Rat(1, 4)), affq(Rat(1, 4), Rat(1, 2))},
        {affq(Rat(1, 4), Rat(9, 20)), affq(Rat(-3, 4), Rat(1, 4)), affq(Rat(-1, 4), Rat(7, 8))}};
    const auto cl = desargues_closes(M2, cfg);
    CHECK_FALSE(cl.closes);
    CHECK(cl.residual != Rat(0));
    REQUIRE(cl.axis.has_value());
    CHECK(M2.incident(cl.c12, *cl.axis));
    CHECK(M2.incident(cl.c13, *cl.axis));
    CHECK_FALSE(M2.incident(cl.c23, *cl.axis));
}

TEST_CASE("validation rejects coincident, misaligned, and collinear input") {
    DConfig<Point> cfg = rays_config(M2, aff(3, 3), {aff(4, 3), aff(4, 4), aff(3, 4)},
                                     {{std::pair<Rat, Rat>{Rat(5), Rat(6)}, {Rat(5), Rat(6)},
                                       {Rat(4), Rat(5)}}});
    DConfig<Point> dup = cfg;
    dup.b[1] = dup.a[1];
    CHECK_THROWS_WITH_AS(desargues_closes(M2, dup), "degenerate configuration", GeometryError);

    DConfig<Point> off = cfg;
    off.b[0] = aff(9, 9); // not on the ray through o and a[0]
    CHECK_THROWS_WITH_AS(desargues_closes(M2, off), "degenerate configuration", GeometryError);

    // collinear triangle: all three corners on one line
    DConfig<Point> flat = cfg;
    flat.a[0] = aff(1, 1);
    flat.a[1] = aff(2, 2);
    flat.a[2] = aff(4, 4);
    CHECK_THROWS_WITH_AS(desargues_closes(M2, flat), "degenerate configuration", GeometryError);
}

TEST_CASE("residuals are zero exactly on incidence") {
    Sampler s(59);
    int done = 0;
    while (done < 400) {
        const Point p = testers::rand_point(s);
        const Line l = testers::rand_line(s);
        REQUIRE((M2.residual(p, l) == Rat(0)) == M2.incident(p, l));
        ++done;
    }
    CHECK(M2.residual(aff(-1, 3), Line{Graph{Rat(-1), Rat(1)}}) == Rat(0));
    CHECK(M2.residual(aff(-1, 2), Line{Graph{Rat(-1), Rat(1)}}) == Rat(-1));
}

TEST_CASE("the verdict is equivariant under plane automorphisms") {
    const Automorphism phi{Rat(1, 2), Rat(3), Rat(-1)};
    const DConfig<Point> cfg{
        affq(Rat(3, 4), Rat(1, 4)),
        {affq(Rat(-1, 4), Rat(3, 4)), affq(Rat(-1, 2), Rat(1, 4)), affq(Rat(1, 4), Rat(1, 2))},
        {affq(Rat(1, 4), Rat(9, 20)), affq(Rat(-3, 4), Rat(1, 4)), affq(Rat(-1, 4), Rat(7, 8))}};
    DConfig<Point> moved{phi.apply(cfg.o), {}, {}};
    for (int i = 0; i < 3; ++i) {
        moved.a[i] = phi.apply(cfg.a[i]);
        moved.b[i] = phi.apply(cfg.b[i]);
    }
    const auto before = desargues_closes(M2, cfg);
    const auto after = desargues_closes(M2, moved);
    CHECK(before.closes == after.closes);
    CHECK(after.c12 == phi.apply(before.c12));
    CHECK(after.c13 == phi.apply(before.c13));
    CHECK(after.c23 == phi.apply(before.c23));
}

TEST_CASE("the search finds kink-straddling witnesses and honors regions") {
    const Region unit_box = Region::box(Rat(-1), Rat(1), Rat(-1), Rat(1));
    const auto hit = find_nonclosing(M2, unit_box, 100000, 1);
    REQUIRE(hit.has_value());
    CHECK_FALSE(hit->witness.closes);
    // re-verify from scratch and check containment of all ten points
    const auto again = desargues_closes(M2, hit->config);
    CHECK_FALSE(again.closes);
    CHECK(again.residual == hit->witness.residual);
    for (const Point& p : {hit->config.o, hit->config.a[0], hit->config.a[1], hit->config.a[2],
                           hit->config.b[0], hit->config.b[1], hit->config.b[2],
                           hit->witness.c12, hit->witness.c13, hit->witness.c23})
        CHECK(unit_box.contains(p));
}

TEST_CASE("shrinking boxes around the corner keep producing witnesses") {
    Rat r(1);
    for (int i = 0; i < 9; ++i) {
        const Region box = Region::box(-r, r, -r, r);
        const auto hit = find_nonclosing(M2, box, 100000, 1);
        REQUIRE(hit.has_value());
        CHECK_FALSE(desargues_closes(M2, hit->config).closes);
        r = r / Rat(2);
    }
}

TEST_CASE("away from the kink the search reports absence as a value") {
    // the right half plane is classical: nothing to find
    const Region right = Region::box(Rat(1), Rat(3), Rat(-1), Rat(1));
    CHECK_FALSE(find_nonclosing(M2, right, 4000, 1).has_value());
    // with multiplier one nothing straddles anything
    CHECK_FALSE(find_nonclosing(M1, Region::box(Rat(-1), Rat(1), Rat(-1), Rat(1)), 4000, 1)
                    .has_value());
}
