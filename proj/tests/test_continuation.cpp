#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moulton/continuation.hpp"

using namespace moulton;

namespace {

const MoultonParam K2{Rat(2)};

Point aff(int x, int y) { return Affine{Rat(x), Rat(y)}; }
Point affq(const Rat& x, const Rat& y) { return Affine{x, y}; }

/// Once around the cylinder: out to the slope-1 direction, back along the
/// third quadrant, across to the second quadrant, out to the slope -1
/// direction, down the fourth quadrant, and home through the first.
Arc cylinder_loop(const MoultonParam& k) {
    const std::vector<Point> wps = {
        aff(1, 1),           Point{Ideal{Rat(1)}}, aff(-1, -1), aff(-1, 1),
        Point{Ideal{Rat(-1)}}, aff(2, -3),          aff(2, 2),   aff(1, 1),
    };
    // the outbound leg to Ideal(-1) runs on a kinked line, so its via point
    // is read off that line rather than hardcoded (the left branch bends with k)
    const Point via4 =
        point_at(k, mjoin(k, aff(-1, 1), Point{Ideal{Rat(-1)}}), LineParam::at(Rat(-2)));
    const std::vector<Point> vias = {
        aff(2, 2), aff(-2, -2), aff(-1, 0), via4, aff(3, -4), aff(2, 0),
        affq(Rat(3, 2), Rat(3, 2)),
    };
    return make_arc(k, wps, vias);
}

std::vector<std::string> names(const std::vector<ChainStep>& chain) {
    std::vector<std::string> out;
    for (const auto& s : chain) out.push_back(s.chart);
    return out;
}

} // namespace

TEST_CASE("an arc inside one chart never leaves it") {
    const Atlas atlas = builtin_atlas(K2);
    const Arc a = make_arc(K2, {aff(1, 1), aff(3, 1), aff(3, 4)},
                           {aff(2, 1), aff(3, 2)});
    const auto chain = build_chain(atlas, a, "U1");
    REQUIRE(chain.size() == 1);
    CHECK(chain[0].chart == "U1");
    CHECK(chain[0].entry == aff(1, 1));

    const Continuation c = continue_along(atlas, a, "U1");
    CHECK(c.endpoint_image == Triple::point(Rat(3), Rat(4), Rat(1)));
    CHECK(proj_equal(c.final_chart.pieces[0].map, Projectivity::identity()));
}

TEST_CASE("the cylinder loop walks all four charts in order") {
    const Atlas atlas = builtin_atlas(K2);
    const auto chain = build_chain(atlas, cylinder_loop(K2), "U1");
    CHECK(names(chain) ==
          std::vector<std::string>{"U1", "U2", "U3", "U4", "U1"});
    // every handoff point lies in both neighboring domains
    for (size_t i = 1; i < chain.size(); ++i) {
        const Point& e = chain[i].entry;
        CHECK(atlas.find(chain[i - 1].chart).domain.contains(e));
        CHECK(atlas.find(chain[i].chart).domain.contains(e));
    }
}

TEST_CASE("continuation around the cylinder shifts the first coordinate") {
    const Atlas atlas = builtin_atlas(K2);
    const Continuation c = continue_along(atlas, cylinder_loop(K2), "U1");
    CHECK(c.endpoint_image == Triple::point(Rat(1, 2), Rat(1), Rat(1)));

    const Holonomy h = holonomy(atlas, cylinder_loop(K2), "U1");
    CHECK_FALSE(h.trivial);
    CHECK(proj_equal(h.transform, Projectivity::diagonal(Rat(1, 2), Rat(1), Rat(1))));
    CHECK(names(build_chain(atlas, cylinder_loop(K2), "U1")) == h.chain);
}

TEST_CASE("the obstruction vanishes exactly at the classical parameter") {
    const MoultonParam k1{Rat(1)};
    const Atlas atlas = builtin_atlas(k1);
    const Holonomy h = holonomy(atlas, cylinder_loop(k1), "U1");
    CHECK(h.trivial);
    CHECK(proj_equal(h.transform, Projectivity::identity()));
}

TEST_CASE("reversal inverts and doubling squares the loop transform") {
    const Atlas atlas = builtin_atlas(K2);
    const Arc loop = cylinder_loop(K2);
    const Holonomy fwd = holonomy(atlas, loop, "U1");
    const Holonomy bwd = holonomy(atlas, reversed(loop), "U1");
    CHECK(proj_equal(compose(fwd.transform, bwd.transform), Projectivity::identity()));
    CHECK(proj_equal(bwd.transform, fwd.transform.inverse()));

    const Holonomy twice = holonomy(atlas, concat(loop, loop), "U1");
    CHECK(proj_equal(twice.transform, compose(fwd.transform, fwd.transform)));
    CHECK(proj_equal(twice.transform, Projectivity::diagonal(Rat(1, 4), Rat(1), Rat(1))));
}

TEST_CASE("a small null-homotopic loop keeps the identity") {
    const Atlas atlas = builtin_atlas(K2);
    const Arc square = make_arc(
        K2, {aff(1, 1), aff(3, 1), aff(3, 3), aff(1, 3), aff(1, 1)},
        {aff(2, 1), aff(3, 2), aff(2, 3), aff(1, 2)});
    const Holonomy h = holonomy(atlas, square, "U1");
    CHECK(h.trivial);
}

TEST_CASE("leaving the covered cylinder reports the exact exit point") {
    const Atlas atlas = builtin_atlas(K2);
    // straight run from (-1,5) to (1,5) must pass through (0,5): no chart there
    const Arc bad = make_arc(K2, {aff(-1, 5), aff(1, 5)}, {aff(0, 5)});
    CHECK_THROWS_AS(build_chain(atlas, bad, "U3"), CoverageError);
    try {
        build_chain(atlas, bad, "U3");
        FAIL("expected CoverageError");
    } catch (const CoverageError& e) {
        CHECK(e.exit_point == aff(0, 5));
        CHECK(std::string(e.what()) == "arc leaves atlas coverage");
    }

    // an arc that starts outside its claimed start chart fails immediately
    CHECK_THROWS_AS(build_chain(atlas, bad, "U1"), CoverageError);
}

TEST_CASE("loops must close and start charts must exist") {
    const Atlas atlas = builtin_atlas(K2);
    const Arc open_arc = make_arc(K2, {aff(1, 1), aff(2, 2)}, {affq(Rat(3, 2), Rat(3, 2))});
    CHECK_THROWS_WITH_AS(holonomy(atlas, open_arc, "U1"), "loop endpoints differ",
                         GeometryError);
    CHECK_THROWS_WITH_AS(build_chain(atlas, open_arc, "U9"), "unknown chart", GeometryError);
}
