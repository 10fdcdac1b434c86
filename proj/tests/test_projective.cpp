#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "moulton/projective.hpp"
#include "moulton/sampler.hpp"
#include "testers.hpp"

using namespace moulton;
using testers::rand_triple;

TEST_CASE("triples canonicalize to coprime entries with a positive leading sign") {
    CHECK(Triple::point(Rat(2), Rat(4), Rat(6)) == Triple::point(Rat(1), Rat(2), Rat(3)));
    CHECK(Triple::point(Rat(-1), Rat(2), Rat(0)) == Triple::point(Rat(1), Rat(-2), Rat(0)));
    CHECK(Triple::point(Rat(1, 2), Rat(1, 3), Rat(0)) == Triple::point(Rat(3), Rat(2), Rat(0)));
    CHECK(Triple::point(Rat(0), Rat(-3), Rat(6)) == Triple::point(Rat(0), Rat(1), Rat(-2)));
    CHECK(Triple::point(Rat(3), Rat(2), Rat(0)).str() == "(3:2:0)");
    CHECK(Triple::point(Rat(1), Rat(0), Rat(0)) != Triple::line(Rat(1), Rat(0), Rat(0)));
    CHECK_THROWS_AS(Triple::point(Rat(0), Rat(0), Rat(0)), GeometryError);
}

TEST_CASE("join and meet reproduce the reference pairs and reject degeneracies") {
    const Triple p = Triple::point(Rat(1), Rat(0), Rat(1));
    const Triple q = Triple::point(Rat(0), Rat(1), Rat(1));
    const Triple l = pjoin(p, q);
    CHECK(l == Triple::line(Rat(-1), Rat(-1), Rat(1)));
    CHECK(pincident(p, l));
    CHECK(pincident(q, l));

    CHECK(pjoin(Triple::point(Rat(1), Rat(0), Rat(0)), Triple::point(Rat(0), Rat(1), Rat(0))) ==
          Triple::line(Rat(0), Rat(0), Rat(1)));
    CHECK_THROWS_WITH_AS(pjoin(p, p), "degenerate join", GeometryError);

    CHECK(pmeet(Triple::line(Rat(1), Rat(0), Rat(0)), Triple::line(Rat(0), Rat(1), Rat(0))) ==
          Triple::point(Rat(0), Rat(0), Rat(1)));
    CHECK(pmeet(Triple::line(Rat(-1), Rat(-1), Rat(1)), Triple::line(Rat(0), Rat(0), Rat(1))) ==
          Triple::point(Rat(1), Rat(-1), Rat(0)));
    CHECK_THROWS_WITH_AS(pmeet(l, l), "degenerate meet", GeometryError);
}

TEST_CASE("incidence and collinearity are exact sign tests") {
    const Triple l = Triple::line(Rat(-1), Rat(-1), Rat(1));
    CHECK_FALSE(pincident(Triple::point(Rat(1), Rat(1), Rat(1)), l));
    CHECK(pincident(Triple::point(Rat(1), Rat(0), Rat(1)), l));

    const Triple a = Triple::point(Rat(1), Rat(0), Rat(1));
    CHECK(collinear(a, a, a));
    CHECK(collinear(a, Triple::point(Rat(0), Rat(1), Rat(1)), Triple::point(Rat(2), Rat(-1), Rat(1))));
    CHECK_FALSE(collinear(a, Triple::point(Rat(0), Rat(1), Rat(1)), Triple::point(Rat(1), Rat(1), Rat(1))));
    CHECK(det3(a, Triple::point(Rat(0), Rat(1), Rat(1)), Triple::point(Rat(2), Rat(-1), Rat(1))) ==
          Rat(0));
}

TEST_CASE("random joins stay incident and duality recovers the original point") {
    Sampler s(7);
    int done = 0;
    while (done < 500) {
        const Triple p = rand_triple(s, TripleKind::Point);
        const Triple q = rand_triple(s, TripleKind::Point);
        const Triple r = rand_triple(s, TripleKind::Point);
        if (p == q || p == r || q == r || collinear(p, q, r)) continue;
        const Triple l = pjoin(p, q);
        REQUIRE(pincident(p, l));
        REQUIRE(pincident(q, l));
        REQUIRE(pmeet(pjoin(p, q), pjoin(p, r)) == p);
        ++done;
    }
}

namespace {

std::optional<Projectivity> rand_projectivity(Sampler& s) {
    std::array<std::array<Rat, 3>, 3> m;
    for (auto& row : m)
        for (auto& v : row) v = s.rat(3, 2);
    try {
        return Projectivity(m);
    } catch (const GeometryError&) {
        return std::nullopt;
    }
}

} // namespace

TEST_CASE("fitting recovers the identity, diagonal maps, and rejects bad input") {
    const Triple e1 = Triple::point(Rat(1), Rat(0), Rat(0));
    const Triple e2 = Triple::point(Rat(0), Rat(1), Rat(0));
    const Triple e3 = Triple::point(Rat(0), Rat(0), Rat(1));
    const Triple e4 = Triple::point(Rat(1), Rat(1), Rat(1));

    CHECK(fit_projectivity({{e1, e1}, {e2, e2}, {e3, e3}, {e4, e4}}) == Projectivity::identity());

    const Projectivity stretch = Projectivity::diagonal(Rat(2), Rat(1), Rat(1));
    std::vector<std::pair<Triple, Triple>> pairs;
    for (const auto& src : {e1, e2, e3, e4, Triple::point(Rat(2), Rat(3), Rat(1))})
        pairs.emplace_back(src, stretch.apply(src));
    CHECK(proj_equal(fit_projectivity(pairs), stretch));

    // only four sources and three of them collinear: no usable frame
    const Triple mid = Triple::point(Rat(1), Rat(1), Rat(0));
    CHECK_THROWS_WITH_AS(fit_projectivity({{e1, e1}, {e2, e2}, {mid, mid}, {e3, e3}}),
                         "insufficient general position", GeometryError);
    CHECK_THROWS_WITH_AS(fit_projectivity({{e1, e1}, {e2, e2}, {e3, e3}}),
                         "insufficient general position", GeometryError);

    // a fifth pair no projectivity can also satisfy
    CHECK_THROWS_WITH_AS(
        fit_projectivity({{e1, e1},
                          {e2, e2},
                          {e3, e3},
                          {e4, e4},
                          {Triple::point(Rat(2), Rat(3), Rat(1)), Triple::point(Rat(3), Rat(2), Rat(1))}}),
        "inconsistent correspondences", GeometryError);
}

TEST_CASE("fitting reproduces every input pair of a true projectivity") {
    Sampler s(11);
    int done = 0;
    while (done < 60) {
        const auto t = rand_projectivity(s);
        if (!t) continue;
        std::vector<std::pair<Triple, Triple>> pairs;
        std::vector<Triple> srcs;
        for (int i = 0; i < 7; ++i) {
            Triple src = rand_triple(s, TripleKind::Point);
            bool dup = false;
            for (const auto& prev : srcs) dup = dup || prev == src;
            if (dup) continue;
            srcs.push_back(src);
            pairs.emplace_back(src, t->apply(src));
        }
        try {
            const Projectivity fitted = fit_projectivity(pairs);
            REQUIRE(proj_equal(fitted, *t));
            for (const auto& [src, dst] : pairs) REQUIRE(fitted.apply(src) == dst);
            ++done;
        } catch (const GeometryError& e) {
            // the random sources may genuinely lack a frame; never inconsistent
            REQUIRE(std::string(e.what()) == "insufficient general position");
        }
    }
}

TEST_CASE("composition, inversion, and application obey the group laws") {
    const Triple p = Triple::point(Rat(2), Rat(-3), Rat(1));
    CHECK(Projectivity::identity().apply(p) == p);
    CHECK(Projectivity::diagonal(Rat(2), Rat(1), Rat(1)) ==
          Projectivity::diagonal(Rat(4), Rat(2), Rat(2)));

    Sampler s(13);
    int done = 0;
    while (done < 40) {
        const auto a = rand_projectivity(s);
        const auto b = rand_projectivity(s);
        const auto c = rand_projectivity(s);
        if (!a || !b || !c) continue;
        CHECK(proj_equal(compose(*a, a->inverse()), Projectivity::identity()));
        CHECK(proj_equal(compose(compose(*a, *b), *c), compose(*a, compose(*b, *c))));
        const Triple q = rand_triple(s, TripleKind::Point);
        CHECK(compose(*a, *b).apply(q) == b->apply(a->apply(q)));
        ++done;
    }
}
