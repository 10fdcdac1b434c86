#include "moulton/atlas.hpp"

#include "moulton/errors.hpp"

namespace moulton {

const Chart& Atlas::find(const std::string& name) const {
    for (const auto& c : charts)
        if (c.name == name) return c;
    throw GeometryError("unknown chart");
}

const Overlap* Atlas::overlap_for(const std::string& a, const std::string& b) const {
    for (const auto& ov : overlaps)
        if ((ov.a == a && ov.b == b) || (ov.a == b && ov.b == a)) return &ov;
    return nullptr;
}

Atlas builtin_atlas(const MoultonParam& k) {
    const Region q1 = Region::x_pos() & Region::y_pos();
    const Region q2 = Region::x_neg() & Region::y_pos();
    const Region q3 = Region::x_neg() & Region::y_neg();
    const Region q4 = Region::x_pos() & Region::y_neg();
    const Region idl_pos = Region::ideal_slope_in(Rat(0), std::nullopt);
    const Region idl_neg = Region::ideal_slope_in(std::nullopt, Rat(0));

    const Projectivity id = Projectivity::identity();
    Atlas atlas{k, {}, {}};

    atlas.charts.push_back({"U1", Region::x_pos(), {{Region::x_pos(), id}}});

    const Region dom2 = q1 | q3 | idl_pos;
    atlas.charts.push_back({"U2", dom2, {{dom2, id}}});

    atlas.charts.push_back({"U3", Region::x_neg(), {{Region::x_neg(), id}}});

    const Region dom4 = q2 | q4 | idl_neg;
    atlas.charts.push_back({"U4",
                            dom4,
                            {{Region::x_neg(), Projectivity::diagonal(k.k, Rat(1), Rat(1))},
                             {Region::x_pos() | Region::ideal_points(), id}}});

    auto quadrant_samples = [](int sx, int sy) {
        std::vector<Point> pts;
        for (const auto& [x, y] : {std::pair{1L, 1L}, {2L, 1L}, {1L, 2L}, {2L, 3L}, {3L, 5L}})
            pts.push_back(Affine{Rat(sx * x), Rat(sy * y)});
        return pts;
    };
    atlas.overlaps.push_back({"U1", "U2", quadrant_samples(1, 1)});
    atlas.overlaps.push_back({"U2", "U3", quadrant_samples(-1, -1)});
    atlas.overlaps.push_back({"U3", "U4", quadrant_samples(-1, 1)});
    atlas.overlaps.push_back({"U4", "U1", quadrant_samples(1, -1)});
    atlas.overlaps.push_back({"U1", "U3", std::nullopt});
    atlas.overlaps.push_back({"U2", "U4", std::nullopt});
    return atlas;
}

void validate_atlas(const Atlas& atlas, long chart_budget, std::uint64_t seed) {
    for (const auto& chart : atlas.charts) {
        const VerifyResult v = verify_chart_homomorphism(atlas.k, chart, chart_budget, seed);
        if (!v.ok) throw GeometryError("chart is not a local homomorphism");
    }
    for (const auto& ov : atlas.overlaps) {
        if (!ov.samples) continue;
        if (ov.samples->size() < 5) throw GeometryError("overlap sample too small");
        const Chart &ca = atlas.find(ov.a), &cb = atlas.find(ov.b);
        std::vector<std::pair<Triple, Triple>> frame;
        for (const auto& x : *ov.samples) {
            if (!ca.domain.contains(x) || !cb.domain.contains(x))
                throw GeometryError("overlap sample outside chart domains");
            const Triple img = chart_apply(ca, x);
            frame.emplace_back(img, img);
        }
        fit_projectivity(frame); // demands 4 images in general position
    }
}

} // namespace moulton
