#include "moulton/sampler.hpp"

namespace moulton {

long Sampler::pick(long lo, long hi) {
    const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(bits() % width);
}

Rat Sampler::rat(long span, long max_den) {
    const long d = pick(1, max_den);
    const long n = pick(-span * d, span * d);
    return Rat(n, d);
}

Rat Sampler::between(const Rat& lo, const Rat& hi, long grid) {
    const long j = pick(1, grid - 1);
    return lo + (hi - lo) * Rat(j, grid);
}

Window region_window(const Region& r) {
    Bound x_lo, x_hi, y_lo, y_hi;
    bool seen_box = false;
    r.for_each_atom([&](const auto& leaf) {
        const auto* b = std::get_if<Region::Box>(&leaf);
        if (!b) return;
        auto widen = [first = !seen_box](Bound& acc, const Bound& side, bool lower) {
            if (!side) {
                acc.reset();
            } else if (first) {
                acc = side;
            } else if (acc) {
                acc = lower ? min(*acc, *side) : max(*acc, *side);
            }
        };
        widen(x_lo, b->x_lo, true);
        widen(x_hi, b->x_hi, false);
        widen(y_lo, b->y_lo, true);
        widen(y_hi, b->y_hi, false);
        seen_box = true;
    });
    const Rat four(4);
    return Window{x_lo.value_or(-four), x_hi.value_or(four), y_lo.value_or(-four),
                  y_hi.value_or(four)};
}

Affine affine_in(Sampler& s, const Window& w) {
    return Affine{s.between(w.x_lo, w.x_hi), s.between(w.y_lo, w.y_hi)};
}

std::optional<Point> point_in_region(Sampler& s, const Region& r, const Window& w, int tries) {
    for (int i = 0; i < tries; ++i) {
        Point p = s.bits() % 8 == 0 ? Point(Ideal{s.rat(4, 8)}) : Point(affine_in(s, w));
        if (r.contains(p)) return p;
    }
    return std::nullopt;
}

} // namespace moulton
