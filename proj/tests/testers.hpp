#pragma once

#include "moulton/moulton.hpp"
#include "moulton/sampler.hpp"

namespace moulton::testers {

inline Triple rand_triple(Sampler& s, TripleKind kind) {
    for (;;) {
        const Rat a = s.rat(6, 4), b = s.rat(6, 4), c = s.rat(6, 4);
        if (a.is_zero() && b.is_zero() && c.is_zero()) continue;
        return Triple(kind, a, b, c);
    }
}

inline Point rand_point(Sampler& s) {
    switch (s.bits() % 8) {
    case 0: return Ideal{s.rat(5, 3)};
    case 1: return IdealVertical{};
    default: return Affine{s.rat(5, 3), s.rat(5, 3)};
    }
}

inline Line rand_line(Sampler& s) {
    switch (s.bits() % 8) {
    case 0: return Vertical{s.rat(5, 3)};
    case 1: return LineAtInfinity{};
    default: return Graph{s.rat(4, 3), s.rat(5, 3)};
    }
}

} // namespace moulton::testers
