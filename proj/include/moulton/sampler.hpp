#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "moulton/region.hpp"

namespace moulton {

/// Deterministic pseudorandom source. Only raw mt19937_64 words are consumed
/// (their bit stream is pinned by the standard) and all reductions are done
/// by hand, so a seed produces the same values on every platform and
/// standard library.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t bits() { return eng_(); }

    /// Integer in [lo, hi], both inclusive.
    long pick(long lo, long hi);

    /// Rational n/d with n in [-span*d, span*d] and d in [1, max_den].
    Rat rat(long span, long max_den);

    /// Interior grid point lo + (hi-lo)*j/grid, 0 < j < grid.
    Rat between(const Rat& lo, const Rat& hi, long grid = 64);

private:
    std::mt19937_64 eng_;
};

/// Axis-aligned affine sampling window.
struct Window {
    Rat x_lo, x_hi, y_lo, y_hi;
};

/// Window adapted to a region: the extent of its box atoms where bounded,
/// [-4,4] per axis otherwise.
Window region_window(const Region& r);

/// Affine point with both coordinates on the window's 64-grid.
Affine affine_in(Sampler& s, const Window& w);

/// Rejection-samples a point of the region: affine candidates from the
/// window plus occasional ideal points. Empty when `tries` runs out.
std::optional<Point> point_in_region(Sampler& s, const Region& r, const Window& w,
                                     int tries = 200);

} // namespace moulton
