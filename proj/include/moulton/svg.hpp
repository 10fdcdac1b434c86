#pragma once

#include <string>
#include <vector>

#include "moulton/desargues.hpp"

namespace moulton {

/// Affine rectangle the drawing shows; everything outside is clipped.
struct Viewport {
    Rat x_lo, x_hi, y_lo, y_hi;
};

/// Deterministic SVG assembly for Moulton-plane figures: kinked polylines
/// for lines, labeled dots for points, grid shading for regions, and frame
/// markers for ideal points. All coordinates are rendered from exact
/// rationals with fixed precision, so equal input yields equal bytes.
class SvgCanvas {
public:
    SvgCanvas(const MoultonParam& k, const Viewport& v, int width_px = 640);

    void add_region(const Region& r, const std::string& fill);
    void add_line(const Line& l, const std::string& stroke, bool dashed = false);
    void add_point(const Point& p, const std::string& label, const std::string& color);
    /// Ten labeled points and nine lines of a perspective-triangle pair,
    /// plus the meets and (when defined) the dashed axis.
    void add_config(const DConfig<Point>& cfg, const Closure<MoultonModel>& cl);

    std::string str() const;

private:
    std::string px(const Rat& x) const;
    std::string py(const Rat& y) const;
    void frame_marker(const Rat& slope_or_vertical, bool vertical, const std::string& label,
                      const std::string& color);

    MoultonParam k_;
    Viewport v_;
    int w_, h_;
    std::vector<std::string> body_;
};

} // namespace moulton
