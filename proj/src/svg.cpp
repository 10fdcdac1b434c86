#include "moulton/svg.hpp"

#include <sstream>

namespace moulton {

namespace {

constexpr int kGrid = 48; // shading resolution per axis

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

} // namespace

SvgCanvas::SvgCanvas(const MoultonParam& k, const Viewport& v, int width_px) : k_(k), v_(v) {
    if (!(v.x_lo < v.x_hi) || !(v.y_lo < v.y_hi))
        throw GeometryError("empty viewport");
    w_ = width_px;
    // keep the aspect ratio of the affine viewport, rounded up to whole pixels
    const Rat aspect = (v.y_hi - v.y_lo) / (v.x_hi - v.x_lo);
    const Rat hpx = Rat(width_px) * aspect;
    const mpz_class whole = hpx.num() / hpx.den();
    h_ = static_cast<int>(whole.get_si()) + (hpx.den() == 1 ? 0 : 1);
}

std::string SvgCanvas::px(const Rat& x) const {
    return ((x - v_.x_lo) / (v_.x_hi - v_.x_lo) * Rat(w_)).decimal(2);
}

std::string SvgCanvas::py(const Rat& y) const {
    return ((v_.y_hi - y) / (v_.y_hi - v_.y_lo) * Rat(h_)).decimal(2);
}

void SvgCanvas::add_region(const Region& r, const std::string& fill) {
    // one low-opacity cell per grid square whose center lies in the region
    std::ostringstream out;
    out << "<g fill=\"" << fill << "\" fill-opacity=\"0.22\" stroke=\"none\">";
    const Rat dx = (v_.x_hi - v_.x_lo) / Rat(kGrid);
    const Rat dy = (v_.y_hi - v_.y_lo) / Rat(kGrid);
    for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
            const Rat cx = v_.x_lo + dx * Rat(2 * i + 1) / Rat(2);
            const Rat cy = v_.y_lo + dy * Rat(2 * j + 1) / Rat(2);
            if (!r.contains(Point{Affine{cx, cy}})) continue;
            out << "<rect x=\"" << px(v_.x_lo + dx * Rat(i)) << "\" y=\""
                << py(v_.y_lo + dy * Rat(j + 1)) << "\" width=\""
                << (dx / (v_.x_hi - v_.x_lo) * Rat(w_)).decimal(2) << "\" height=\""
                << (dy / (v_.y_hi - v_.y_lo) * Rat(h_)).decimal(2) << "\"/>";
        }
    }
    out << "</g>";
    body_.push_back(out.str());
}

void SvgCanvas::add_line(const Line& l, const std::string& stroke, bool dashed) {
    std::ostringstream out;
    const std::string dash = dashed ? " stroke-dasharray=\"6 4\"" : "";
    if (const auto* v = std::get_if<Vertical>(&l)) {
        out << "<line x1=\"" << px(v->c) << "\" y1=\"" << py(v_.y_lo) << "\" x2=\"" << px(v->c)
            << "\" y2=\"" << py(v_.y_hi) << "\" stroke=\"" << stroke << "\" stroke-width=\"1.5\""
            << dash << " fill=\"none\"/>";
    } else if (const auto* g = std::get_if<Graph>(&l)) {
        // polyline with the bend on the axis; collinear for non-negative slopes
        const Rat yl = slope_left(k_, g->s) * v_.x_lo + g->b;
        const Rat yr = g->s * v_.x_hi + g->b;
        out << "<polyline points=\"" << px(v_.x_lo) << "," << py(yl) << " " << px(Rat(0)) << ","
            << py(g->b) << " " << px(v_.x_hi) << "," << py(yr) << "\" stroke=\"" << stroke
            << "\" stroke-width=\"1.5\"" << dash << " fill=\"none\"/>";
    } else {
        // the line at infinity is pure frame annotation
        out << "<rect x=\"0.50\" y=\"0.50\" width=\"" << (w_ - 1) << "\" height=\"" << (h_ - 1)
            << "\" stroke=\"" << stroke << "\" stroke-width=\"1\" stroke-dasharray=\"2 5\""
            << " fill=\"none\"/>";
    }
    body_.push_back(out.str());
}

void SvgCanvas::frame_marker(const Rat& value, bool vertical, const std::string& label,
                             const std::string& color) {
    // walk from the viewport center in the stated direction to the frame
    const Rat cx = (v_.x_lo + v_.x_hi) / Rat(2);
    const Rat cy = (v_.y_lo + v_.y_hi) / Rat(2);
    Rat mx = cx, my = v_.y_hi;
    if (!vertical) {
        const Rat& s = value;
        // first exit of the ray (cx,cy) + t*(1,s), t > 0
        Rat t = (v_.x_hi - cx);
        if (s.sign() != 0) {
            const Rat ty = ((s.sign() > 0 ? v_.y_hi : v_.y_lo) - cy) / s;
            if (ty < t) t = ty;
        }
        mx = cx + t;
        my = cy + s * t;
    }
    std::ostringstream out;
    out << "<circle cx=\"" << px(mx) << "\" cy=\"" << py(my) << "\" r=\"4\" fill=\"none\""
        << " stroke=\"" << color << "\" stroke-width=\"1.5\"/>"
        << "<text x=\"" << px(mx) << "\" y=\"" << py(my) << "\" dx=\"-8\" dy=\"14\""
        << " font-size=\"10\" font-family=\"monospace\" fill=\"" << color << "\">" << esc(label)
        << "</text>";
    body_.push_back(out.str());
}

void SvgCanvas::add_point(const Point& p, const std::string& label, const std::string& color) {
    if (const auto* a = std::get_if<Affine>(&p)) {
        std::ostringstream out;
        out << "<circle cx=\"" << px(a->x) << "\" cy=\"" << py(a->y) << "\" r=\"3\" fill=\""
            << color << "\"/>";
        if (!label.empty())
            out << "<text x=\"" << px(a->x) << "\" y=\"" << py(a->y) << "\" dx=\"5\" dy=\"-5\""
                << " font-size=\"11\" font-family=\"monospace\" fill=\"" << color << "\">"
                << esc(label) << "</text>";
        body_.push_back(out.str());
        return;
    }
    if (const auto* i = std::get_if<Ideal>(&p)) {
        frame_marker(i->s, false, label.empty() ? point_str(p) : label, color);
        return;
    }
    frame_marker(Rat(0), true, label.empty() ? point_str(p) : label, color);
}

void SvgCanvas::add_config(const DConfig<Point>& cfg, const Closure<MoultonModel>& cl) {
    const MoultonModel m{k_};
    for (int i = 0; i < 3; ++i) add_line(m.join(cfg.o, cfg.a[i]), "#b8b8b8");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            add_line(m.join(cfg.a[i], cfg.a[j]), "#3572b0");
            add_line(m.join(cfg.b[i], cfg.b[j]), "#b05a35");
        }
    if (cl.closes && cl.axis) add_line(*cl.axis, "#666666", true);
    add_point(cfg.o, "o", "#000000");
    const char* an[] = {"a1", "a2", "a3"};
    const char* bn[] = {"b1", "b2", "b3"};
    for (int i = 0; i < 3; ++i) {
        add_point(cfg.a[i], an[i], "#3572b0");
        add_point(cfg.b[i], bn[i], "#b05a35");
    }
    add_point(cl.c12, "c12", "#207020");
    add_point(cl.c13, "c13", "#207020");
    add_point(cl.c23, cl.closes ? "c23" : "c23 (off axis)", "#c01818");
}

std::string SvgCanvas::str() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\"" << h_
        << "\" viewBox=\"0 0 " << w_ << " " << h_ << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << w_ << "\" height=\"" << h_
        << "\" fill=\"#ffffff\"/>\n";
    for (const auto& piece : body_) out << piece << "\n";
    out << "</svg>\n";
    return out.str();
}

} // namespace moulton
