#include "moulton/json_io.hpp"

#include <fstream>
#include <sstream>

namespace moulton::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field: ") + name);
    return j.at(name);
}

std::vector<Point> points_from_json(const json& j) {
    if (!j.is_array()) bad("expected an array of points");
    std::vector<Point> out;
    for (const auto& e : j) out.push_back(point_from_json(e));
    return out;
}

json points_to_json(const std::vector<Point>& pts) {
    json out = json::array();
    for (const auto& p : pts) out.push_back(point_to_json(p));
    return out;
}

} // namespace

json rat_to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<std::int64_t>()));
    bad("expected a rational scalar (\"num/den\" string or integer)");
}

json bound_to_json(const Bound& b) { return b ? rat_to_json(*b) : json(nullptr); }

Bound bound_from_json(const json& j) {
    if (j.is_null()) return std::nullopt;
    return rat_from_json(j);
}

json point_to_json(const Point& p) {
    if (const auto* a = std::get_if<Affine>(&p))
        return json{{"affine", json::array({rat_to_json(a->x), rat_to_json(a->y)})}};
    if (const auto* i = std::get_if<Ideal>(&p)) return json{{"ideal", rat_to_json(i->s)}};
    return json{{"ideal_vertical", true}};
}

Point point_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) bad("expected a point object with one tag");
    if (j.contains("affine")) {
        const json& c = j.at("affine");
        if (!c.is_array() || c.size() != 2) bad("affine point needs [x, y]");
        return Affine{rat_from_json(c[0]), rat_from_json(c[1])};
    }
    if (j.contains("ideal")) return Ideal{rat_from_json(j.at("ideal"))};
    if (j.contains("ideal_vertical")) {
        if (j.at("ideal_vertical") != json(true)) bad("ideal_vertical must be true");
        return IdealVertical{};
    }
    bad("unknown point tag");
}

json line_to_json(const Line& l) {
    if (const auto* v = std::get_if<Vertical>(&l)) return json{{"vertical", rat_to_json(v->c)}};
    if (const auto* g = std::get_if<Graph>(&l))
        return json{{"graph", json::array({rat_to_json(g->s), rat_to_json(g->b)})}};
    return json{{"line_at_infinity", true}};
}

Line line_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) bad("expected a line object with one tag");
    if (j.contains("vertical")) return Vertical{rat_from_json(j.at("vertical"))};
    if (j.contains("graph")) {
        const json& c = j.at("graph");
        if (!c.is_array() || c.size() != 2) bad("graph line needs [slope, intercept]");
        return Graph{rat_from_json(c[0]), rat_from_json(c[1])};
    }
    if (j.contains("line_at_infinity")) {
        if (j.at("line_at_infinity") != json(true)) bad("line_at_infinity must be true");
        return LineAtInfinity{};
    }
    bad("unknown line tag");
}

json triple_to_json(const Triple& t) {
    return json::array({rat_to_json(t.at(0)), rat_to_json(t.at(1)), rat_to_json(t.at(2))});
}

namespace {

const char* atom_name(Region::Atom a) {
    switch (a) {
        case Region::Atom::XPos: return "X_POS";
        case Region::Atom::XNeg: return "X_NEG";
        case Region::Atom::YPos: return "Y_POS";
        case Region::Atom::YNeg: return "Y_NEG";
        case Region::Atom::IsAffine: return "IS_AFFINE";
        case Region::Atom::IsIdeal: return "IS_IDEAL";
        case Region::Atom::NotOnRay: return "NOT_ON_RAY";
    }
    bad("unrepresentable atom");
}

json node_to_json(const Region::Node& n) {
    switch (n.op) {
        case Region::Node::Op::Leaf: {
            if (const auto* a = std::get_if<Region::Atom>(&n.leaf)) return atom_name(*a);
            if (const auto* b = std::get_if<Region::Box>(&n.leaf))
                return json{{"BOX", json::array({bound_to_json(b->x_lo), bound_to_json(b->x_hi),
                                                 bound_to_json(b->y_lo), bound_to_json(b->y_hi)})}};
            const auto& s = std::get<Region::SlopeBand>(n.leaf);
            return json{
                {"IDEAL_SLOPE_IN", json::array({bound_to_json(s.lo), bound_to_json(s.hi)})}};
        }
        case Region::Node::Op::And:
        case Region::Node::Op::Or: {
            json kids = json::array();
            for (const auto& k : n.kids) kids.push_back(node_to_json(*k));
            return json{{n.op == Region::Node::Op::And ? "and" : "or", kids}};
        }
        case Region::Node::Op::Not: return json{{"not", node_to_json(*n.kids[0])}};
    }
    bad("unrepresentable region node");
}

Region atom_from_name(const std::string& name) {
    if (name == "X_POS") return Region::x_pos();
    if (name == "X_NEG") return Region::x_neg();
    if (name == "Y_POS") return Region::y_pos();
    if (name == "Y_NEG") return Region::y_neg();
    if (name == "IS_AFFINE") return Region::affine_points();
    if (name == "IS_IDEAL") return Region::ideal_points();
    if (name == "NOT_ON_RAY") return Region::not_on_ray();
    bad("unknown region atom: " + name);
}

} // namespace

json region_to_json(const Region& r) { return node_to_json(r.root()); }

Region region_from_json(const json& j) {
    if (j.is_string()) return atom_from_name(j.get<std::string>());
    if (!j.is_object() || j.size() != 1) bad("expected a region atom name or operator object");
    if (j.contains("BOX")) {
        const json& c = j.at("BOX");
        if (!c.is_array() || c.size() != 4) bad("BOX needs [x_lo, x_hi, y_lo, y_hi]");
        return Region::box(bound_from_json(c[0]), bound_from_json(c[1]), bound_from_json(c[2]),
                           bound_from_json(c[3]));
    }
    if (j.contains("IDEAL_SLOPE_IN")) {
        const json& c = j.at("IDEAL_SLOPE_IN");
        if (!c.is_array() || c.size() != 2) bad("IDEAL_SLOPE_IN needs [lo, hi]");
        return Region::ideal_slope_in(bound_from_json(c[0]), bound_from_json(c[1]));
    }
    if (j.contains("and") || j.contains("or")) {
        const bool conj = j.contains("and");
        const json& kids = j.at(conj ? "and" : "or");
        if (!kids.is_array() || kids.empty()) bad("and/or needs a nonempty array");
        std::optional<Region> acc;
        for (const auto& kj : kids) {
            Region k = region_from_json(kj);
            acc = acc ? (conj ? (*acc & k) : (*acc | k)) : k;
        }
        return *acc;
    }
    if (j.contains("not")) return ~region_from_json(j.at("not"));
    bad("unknown region operator");
}

json projectivity_to_json(const Projectivity& t) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back(rat_to_json(t.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Projectivity projectivity_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) bad("expected a 3x3 matrix");
    std::array<std::array<Rat, 3>, 3> m;
    for (int r = 0; r < 3; ++r) {
        if (!j[r].is_array() || j[r].size() != 3) bad("expected a 3x3 matrix");
        for (int c = 0; c < 3; ++c) m[r][c] = rat_from_json(j[r][c]);
    }
    return Projectivity(m);
}

json chart_to_json(const Chart& c) {
    json pieces = json::array();
    for (const auto& p : c.pieces)
        pieces.push_back(json{{"region", region_to_json(p.region)},
                              {"matrix", projectivity_to_json(p.map)}});
    return json{{"name", c.name}, {"domain", region_to_json(c.domain)}, {"pieces", pieces}};
}

Chart chart_from_json(const json& j) {
    const json& name = field(j, "name");
    if (!name.is_string()) bad("chart name must be a string");
    const json& pieces = field(j, "pieces");
    if (!pieces.is_array() || pieces.empty()) bad("chart needs at least one piece");
    Chart out{name.get<std::string>(), region_from_json(field(j, "domain")), {}};
    for (const auto& pj : pieces)
        out.pieces.push_back(Piece{region_from_json(field(pj, "region")),
                                   projectivity_from_json(field(pj, "matrix"))});
    return out;
}

json atlas_to_json(const Atlas& a) {
    json charts = json::array();
    for (const auto& c : a.charts) charts.push_back(chart_to_json(c));
    json overlaps = json::array();
    for (const auto& ov : a.overlaps) {
        json e{{"a", ov.a}, {"b", ov.b}};
        if (ov.samples)
            e["samples"] = points_to_json(*ov.samples);
        else
            e["disjoint"] = true;
        overlaps.push_back(e);
    }
    return json{{"k", rat_to_json(a.k.k)}, {"charts", charts}, {"overlaps", overlaps}};
}

Atlas atlas_from_json(const json& j) {
    Rat k = rat_from_json(field(j, "k"));
    if (k.sign() <= 0) bad("atlas parameter k must be positive");
    Atlas out{MoultonParam{k}, {}, {}};
    const json& charts = field(j, "charts");
    if (!charts.is_array()) bad("charts must be an array");
    for (const auto& cj : charts) out.charts.push_back(chart_from_json(cj));
    const json& overlaps = field(j, "overlaps");
    if (!overlaps.is_array()) bad("overlaps must be an array");
    for (const auto& oj : overlaps) {
        const json& a = field(oj, "a");
        const json& b = field(oj, "b");
        if (!a.is_string() || !b.is_string()) bad("overlap chart names must be strings");
        Overlap ov{a.get<std::string>(), b.get<std::string>(), std::nullopt};
        if (oj.contains("samples")) ov.samples = points_from_json(oj.at("samples"));
        else if (!oj.contains("disjoint") || oj.at("disjoint") != json(true))
            bad("overlap needs samples or disjoint:true");
        out.overlaps.push_back(std::move(ov));
    }
    return out;
}

json arc_to_json(const ArcSpec& a) {
    return json{{"waypoints", points_to_json(a.waypoints)}, {"vias", points_to_json(a.vias)}};
}

ArcSpec arc_from_json(const json& j) {
    return ArcSpec{points_from_json(field(j, "waypoints")), points_from_json(field(j, "vias"))};
}

json config_to_json(const DConfig<Point>& c) {
    return json{{"o", point_to_json(c.o)},
                {"a", points_to_json({c.a[0], c.a[1], c.a[2]})},
                {"b", points_to_json({c.b[0], c.b[1], c.b[2]})}};
}

DConfig<Point> config_from_json(const json& j) {
    const auto a = points_from_json(field(j, "a"));
    const auto b = points_from_json(field(j, "b"));
    if (a.size() != 3 || b.size() != 3) bad("triangles need exactly three points");
    return DConfig<Point>{point_from_json(field(j, "o")), {a[0], a[1], a[2]},
                          {b[0], b[1], b[2]}};
}

json closure_to_json(const Closure<MoultonModel>& c) {
    json out{{"c12", point_to_json(c.c12)},
             {"c13", point_to_json(c.c13)},
             {"c23", point_to_json(c.c23)},
             {"closes", c.closes},
             {"residual", rat_to_json(c.residual)}};
    out["axis"] = c.axis ? line_to_json(*c.axis) : json(nullptr);
    return out;
}

Scene scene_from_json(const json& j) {
    if (!j.is_object()) bad("scene must be an object");
    Scene out;
    if (j.contains("k")) out.k = rat_from_json(j.at("k"));
    auto each = [&](const char* name, auto&& store) {
        if (!j.contains(name)) return;
        const json& section = j.at(name);
        if (!section.is_object()) bad(std::string(name) + " must map names to entries");
        for (const auto& [key, value] : section.items()) store(key, value);
    };
    each("points", [&](const std::string& n, const json& v) { out.points.emplace(n, point_from_json(v)); });
    each("lines", [&](const std::string& n, const json& v) { out.lines.emplace(n, line_from_json(v)); });
    each("regions", [&](const std::string& n, const json& v) { out.regions.emplace(n, region_from_json(v)); });
    each("arcs", [&](const std::string& n, const json& v) { out.arcs.emplace(n, arc_from_json(v)); });
    each("atlases", [&](const std::string& n, const json& v) { out.atlases.emplace(n, atlas_from_json(v)); });
    each("configurations", [&](const std::string& n, const json& v) { out.configs.emplace(n, config_from_json(v)); });
    return out;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open scene file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return scene_from_json(parse_json_text(buf.str()));
}

} // namespace moulton::io
