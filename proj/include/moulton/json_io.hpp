#pragma once

#include <json.hpp>

#include <map>
#include <string>

#include "moulton/atlas.hpp"
#include "moulton/desargues.hpp"

namespace moulton::io {

using json = nlohmann::json;

// Scalars travel as exact "num/den" strings (plain integers also accepted on
// input); open interval bounds use null for an unbounded side.
json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);
json bound_to_json(const Bound& b);
Bound bound_from_json(const json& j);

// {"affine":[x,y]} | {"ideal": s} | {"ideal_vertical": true}
json point_to_json(const Point& p);
Point point_from_json(const json& j);

// {"vertical": c} | {"graph":[s,b]} | {"line_at_infinity": true}
json line_to_json(const Line& l);
Line line_from_json(const json& j);

// homogeneous triples as 3-element arrays of scalars
json triple_to_json(const Triple& t);

// expression trees: {"and":[...]} / {"or":[...]} / {"not": ...} over atom
// names plus {"BOX":[x_lo,x_hi,y_lo,y_hi]} and {"IDEAL_SLOPE_IN":[lo,hi]}
json region_to_json(const Region& r);
Region region_from_json(const json& j);

// 3x3 array of scalars
json projectivity_to_json(const Projectivity& t);
Projectivity projectivity_from_json(const json& j);

// {"name":..., "domain": region, "pieces":[{"region":..., "matrix":...}]}
json chart_to_json(const Chart& c);
Chart chart_from_json(const json& j);

// {"k":..., "charts":[...], "overlaps":[{"a","b","samples" | "disjoint"}]}
json atlas_to_json(const Atlas& a);
Atlas atlas_from_json(const json& j);

/// Raw arc data; legs are derived against a concrete parameter via make_arc.
struct ArcSpec {
    std::vector<Point> waypoints;
    std::vector<Point> vias;
};

// {"waypoints":[points], "vias":[points]}
json arc_to_json(const ArcSpec& a);
ArcSpec arc_from_json(const json& j);

// {"o": point, "a":[p,p,p], "b":[p,p,p]}
json config_to_json(const DConfig<Point>& c);
DConfig<Point> config_from_json(const json& j);

// output only: meets, verdict, axis when defined, exact incidence defect
json closure_to_json(const Closure<MoultonModel>& c);

/// A named bundle of inputs for the command line: every entity a command can
/// reference lives under its own name.
struct Scene {
    std::optional<Rat> k;
    std::map<std::string, Point> points;
    std::map<std::string, Line> lines;
    std::map<std::string, Region> regions;
    std::map<std::string, ArcSpec> arcs;
    std::map<std::string, Atlas> atlases;
    std::map<std::string, DConfig<Point>> configs;
};

Scene scene_from_json(const json& j);
/// Reads and parses a scene file; file and JSON problems raise ParseError.
Scene load_scene(const std::string& path);

/// Parses text to JSON, turning library exceptions into ParseError.
json parse_json_text(const std::string& text);

} // namespace moulton::io
