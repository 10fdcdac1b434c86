#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "moulton/json_io.hpp"
#include "moulton/scenario.hpp"
#include "moulton/svg.hpp"

using namespace moulton;
using nlohmann::json;

namespace {

// exit protocol: 0 pass or expected outcome, 1 failed expectation,
// 2 malformed or unresolved input, 3 witness found, 4 arc left coverage
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInputError = 2;
constexpr int kWitness = 3;
constexpr int kCoverage = 4;

struct Common {
    std::string k_text;
    std::string scene_path;
    std::uint64_t seed = 1;
    long budget = 0;
    std::string expect;
    std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--k", c.k_text, "plane parameter as an exact rational, e.g. 2 or 3/2");
    cmd->add_option("--scene", c.scene_path, "JSON scene file with named entities");
    cmd->add_option("--seed", c.seed, "seed for every randomized step (default 1)");
    cmd->add_option("--budget", c.budget, "trial budget for searches and verifications");
    cmd->add_option("--expect", c.expect,
                    "assert the outcome: closes|absent|trivial|nontrivial|pass")
        ->check(CLI::IsMember({"closes", "absent", "trivial", "nontrivial", "pass"}));
    cmd->add_option("--out", c.out, "write the report (for render: the SVG) to this file");
}

io::Scene load_scene_if_any(const Common& c) {
    if (c.scene_path.empty()) return {};
    return io::load_scene(c.scene_path);
}

MoultonParam resolve_k(const Common& c, const io::Scene& scene,
                       const std::optional<Rat>& fallback = {}) {
    if (!c.k_text.empty()) return MoultonParam{Rat::parse(c.k_text)};
    if (scene.k) return MoultonParam{*scene.k};
    if (fallback) return MoultonParam{*fallback};
    return MoultonParam{Rat(2)};
}

json command_echo(const std::string& name, const Common& c, const MoultonParam& k) {
    json j{{"name", name}, {"k", k.k.str()}, {"seed", c.seed}, {"budget", c.budget}};
    j["scene"] = c.scene_path.empty() ? json(nullptr) : json(c.scene_path);
    j["expect"] = c.expect.empty() ? json(nullptr) : json(c.expect);
    return j;
}

[[noreturn]] void input_error(const std::string& message) { throw ParseError(message); }

void require_expect_in(const Common& c, std::initializer_list<const char*> allowed) {
    if (c.expect.empty()) return;
    for (const char* a : allowed)
        if (c.expect == a) return;
    input_error("expectation '" + c.expect + "' does not apply to this command");
}

/// Prints the report (stdout or --out) with its exit status embedded.
int emit(json report, int code, const Common& c) {
    report["exit"] = code;
    const std::string text = report.dump(2) + "\n";
    if (!c.out.empty()) {
        std::ofstream f(c.out, std::ios::binary);
        if (!f) input_error("cannot write " + c.out);
        f << text;
    } else {
        std::cout << text;
    }
    return code;
}

Region resolve_region(const std::string& text, const io::Scene& scene) {
    if (auto it = scene.regions.find(text); it != scene.regions.end()) return it->second;
    if (text == "anywhere") return Region::affine_points() | Region::ideal_points();
    if (text == "u_union_v") return u_union_v();
    if (text == "cut_cylinder") return cut_cylinder();
    if (!text.empty() && (text.front() == '{' || text.front() == '['))
        return io::region_from_json(io::parse_json_text(text));
    return io::region_from_json(json(text)); // bare atom names like X_POS
}

// ---------------------------------------------------------------- desargues

int run_desargues(const Common& c, const std::string& config_name, const std::string& search) {
    const io::Scene scene = load_scene_if_any(c);
    const MoultonParam k = resolve_k(c, scene);
    const MoultonModel m{k};
    if (config_name.empty() == search.empty())
        input_error("give exactly one of: a configuration name, or --search REGION");

    json rep{{"command", command_echo("desargues", c, k)}};
    if (!config_name.empty()) {
        require_expect_in(c, {"closes"});
        const auto it = scene.configs.find(config_name);
        if (it == scene.configs.end()) input_error("unknown configuration: " + config_name);
        rep["command"]["config"] = config_name;
        const Closure<MoultonModel> cl = desargues_closes(m, it->second);
        rep["verdict"] = cl.closes ? "closes" : "non-closing";
        rep["closure"] = io::closure_to_json(cl);
        if (c.expect == "closes") return emit(rep, cl.closes ? kOk : kMismatch, c);
        return emit(rep, cl.closes ? kOk : kWitness, c);
    }

    require_expect_in(c, {"absent"});
    rep["command"]["search"] = search;
    const long budget = c.budget > 0 ? c.budget : 100000;
    rep["command"]["budget"] = budget;
    const Region region = resolve_region(search, scene);
    const auto found = find_nonclosing(m, region, budget, c.seed);
    if (!found) {
        rep["verdict"] = "absent";
        return emit(rep, kOk, c);
    }
    const Closure<MoultonModel> cl = desargues_closes(m, found->config); // re-validated
    rep["verdict"] = "found";
    rep["witness"] = json{{"config", io::config_to_json(found->config)},
                          {"closure", io::closure_to_json(cl)}};
    return emit(rep, c.expect == "absent" ? kMismatch : kWitness, c);
}

// ------------------------------------------------------ holonomy / continue

Atlas resolve_atlas(const std::string& name, const io::Scene& scene, const MoultonParam& k) {
    if (name.empty()) return builtin_atlas(k);
    const auto it = scene.atlases.find(name);
    if (it == scene.atlases.end()) input_error("unknown atlas: " + name);
    if (it->second.k.k != k.k)
        input_error("atlas '" + name + "' carries parameter " + it->second.k.k.str() +
                    ", not " + k.k.str());
    return it->second;
}

Arc resolve_arc(const std::string& name, const io::Scene& scene, const MoultonParam& k) {
    if (name.empty()) return canonical_loop(k);
    const auto it = scene.arcs.find(name);
    if (it == scene.arcs.end()) input_error("unknown arc: " + name);
    return make_arc(k, it->second.waypoints, it->second.vias);
}

std::optional<Rat> scene_atlas_k(const std::string& name, const io::Scene& scene) {
    const auto it = scene.atlases.find(name);
    return it == scene.atlases.end() ? std::nullopt : std::optional<Rat>(it->second.k.k);
}

int run_holonomy(const Common& c, const std::string& atlas_name, const std::string& arc_name,
                 const std::string& chart, bool full_continuation) {
    const io::Scene scene = load_scene_if_any(c);
    const MoultonParam k = resolve_k(c, scene, scene_atlas_k(atlas_name, scene));
    require_expect_in(c, full_continuation ? std::initializer_list<const char*>{}
                                           : std::initializer_list<const char*>{"trivial",
                                                                                 "nontrivial"});
    json rep{{"command", command_echo(full_continuation ? "continue" : "holonomy", c, k)}};
    rep["command"]["atlas"] = atlas_name.empty() ? "builtin" : atlas_name;
    rep["command"]["arc"] = arc_name.empty() ? "builtin loop" : arc_name;
    rep["command"]["chart"] = chart;

    const Atlas atlas = resolve_atlas(atlas_name, scene, k);
    const Arc arc = resolve_arc(arc_name, scene, k);
    try {
        if (full_continuation) {
            const Continuation ct = continue_along(atlas, arc, chart);
            json chain = json::array();
            for (const ChainStep& s : ct.chain)
                chain.push_back(json{{"chart", s.chart}, {"entry", io::point_to_json(s.entry)}});
            rep["chain"] = chain;
            rep["final_chart"] = ct.final_chart.name;
            rep["endpoint_image"] = io::triple_to_json(ct.endpoint_image);
            return emit(rep, kOk, c);
        }
        const Holonomy h = holonomy(atlas, arc, chart);
        rep["transform"] = io::projectivity_to_json(h.transform);
        rep["trivial"] = h.trivial;
        rep["chain"] = h.chain;
        int code = kOk;
        if (c.expect == "trivial") code = h.trivial ? kOk : kMismatch;
        if (c.expect == "nontrivial") code = h.trivial ? kMismatch : kOk;
        return emit(rep, code, c);
    } catch (const CoverageError& e) {
        rep["error"] = e.what();
        rep["exit_point"] = io::point_to_json(e.exit_point);
        return emit(rep, kCoverage, c);
    }
}

// ------------------------------------------------------------------ example

int run_example(const Common& c, const std::string& id) {
    const io::Scene scene = load_scene_if_any(c);
    const MoultonParam k = resolve_k(c, scene);
    require_expect_in(c, {"pass"});
    const ScenarioResult res = run_scenario(id, k, c.seed, c.budget);
    json rep{{"command", command_echo("example", c, k)}};
    rep["command"]["id"] = id;
    rep["id"] = res.id;
    rep["pass"] = res.pass;
    json checks = json::array();
    for (const ScenarioCheck& ch : res.checks)
        checks.push_back(json{{"label", ch.label}, {"ok", ch.ok}, {"detail", ch.detail}});
    rep["checks"] = checks;
    return emit(rep, res.pass ? kOk : kMismatch, c);
}

// ------------------------------------------------------------------- render

Viewport parse_viewport(const std::string& text) {
    std::vector<Rat> vals;
    std::string token;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!token.empty()) vals.push_back(Rat::parse(token));
            token.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            token += ch;
        }
    }
    if (vals.size() != 4) input_error("viewport needs x_lo,x_hi,y_lo,y_hi");
    return Viewport{vals[0], vals[1], vals[2], vals[3]};
}

class RenderSink {
public:
    RenderSink(const MoultonParam& k, const Viewport& v, int width) : k_(k), canvas_(k, v, width) {}

    void add_region(const Region& r) { canvas_.add_region(r, next(region_fills_)); }
    void add_line(const Line& l) { canvas_.add_line(l, next(line_strokes_)); }
    void add_point(const Point& p, const std::string& label) {
        canvas_.add_point(p, label, "#202020");
    }
    void add_arc(const Arc& a) {
        for (const Point& w : a.waypoints) canvas_.add_point(w, "", "#707070");
    }
    void add_config(const DConfig<Point>& cfg) {
        canvas_.add_config(cfg, desargues_closes(MoultonModel{k_}, cfg));
    }

    /// Entities supplied inline as JSON rather than by scene name.
    void add_json(const json& j) {
        if (j.is_string() || j.contains("and") || j.contains("or") || j.contains("not") ||
            j.contains("BOX") || j.contains("IDEAL_SLOPE_IN")) {
            add_region(io::region_from_json(j));
        } else if (j.contains("affine") || j.contains("ideal") || j.contains("ideal_vertical")) {
            const Point p = io::point_from_json(j);
            add_point(p, point_str(p));
        } else if (j.contains("vertical") || j.contains("graph") ||
                   j.contains("line_at_infinity")) {
            add_line(io::line_from_json(j));
        } else if (j.contains("waypoints")) {
            const io::ArcSpec s = io::arc_from_json(j);
            add_arc(make_arc(k_, s.waypoints, s.vias));
        } else if (j.contains("o")) {
            add_config(io::config_from_json(j));
        } else {
            input_error("unrenderable selection: " + j.dump());
        }
    }

    std::string str() const { return canvas_.str(); }

private:
    const char* next(std::vector<const char*>& palette) {
        const char* c = palette.front();
        std::rotate(palette.begin(), palette.begin() + 1, palette.end());
        return c;
    }

    MoultonParam k_;
    SvgCanvas canvas_;
    std::vector<const char*> region_fills_ = {"#4a90d9", "#d98c4a", "#50a050", "#9a6bd0"};
    std::vector<const char*> line_strokes_ = {"#1f5fa8", "#b3541e", "#2e7d32", "#6a3bb5"};
};

int run_render(const Common& c, const std::vector<std::string>& selection,
               const std::string& viewport_text, int width) {
    const io::Scene scene = load_scene_if_any(c);
    const MoultonParam k = resolve_k(c, scene);
    require_expect_in(c, {});
    if (selection.empty()) input_error("empty selection");
    if (c.out.empty()) input_error("render needs --out for the SVG file");

    RenderSink sink(k, parse_viewport(viewport_text), width);
    for (const std::string& name : selection) {
        if (auto r = scene.regions.find(name); r != scene.regions.end())
            sink.add_region(r->second);
        else if (auto l = scene.lines.find(name); l != scene.lines.end())
            sink.add_line(l->second);
        else if (auto p = scene.points.find(name); p != scene.points.end())
            sink.add_point(p->second, name);
        else if (auto a = scene.arcs.find(name); a != scene.arcs.end())
            sink.add_arc(make_arc(k, a->second.waypoints, a->second.vias));
        else if (auto g = scene.configs.find(name); g != scene.configs.end())
            sink.add_config(g->second);
        else if (!name.empty() && (name.front() == '{' || name.front() == '['))
            sink.add_json(io::parse_json_text(name));
        else
            input_error("unknown selection: " + name);
    }

    std::ofstream f(c.out, std::ios::binary);
    if (!f) input_error("cannot write " + c.out);
    f << sink.str();
    f.close();

    json rep{{"command", command_echo("render", c, k)}};
    rep["command"]["selection"] = selection;
    rep["command"]["viewport"] = viewport_text;
    rep["svg"] = c.out;
    rep["exit"] = kOk;
    std::cout << rep.dump(2) << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Moulton-plane geometry: closure tests and searches, chart gluing, "
                 "continuation and holonomy along arcs, scripted demonstrations, and SVG figures"};
    app.require_subcommand(1);

    Common c_des, c_hol, c_con, c_exa, c_ren;
    std::string config_name, search;
    std::string hol_atlas, hol_arc, hol_chart = "U1";
    std::string con_atlas, con_arc, con_chart = "U1";
    std::string example_id;
    std::vector<std::string> selection;
    std::string viewport_text = "-3,3,-3,3";
    int width = 640;

    CLI::App* des = app.add_subcommand(
        "desargues", "test a named configuration for closure, or search a region");
    add_common(des, c_des);
    des->add_option("config", config_name, "configuration name from the scene");
    des->add_option("--search", search,
                    "region to search: scene region name, anywhere, u_union_v, cut_cylinder, "
                    "a bare atom like X_POS, or inline region JSON");

    CLI::App* hol = app.add_subcommand("holonomy", "transform picked up around a loop");
    add_common(hol, c_hol);
    hol->add_option("--atlas", hol_atlas, "scene atlas name (builtin atlas when omitted)");
    hol->add_option("--loop", hol_arc, "scene arc name (builtin cylinder loop when omitted)");
    hol->add_option("--chart", hol_chart, "start chart name (default U1)");

    CLI::App* con = app.add_subcommand("continue", "continuation of a chart along an arc");
    add_common(con, c_con);
    con->add_option("--atlas", con_atlas, "scene atlas name (builtin atlas when omitted)");
    con->add_option("--arc", con_arc, "scene arc name (builtin cylinder loop when omitted)");
    con->add_option("--chart", con_chart, "start chart name (default U1)");

    CLI::App* exa = app.add_subcommand("example", "run one scripted demonstration");
    add_common(exa, c_exa);
    exa->add_option("id", example_id, "demonstration id: 6.1, 6.3, 6.4, 6.5, or 6.6")
        ->required();

    CLI::App* ren = app.add_subcommand("render", "draw points, lines, regions, arcs, and "
                                                 "configurations to an SVG file");
    add_common(ren, c_ren);
    ren->add_option("selection", selection, "scene entity names or inline JSON entities");
    ren->add_option("--viewport", viewport_text, "affine window x_lo,x_hi,y_lo,y_hi");
    ren->add_option("--width", width, "image width in pixels (default 640)");

    int code = kOk;
    des->callback([&] { code = run_desargues(c_des, config_name, search); });
    hol->callback([&] { code = run_holonomy(c_hol, hol_atlas, hol_arc, hol_chart, false); });
    con->callback([&] { code = run_holonomy(c_con, con_atlas, con_arc, con_chart, true); });
    exa->callback([&] { code = run_example(c_exa, example_id); });
    ren->callback([&] { code = run_render(c_ren, selection, viewport_text, width); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int c = app.exit(e);
        return c == 0 ? kOk : kInputError;
    } catch (const ParseError& e) {
        std::cerr << json{{"error", e.what()}, {"exit", kInputError}}.dump(2) << "\n";
        return kInputError;
    } catch (const GeometryError& e) {
        std::cerr << json{{"error", e.what()}, {"exit", kInputError}}.dump(2) << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"exit", kInputError}}.dump(2) << "\n";
        return kInputError;
    }
    return code;
}
