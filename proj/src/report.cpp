#include "trackgrid/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "trackgrid/expression.hpp"

namespace trackgrid {

namespace {

using Json = nlohmann::ordered_json;

double sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v + 0.0);
    return std::strtod(buf, nullptr);
}

Json json_point(Vec2 p) { return Json::array({sig12(p.x), sig12(p.y)}); }

Json json_polyline(const Polyline& p) {
    Json arr = Json::array();
    for (const Vec2& v : p) arr.push_back(json_point(v));
    return arr;
}

Json json_ref(ComponentRef r) { return Json::array({r.t, r.idx}); }

Json json_codes(const std::vector<CellCode>& codes) {
    Json arr = Json::array();
    for (const CellCode& c : codes) arr.push_back(c.value);
    return arr;
}

}  // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v + 0.0);
    return buf;
}

void RunConfig::validate() const {
    if (!(r > 0.0)) throw std::invalid_argument("config: r must be positive");
    if (n < 2) throw std::invalid_argument("config: n must be at least 2");
    if (t_max && *t_max < 1) throw std::invalid_argument("config: t-max must be at least 1");
    if (curve && !t_max) throw std::invalid_argument("config: curve mode requires t-max");
    if (transform && transform->kind == TransformSpec::Kind::Translate &&
        (transform->ray < 0 || transform->ray >= n))
        throw std::invalid_argument("config: translation ray must lie in [0, n)");
    if (transform && transform->kind == TransformSpec::Kind::Scale &&
        !(transform->factor > 0.0))
        throw std::invalid_argument("config: scale factor must be positive");
}

Report analyze_points(const RunConfig& config, const std::vector<Vec2>& points,
                      std::size_t duplicates_removed) {
    config.validate();

    std::vector<Vec2> working = points;
    Vec2 center = config.center;
    if (config.auto_center) {
        center = {0.0, 0.0};
        if (!working.empty()) {
            double min_x = std::numeric_limits<double>::infinity();
            double min_y = std::numeric_limits<double>::infinity();
            for (const Vec2& p : working) {
                min_x = std::min(min_x, p.x);
                min_y = std::min(min_y, p.y);
            }
            for (Vec2& p : working) p = p - Vec2{min_x, min_y};
        }
    }

    Report report;
    report.config = config;
    report.params = GridParams(config.r, config.n, center);
    report.duplicates_removed = duplicates_removed;

    if (config.pad_lattice && !working.empty()) {
        BoundingBox box{working.front(), working.front()};
        for (const Vec2& p : working) {
            box.min.x = std::min(box.min.x, p.x);
            box.min.y = std::min(box.min.y, p.y);
            box.max.x = std::max(box.max.x, p.x);
            box.max.y = std::max(box.max.y, p.y);
        }
        // the lattice is anchored at the grid center
        BoundingBox local{box.min - center, box.max - center};
        std::vector<Vec2> shifted;
        shifted.reserve(working.size());
        for (const Vec2& p : working) shifted.push_back(p - center);
        std::vector<Vec2> padded = pad(report.params, shifted, local);
        working.clear();
        for (const Vec2& p : padded) working.push_back(p + center);
    }
    report.point_count = working.size();

    MappedDataset mapped = map_dataset(report.params, working);
    report.origin_hits = mapped.origin_hits;
    if (config.t_max) {
        std::vector<AreaRef> kept;
        for (const AreaRef& c : mapped.cells) {
            if (c.t <= *config.t_max)
                kept.push_back(c);
            else
                ++report.beyond_t_max;
        }
        mapped.cells = std::move(kept);
    }

    for (const AreaRef& c : mapped.cells) report.codes.push_back(encode(report.params, c));
    report.track_seq = track_sequence(report.params, report.codes);
    report.components = components_from_cells(report.params, mapped.cells);
    report.branches = build_branches(report.params, report.components);
    for (const Branch& b : report.branches)
        report.boundaries.push_back(branch_boundaries(report.params, report.components, b));
    report.holes = find_holes(report.params, report.components, report.branches);
    report.anomalies = find_anomalies(report.components, report.branches);
    report.tree = build_pseudotree(report.params, report.components);
    report.cycles = find_cycles(report.tree);
    if (!mapped.cells.empty())
        report.hull = hull_boundary(report.params, mapped.cells);

    report.t_display = std::max(config.t_max.value_or(1), 1);
    report.t_display = std::max(report.t_display, report.components.max_track());

    if (config.transform)
        report.transformed_codes = apply(report.params, report.codes, *config.transform);

    if (config.curve) {
        const Expression expr = Expression::parse(*config.curve);
        ImplicitCurve curve{[expr](double x, double y) { return expr.eval(x, y); }};
        const std::vector<AreaRef> cells =
            map_curve(report.params, curve, *config.t_max);
        std::vector<CellCode> codes;
        for (const AreaRef& c : cells)
            if (!c.is_origin()) codes.push_back(encode(report.params, c));
        std::sort(codes.begin(), codes.end());
        report.curve_codes = std::move(codes);
    }
    return report;
}

Report run_pipeline(const RunConfig& config) {
    config.validate();
    const ParsedDataset data = parse_dataset(config.input_path, config.format);
    return analyze_points(config, data.points, data.duplicates_removed);
}

std::string Report::to_json() const {
    Json doc;

    Json cfg;
    cfg["r"] = sig12(config.r);
    cfg["n"] = config.n;
    cfg["center"] = json_point(params.center);
    cfg["auto_center"] = config.auto_center;
    cfg["t_max"] = config.t_max ? Json(*config.t_max) : Json(nullptr);
    cfg["pad"] = config.pad_lattice;
    cfg["input"] = config.input_path;
    if (config.transform) {
        Json tr;
        switch (config.transform->kind) {
            case TransformSpec::Kind::Rotate:
                tr["kind"] = "rotate";
                tr["theta_deg"] = sig12(config.transform->theta_deg);
                break;
            case TransformSpec::Kind::Translate:
                tr["kind"] = "translate";
                tr["ray"] = config.transform->ray;
                tr["units"] = config.transform->units;
                break;
            case TransformSpec::Kind::Scale:
                tr["kind"] = "scale";
                tr["factor"] = sig12(config.transform->factor);
                break;
        }
        cfg["transform"] = tr;
    } else {
        cfg["transform"] = nullptr;
    }
    cfg["curve"] = config.curve ? Json(*config.curve) : Json(nullptr);
    doc["config"] = cfg;

    Json stats;
    stats["points"] = point_count;
    stats["duplicates_removed"] = duplicates_removed;
    stats["origin_hits"] = origin_hits;
    stats["beyond_t_max"] = beyond_t_max;
    doc["stats"] = stats;

    doc["codes"] = json_codes(codes);
    doc["track_sequence"] = track_seq;

    Json tracks = Json::array();
    for (int t = 1; t <= components.max_track(); ++t) {
        Json entry;
        entry["t"] = t;
        Json track_codes = Json::array();
        for (const CellCode& c : codes)
            if (decode(params, c).t == t) track_codes.push_back(c.value);
        entry["codes"] = track_codes;
        if (!track_codes.empty()) tracks.push_back(entry);
    }
    doc["tracks"] = tracks;

    Json comps = Json::array();
    for (int t = 1; t <= components.max_track(); ++t) {
        const auto& list = components.per_track[static_cast<std::size_t>(t)];
        for (int idx = 0; idx < static_cast<int>(list.size()); ++idx) {
            const ComponentInterval& c = list[static_cast<std::size_t>(idx)];
            Json entry;
            entry["t"] = c.t;
            entry["idx"] = idx;
            entry["lo"] = c.lo;
            entry["hi"] = c.hi;
            entry["interval"] = Json::array({encode(params, AreaRef{c.t, c.lo}).value,
                                             encode(params, AreaRef{c.t, c.hi}).value});
            entry["occupied"] = c.occupied;
            comps.push_back(entry);
        }
    }
    doc["components"] = comps;

    Json branches_json = Json::array();
    for (const Branch& b : branches) {
        Json chain = Json::array();
        for (const ComponentRef& ref : b.chain) chain.push_back(json_ref(ref));
        branches_json.push_back(Json{{"chain", chain}});
    }
    doc["branches"] = branches_json;

    Json bounds = Json::array();
    for (const auto& [lb, ub] : boundaries) {
        Json entry;
        entry["lb"] = json_polyline(lb);
        entry["ub"] = json_polyline(ub);
        bounds.push_back(entry);
    }
    doc["boundaries"] = bounds;

    Json holes_json = Json::array();
    for (const Hole& h : holes) {
        Json entry;
        entry["start"] = json_ref(h.start);
        entry["end"] = json_ref(h.end);
        Json side_a = Json::array(), side_b = Json::array();
        for (const ComponentRef& r : h.side_a) side_a.push_back(json_ref(r));
        for (const ComponentRef& r : h.side_b) side_b.push_back(json_ref(r));
        entry["side_a"] = side_a;
        entry["side_b"] = side_b;
        entry["boundary"] = json_polyline(h.boundary);
        holes_json.push_back(entry);
    }
    doc["holes"] = holes_json;

    Json anomalies_json = Json::array();
    for (const ComponentRef& r : anomalies) anomalies_json.push_back(json_ref(r));
    doc["anomalies"] = anomalies_json;

    Json tree_json;
    Json nodes = Json::array();
    for (std::size_t id = 0; id < tree.nodes.size(); ++id) {
        const PseudoNode& nd = tree.nodes[id];
        Json entry;
        entry["id"] = id;
        entry["t"] = nd.ref.t;
        entry["idx"] = nd.ref.idx;
        entry["interval"] = Json::array({nd.code_lo, nd.code_hi});
        entry["children"] = nd.children;
        nodes.push_back(entry);
    }
    tree_json["nodes"] = nodes;
    Json levels = Json::array();
    for (std::size_t t = 1; t < tree.levels.size(); ++t) levels.push_back(tree.levels[t]);
    tree_json["levels"] = levels;
    Json edges = Json::array();
    for (const auto& [a, b] : tree.edges) edges.push_back(Json::array({a, b}));
    tree_json["edges"] = edges;
    tree_json["cycles"] = cycles;
    doc["pseudotree"] = tree_json;

    doc["hull"] = hull ? json_polyline(*hull) : Json(nullptr);
    doc["transformed_codes"] = transformed_codes ? json_codes(*transformed_codes) : Json(nullptr);
    doc["curve_codes"] = curve_codes ? json_codes(*curve_codes) : Json(nullptr);

    return doc.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
    if (!out) throw std::runtime_error("failed while writing '" + path + "'");
}

}  // namespace trackgrid
