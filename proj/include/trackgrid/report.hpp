#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trackgrid/dataset_io.hpp"
#include "trackgrid/locator.hpp"
#include "trackgrid/pseudotree.hpp"
#include "trackgrid/track_components.hpp"
#include "trackgrid/transforms.hpp"

namespace trackgrid {

struct RunConfig {
    double r = 1.0;
    int n = 12;
    bool auto_center = false;        // shift the dataset into the first quadrant
    Vec2 center{0.0, 0.0};           // grid center when auto_center is off
    std::optional<int> t_max;
    bool pad_lattice = false;
    std::string input_path;
    DatasetFormat format = DatasetFormat::Auto;
    std::optional<TransformSpec> transform;
    std::optional<std::string> curve;  // implicit curve f(x, y) = 0; needs t_max

    void validate() const;  // throws std::invalid_argument
};

struct Report {
    RunConfig config;
    GridParams params{1.0, 2};
    int t_display = 1;  // grid extent used for rendering

    std::size_t point_count = 0;
    std::size_t duplicates_removed = 0;
    std::size_t origin_hits = 0;
    std::size_t beyond_t_max = 0;

    std::vector<CellCode> codes;
    std::vector<std::int64_t> track_seq;
    TrackComponents components;
    std::vector<Branch> branches;
    std::vector<std::pair<Polyline, Polyline>> boundaries;  // per branch: LB, UB
    std::vector<Hole> holes;
    std::vector<ComponentRef> anomalies;
    PseudoTree tree;
    std::vector<std::vector<int>> cycles;
    std::optional<Polyline> hull;

    std::optional<std::vector<CellCode>> transformed_codes;
    std::optional<std::vector<CellCode>> curve_codes;

    // Canonical JSON text: fixed key order, floats at 12 significant digits,
    // byte-identical across runs on equal input.
    std::string to_json() const;
};

// Full pipeline over pre-parsed points (empty input yields an empty report).
Report analyze_points(const RunConfig& config, const std::vector<Vec2>& points,
                      std::size_t duplicates_removed);

// Reads config.input_path, then analyze_points.
Report run_pipeline(const RunConfig& config);

// Static SVG view: grid, occupied cells, branch centroid polylines, branch
// boundaries, hatched holes. Byte-identical across runs.
std::string render_svg(const Report& report);
void write_text_file(const std::string& path, const std::string& content);

// Shortest text for `v` that keeps 12 significant digits.
std::string format_number(double v);

}  // namespace trackgrid
