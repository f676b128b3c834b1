#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "trackgrid/errors.hpp"
#include "trackgrid/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitTransform = 3;

bool parse_point(const std::string& text, trackgrid::Vec2& out) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) return false;
    try {
        std::size_t used = 0;
        out.x = std::stod(text.substr(0, comma), &used);
        if (used != comma) return false;
        const std::string rest = text.substr(comma + 1);
        out.y = std::stod(rest, &used);
        return used == rest.size();
    } catch (const std::exception&) {
        return false;
    }
}

int run_analyze(const trackgrid::RunConfig& config, const std::string& out_path,
                const std::string& svg_path) {
    using namespace trackgrid;
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    try {
        const Report report = run_pipeline(config);
        if (report.duplicates_removed > 0)
            std::cerr << "warning: removed " << report.duplicates_removed
                      << " duplicate point(s)\n";
        if (report.beyond_t_max > 0)
            std::cerr << "warning: " << report.beyond_t_max
                      << " cell(s) beyond t-max were dropped\n";
        write_text_file(out_path, report.to_json());
        if (!svg_path.empty()) write_text_file(svg_path, render_svg(report));
        std::cout << "report: " << out_path;
        if (!svg_path.empty()) std::cout << "  svg: " << svg_path;
        std::cout << "\n";
        return kExitOk;
    } catch (const TransformUndefinedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTransform;
    } catch (const DatasetParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const CurveEvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polar track-grid analysis of planar point datasets"};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand("analyze", "Map a dataset and extract its structure");

    std::string input, out_path, svg_path, center_text = "0,0", format_text = "auto";
    std::string curve_expr, translate_text;
    double r = 0.0;
    int n = 12;
    std::optional<int> t_max;
    bool pad = false;
    std::optional<double> rotate_deg, scale_factor;

    analyze->add_option("--input", input, "Input dataset (CSV 'x,y' rows or JSON pairs)")
        ->required();
    analyze->add_option("--format", format_text, "Input format: auto|csv|json")
        ->check(CLI::IsMember({"auto", "csv", "json"}));
    analyze->add_option("--r", r, "Track width")->required();
    analyze->add_option("--n", n, "Sectors per circle (default 12)");
    analyze->add_option("--center", center_text, "Grid center: 'auto' or 'X,Y' (default 0,0)");
    int t_max_value = 0;
    auto* t_max_opt = analyze->add_option("--t-max", t_max_value, "Analysis track cap");
    analyze->add_flag("--pad", pad, "Pad the dataset with the r-lattice over its bounding box");
    double rotate_value = 0.0, scale_value = 0.0;
    auto* rotate_opt = analyze->add_option("--rotate", rotate_value, "Rotate cells by degrees");
    analyze->add_option("--translate", translate_text, "Translate cells: 'I,K' along ray I");
    auto* scale_opt = analyze->add_option("--scale", scale_value, "Scale cells by a factor");
    analyze->add_option("--curve", curve_expr, "Implicit curve f(x,y)=0 to map (needs --t-max)");
    analyze->add_option("--out", out_path, "Report JSON path")->required();
    analyze->add_option("--svg", svg_path, "Optional SVG rendering path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    trackgrid::RunConfig config;
    config.r = r;
    config.n = n;
    config.input_path = input;
    config.pad_lattice = pad;
    if (*t_max_opt) t_max = t_max_value;
    config.t_max = t_max;
    if (format_text == "csv") config.format = trackgrid::DatasetFormat::Csv;
    if (format_text == "json") config.format = trackgrid::DatasetFormat::Json;

    if (center_text == "auto") {
        config.auto_center = true;
    } else if (!parse_point(center_text, config.center)) {
        std::cerr << "error: --center expects 'auto' or 'X,Y'\n";
        return kExitUsage;
    }

    int transform_count = 0;
    if (*rotate_opt) {
        rotate_deg = rotate_value;
        ++transform_count;
    }
    if (*scale_opt) {
        scale_factor = scale_value;
        ++transform_count;
    }
    if (!translate_text.empty()) ++transform_count;
    if (transform_count > 1) {
        std::cerr << "error: at most one of --rotate/--translate/--scale\n";
        return kExitUsage;
    }
    if (rotate_deg) config.transform = trackgrid::TransformSpec::rotate(*rotate_deg);
    if (scale_factor) config.transform = trackgrid::TransformSpec::scale(*scale_factor);
    if (!translate_text.empty()) {
        trackgrid::Vec2 pair;
        if (!parse_point(translate_text, pair) || pair.x != static_cast<int>(pair.x) ||
            pair.y != static_cast<std::int64_t>(pair.y)) {
            std::cerr << "error: --translate expects integers 'I,K'\n";
            return kExitUsage;
        }
        config.transform = trackgrid::TransformSpec::translate(
            static_cast<int>(pair.x), static_cast<std::int64_t>(pair.y));
    }
    if (!curve_expr.empty()) config.curve = curve_expr;

    return run_analyze(config, out_path, svg_path);
}
