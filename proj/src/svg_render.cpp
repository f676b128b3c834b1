#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "trackgrid/report.hpp"

namespace trackgrid {

namespace {

constexpr double kCanvas = 800.0;

struct Projector {
    Vec2 center;
    double world_radius;
    double scale;

    Vec2 to_screen(Vec2 p) const {
        return {(p.x - center.x + world_radius) * scale,
                (world_radius - (p.y - center.y)) * scale};
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void emit_polyline(std::ostringstream& out, const Projector& pr, const Polyline& pts,
                   const std::string& style, bool close) {
    if (pts.empty()) return;
    out << "<path d=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Vec2 s = pr.to_screen(pts[i]);
        out << (i == 0 ? "M" : "L") << fmt(s.x) << " " << fmt(s.y);
    }
    if (close) out << "Z";
    out << "\" " << style << "/>\n";
}

// Annular sector of cell (t, j); for track 1 the inner rim degenerates to the
// center point.
void emit_cell(std::ostringstream& out, const Projector& pr, const GridParams& params,
               const AreaRef& cell, const std::string& style) {
    const double step = params.cell_degrees(cell.t);
    const double a0 = static_cast<double>(cell.j) * step;
    const double a1 = a0 + step;
    const double outer = static_cast<double>(cell.t) * params.r;
    const double inner = static_cast<double>(cell.t - 1) * params.r;
    const Vec2 p1 = pr.to_screen(params.center + polar(outer, a0));
    const Vec2 p2 = pr.to_screen(params.center + polar(outer, a1));
    const double ro = outer * pr.scale;
    out << "<path d=\"M" << fmt(p1.x) << " " << fmt(p1.y) << "A" << fmt(ro) << " " << fmt(ro)
        << " 0 0 0 " << fmt(p2.x) << " " << fmt(p2.y);
    if (cell.t == 1) {
        const Vec2 c = pr.to_screen(params.center);
        out << "L" << fmt(c.x) << " " << fmt(c.y);
    } else {
        const Vec2 p3 = pr.to_screen(params.center + polar(inner, a1));
        const Vec2 p4 = pr.to_screen(params.center + polar(inner, a0));
        const double ri = inner * pr.scale;
        out << "L" << fmt(p3.x) << " " << fmt(p3.y) << "A" << fmt(ri) << " " << fmt(ri)
            << " 0 0 1 " << fmt(p4.x) << " " << fmt(p4.y);
    }
    out << "Z\" " << style << "/>\n";
}

Vec2 component_centroid(const GridParams& params, const ComponentInterval& c) {
    Vec2 acc{0.0, 0.0};
    for (std::int64_t j : c.occupied) acc = acc + representative(params, c.t, j);
    const double n = static_cast<double>(c.occupied.size());
    return {acc.x / n, acc.y / n};
}

}  // namespace

std::string render_svg(const Report& report) {
    const GridParams& params = report.params;
    const double radius = static_cast<double>(report.t_display) * params.r;
    const double margin = 0.05 * radius;
    Projector pr{params.center, radius + margin, kCanvas / (2.0 * (radius + margin))};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
        << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas
        << "\">\n";
    out << "<defs>\n<pattern id=\"hatch\" width=\"8\" height=\"8\" "
           "patternTransform=\"rotate(45)\" patternUnits=\"userSpaceOnUse\">"
           "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#b03030\" "
           "stroke-width=\"2\"/></pattern>\n</defs>\n";
    out << "<rect width=\"" << kCanvas << "\" height=\"" << kCanvas << "\" fill=\"white\"/>\n";

    // occupied cells under the grid strokes
    for (const CellCode& code : report.codes) {
        emit_cell(out, pr, params, decode(params, code),
                  "fill=\"#9ecae1\" stroke=\"none\"");
    }

    const Vec2 c = pr.to_screen(params.center);
    for (int t = 1; t <= report.t_display; ++t) {
        const double rr = static_cast<double>(t) * params.r * pr.scale;
        out << "<circle cx=\"" << fmt(c.x) << "\" cy=\"" << fmt(c.y) << "\" r=\"" << fmt(rr)
            << "\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
        const std::int64_t ring = params.ring_size(t);
        const double step = params.cell_degrees(t);
        for (std::int64_t j = 0; j < ring; ++j) {
            const double a = static_cast<double>(j) * step;
            const Vec2 s0 =
                pr.to_screen(params.center + polar(static_cast<double>(t - 1) * params.r, a));
            const Vec2 s1 =
                pr.to_screen(params.center + polar(static_cast<double>(t) * params.r, a));
            out << "<line x1=\"" << fmt(s0.x) << "\" y1=\"" << fmt(s0.y) << "\" x2=\""
                << fmt(s1.x) << "\" y2=\"" << fmt(s1.y)
                << "\" stroke=\"#dddddd\" stroke-width=\"0.5\"/>\n";
        }
    }

    for (const Hole& h : report.holes) {
        emit_polyline(out, pr, h.boundary,
                      "fill=\"url(#hatch)\" stroke=\"#b03030\" stroke-width=\"1.5\"", true);
    }

    for (const auto& [lb, ub] : report.boundaries) {
        emit_polyline(out, pr, lb, "fill=\"none\" stroke=\"#d4a017\" stroke-width=\"2\"", false);
        emit_polyline(out, pr, ub, "fill=\"none\" stroke=\"#2e8b57\" stroke-width=\"2\"", false);
    }

    for (const Branch& b : report.branches) {
        Polyline centroids;
        for (const ComponentRef& ref : b.chain)
            centroids.push_back(
                component_centroid(params, report.components.at(ref.t, ref.idx)));
        emit_polyline(out, pr, centroids,
                      "fill=\"none\" stroke=\"#333333\" stroke-width=\"1.5\" "
                      "stroke-dasharray=\"5 3\"",
                      false);
    }

    if (report.hull) {
        emit_polyline(out, pr, *report.hull,
                      "fill=\"none\" stroke=\"#4040c0\" stroke-width=\"1.5\"", true);
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace trackgrid
