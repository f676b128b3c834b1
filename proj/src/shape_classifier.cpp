#include "trackgrid/shape_classifier.hpp"

#include <stdexcept>

namespace trackgrid {

DirectionStep pair_direction(Vec2 x, Vec2 y, int sector_count) {
    if (sector_count < 2) throw std::domain_error("pair direction: need at least 2 sectors");
    if (x == y) throw std::domain_error("pair direction: coincident points");
    const double a = angle_deg(y - x);
    const std::int64_t sector =
        mod_floor(snapped_floor(a * sector_count / 360.0), sector_count);
    return {distance(x, y), static_cast<int>(sector), sector_count};
}

std::optional<int> classify_line(const std::vector<Vec2>& points, int sector_count) {
    if (points.size() < 2) throw std::domain_error("line classification: need at least 2 points");
    int common = -1;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        const DirectionStep step = pair_direction(points[i], points[i + 1], sector_count);
        if (common < 0)
            common = step.sector;
        else if (step.sector != common)
            return std::nullopt;
    }
    return common;
}

PolylineDecomposition decompose_polyline(const std::vector<Vec2>& points, int sector_count) {
    if (points.size() < 3)
        throw std::domain_error("polyline decomposition: need at least 3 points");
    std::vector<int> dirs;
    dirs.reserve(points.size() - 1);
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        dirs.push_back(pair_direction(points[i], points[i + 1], sector_count).sector);

    PolylineDecomposition out;
    std::size_t run_start = 0;
    for (std::size_t i = 1; i <= dirs.size(); ++i) {
        if (i == dirs.size() || dirs[i] != dirs[run_start]) {
            out.sides.push_back({run_start, i, dirs[run_start]});
            if (i < dirs.size()) out.vertices.push_back(i);
            run_start = i;
        }
    }
    return out;
}

}  // namespace trackgrid
