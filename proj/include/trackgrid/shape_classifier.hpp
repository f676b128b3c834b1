#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trackgrid/geometry.hpp"

namespace trackgrid {

// Direction of the step x -> y measured against a partition of the full
// angle into sector_count equal sectors; boundary angles fall into the
// sector they start.
struct DirectionStep {
    double pair_distance = 0.0;
    int sector = 0;
    int sector_count = 0;
};

DirectionStep pair_direction(Vec2 x, Vec2 y, int sector_count);

// The common sector index when every consecutive step of the sequence points
// into the same sector, nullopt otherwise.
std::optional<int> classify_line(const std::vector<Vec2>& points, int sector_count);

struct PolylineDecomposition {
    struct Side {
        std::size_t first = 0;  // index of the side's first point
        std::size_t last = 0;   // index of the side's last point
        int direction = 0;
    };
    std::vector<Side> sides;
    std::vector<std::size_t> vertices;  // point indices where the direction changes
};

// Splits the sequence into maximal constant-direction runs.
PolylineDecomposition decompose_polyline(const std::vector<Vec2>& points, int sector_count);

}  // namespace trackgrid
