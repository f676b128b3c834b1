#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "trackgrid/quotient_grid.hpp"

namespace trackgrid {

/**
 * Full point-location record. `track` is ceil(|x - center| / r) (points on a
 * track circle belong to the inner track), `boundary_index` the dividing-point
 * slot below the point's angle, `sector` the base sector, `area` the cell
 * index within the track. The grid center itself locates to the origin cell.
 */
struct LocatedPoint {
    Vec2 source;
    int track = 0;
    double theta_deg = 0.0;
    std::int64_t boundary_index = 0;
    std::int64_t sector = 0;
    std::int64_t area = 0;

    AreaRef area_ref() const { return track == 0 ? AreaRef::origin() : AreaRef{track, area}; }
};

LocatedPoint locate_detail(const GridParams& params, Vec2 x);
AreaRef locate(const GridParams& params, Vec2 x);

// Closed angular-cone test written with the cosine comparisons: x lies
// between the two boundary rays of cell (t, j) as seen from the center.
bool cone_contains(const GridParams& params, int t, std::int64_t j, Vec2 x);

struct MappedDataset {
    std::vector<AreaRef> cells;  // deduplicated, sorted by encode
    std::size_t origin_hits = 0;
};

MappedDataset map_dataset(const GridParams& params, const std::vector<Vec2>& points);

// An implicit curve f(x, y) = 0; the evaluator must be total on the scan
// window, non-finite values raise CurveEvalError.
struct ImplicitCurve {
    std::function<double(double, double)> evaluator;
};

// Cells met by the curve inside the disc of radius t0*r: roots on every track
// circle and on every dividing-ray line (full line through the center),
// found by sampled sign-change scans refined with bisection.
std::vector<AreaRef> map_curve(const GridParams& params, const ImplicitCurve& curve, int t0);

}  // namespace trackgrid
