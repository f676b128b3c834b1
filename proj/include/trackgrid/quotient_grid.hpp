#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "trackgrid/geometry.hpp"

namespace trackgrid {

/**
 * Parameters of the polar cell grid: annular tracks of width r around
 * `center`, each circle split into n equal base sectors. Track t carries
 * (2t-1)*n cells.
 */
struct GridParams {
    double r;
    int n;
    Vec2 center{0.0, 0.0};

    GridParams(double r_, int n_, Vec2 center_ = {});

    std::int64_t ring_size(int t) const { return static_cast<std::int64_t>(2 * t - 1) * n; }
    // Angular width of one cell of track t, degrees.
    double cell_degrees(int t) const { return 360.0 / static_cast<double>(ring_size(t)); }
};

// A cell of the grid: track t >= 1 with area index j in [0, (2t-1)n), or the
// distinguished origin cell (t == 0, j == 0).
struct AreaRef {
    int t = 0;
    std::int64_t j = 0;

    static AreaRef origin() { return {0, 0}; }
    bool is_origin() const { return t == 0; }

    friend bool operator==(const AreaRef&, const AreaRef&) = default;
    friend bool operator<(const AreaRef& a, const AreaRef& b) {
        return a.t < b.t || (a.t == b.t && a.j < b.j);
    }
};

// Linear enumeration of the non-origin cells; track t occupies
// [(t-1)^2 n, t^2 n).
struct CellCode {
    std::int64_t value = 0;

    friend bool operator==(const CellCode&, const CellCode&) = default;
    friend bool operator<(const CellCode& a, const CellCode& b) { return a.value < b.value; }
};

// A dividing point: on the circle of radius t*r at angle 360k/(tn) degrees.
// t == 0 denotes the grid center.
struct DividingPointRef {
    int t = 0;
    std::int64_t k = 0;

    friend bool operator==(const DividingPointRef&, const DividingPointRef&) = default;
};

struct BoundingBox {
    Vec2 min;
    Vec2 max;
};

// Throws std::domain_error if `a` is not a valid cell for `params`.
void validate_area(const GridParams& params, const AreaRef& a);

// Dividing point H^t_k. Valid k range is [0, t*n] (both endpoints of the full
// circle are accepted; they coincide). t == 0 requires k == 0 and returns the
// center.
Vec2 dividing_point(const GridParams& params, int t, std::int64_t k);

// The three dividing points bounding cell (t, w), with t >= 1, as references
// (upper level t first for even in-sector offsets) and as coordinates. The
// k indices are normalized modulo t*n.
std::array<DividingPointRef, 3> area_vertex_refs(const GridParams& params, int t, std::int64_t w);
std::array<Vec2, 3> area_vertices(const GridParams& params, int t, std::int64_t w);

Vec2 point_of(const GridParams& params, const DividingPointRef& ref);

// Representative point of cell (t, j): mid-annulus radius (2t-1)r/2, angle at
// the middle of the cell's angular span.
Vec2 representative(const GridParams& params, int t, std::int64_t j);
Vec2 representative(const GridParams& params, const AreaRef& a);  // origin -> center

// Distance between two cells = distance between their representatives.
double metric(const GridParams& params, const AreaRef& a, const AreaRef& b);

CellCode encode(const GridParams& params, const AreaRef& a);  // origin -> domain error
AreaRef decode(const GridParams& params, CellCode code);

// Per-code (t-1)^2 values, t taken from decode.
std::vector<std::int64_t> track_sequence(const GridParams& params,
                                         const std::vector<CellCode>& codes);

// Smallest sector count n >= 2 for which the chord spanned by two base
// sectors on the innermost circle does not exceed r. Scale-free: always 12.
int min_sectors(double r);

// X extended with the lattice {(a*r, b*r)} restricted to `window` (inclusive
// bounds). Points already present are not duplicated.
std::vector<Vec2> pad(const GridParams& params, const std::vector<Vec2>& points,
                      const BoundingBox& window);

}  // namespace trackgrid
