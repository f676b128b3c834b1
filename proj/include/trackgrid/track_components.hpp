#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "trackgrid/quotient_grid.hpp"

namespace trackgrid {

/**
 * A maximal circular run of occupied cells on one track, after absorbing
 * gaps of fewer than 4 blank cells. lo..hi is a circular interval
 * (lo > hi means it wraps past index 0); `occupied` lists the underlying
 * occupied indices in traversal order starting at lo.
 */
struct ComponentInterval {
    int t = 0;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    std::vector<std::int64_t> occupied;

    friend bool operator==(const ComponentInterval&, const ComponentInterval&) = default;
};

std::vector<ComponentInterval> components_on_track(const GridParams& params, int t,
                                                   const std::vector<std::int64_t>& occupied);

// Components of every track of a mapped dataset, indexed by track number.
struct TrackComponents {
    std::vector<std::vector<ComponentInterval>> per_track;

    int max_track() const { return static_cast<int>(per_track.size()) - 1; }
    const ComponentInterval& at(int t, int idx) const {
        return per_track[static_cast<std::size_t>(t)][static_cast<std::size_t>(idx)];
    }
};

TrackComponents components_from_cells(const GridParams& params,
                                      const std::vector<AreaRef>& cells);

// Extreme dividing points of a component: us/ue on the outer circle t*r,
// ls/le on the inner circle (t-1)*r, first/last in traversal order.
struct BoundaryPoints {
    DividingPointRef us, ue, ls, le;
};

BoundaryPoints boundary_points(const GridParams& params, const ComponentInterval& c);

// All outer-circle (resp. inner-circle) dividing points of the component, in
// traversal order, consecutive duplicates removed.
std::vector<DividingPointRef> upper_vertices(const GridParams& params,
                                             const ComponentInterval& c);
std::vector<DividingPointRef> lower_vertices(const GridParams& params,
                                             const ComponentInterval& c);

// A component identified by (track, position in that track's component list).
struct ComponentRef {
    int t = 0;
    int idx = 0;

    friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
    friend bool operator<(const ComponentRef& a, const ComponentRef& b) {
        return a.t < b.t || (a.t == b.t && a.idx < b.idx);
    }
};

// A maximal chain of components on consecutive tracks linked by the
// closure-overlap adjacency; always at least two components.
struct Branch {
    std::vector<ComponentRef> chain;
};

// Whether `upper` (track t+1) lies in the one-step closure of `lower`
// (track t): the angular gap between the facing arcs on the circle t*r spans
// a chord of at most r.
bool components_adjacent(const GridParams& params, const ComponentInterval& lower,
                         const ComponentInterval& upper);

std::vector<Branch> build_branches(const GridParams& params, const TrackComponents& tc);

using Polyline = std::vector<Vec2>;

// Lower and upper boundary polylines of a branch: per level the {ls, us}
// (resp. {le, ue}) points, ordered by track.
std::pair<Polyline, Polyline> branch_boundaries(const GridParams& params,
                                                const TrackComponents& tc, const Branch& b);

struct Hole {
    ComponentRef start;             // shared component at the lower level
    ComponentRef end;               // shared component at the upper level
    std::vector<ComponentRef> side_a;
    std::vector<ComponentRef> side_b;
    Polyline boundary;              // closed, counterclockwise
};

std::vector<Hole> find_holes(const GridParams& params, const TrackComponents& tc,
                             const std::vector<Branch>& branches);

// Components that belong to no branch.
std::vector<ComponentRef> find_anomalies(const TrackComponents& tc,
                                         const std::vector<Branch>& branches);

// Outer boundary of a mapped dataset: for every angular direction the
// outermost component's outer-circle vertices, ordered by angle. Every vertex
// lies within r of the dataset when points sit at cell representatives.
Polyline hull_boundary(const GridParams& params, const std::vector<AreaRef>& cells);

}  // namespace trackgrid
