#include "trackgrid/track_components.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace trackgrid {

namespace {

constexpr std::int64_t kSeparatingBlanks = 4;  // gaps of fewer blanks merge

std::int64_t interval_length(const ComponentInterval& c, std::int64_t ring) {
    return mod_floor(c.hi - c.lo, ring) + 1;
}

// Circular arc, counterclockwise from `start` over `extent` degrees.
struct Arc {
    double start = 0.0;
    double extent = 0.0;
};

bool arc_full(const Arc& a) { return a.extent >= 360.0 - 1e-9; }

bool arc_contains(const Arc& a, double angle) {
    if (arc_full(a)) return true;
    const double d = ccw_delta_deg(a.start, angle);
    return d <= a.extent + kEps || d >= 360.0 - kEps;
}

// Angular gap between two arcs; 0 when they overlap or touch.
double arc_gap_deg(const Arc& a, const Arc& b) {
    if (arc_full(a) || arc_full(b)) return 0.0;
    const double a_end = std::fmod(a.start + a.extent, 360.0);
    const double d1 = ccw_delta_deg(a_end, b.start);
    if (d1 + b.extent <= 360.0 - a.extent + kEps) {
        const double d2 = 360.0 - a.extent - d1 - b.extent;
        return std::max(0.0, std::min(d1, d2));
    }
    return 0.0;
}

double ref_angle(const GridParams& params, const DividingPointRef& ref) {
    if (ref.t == 0) return 0.0;
    return 360.0 * static_cast<double>(ref.k) /
           static_cast<double>(static_cast<std::int64_t>(ref.t) * params.n);
}

// Arc swept by the component's outer-circle vertices.
Arc outer_arc(const GridParams& params, const ComponentInterval& c) {
    const std::int64_t ring = params.ring_size(c.t);
    if (interval_length(c, ring) == ring) return {0.0, 360.0};
    const BoundaryPoints bp = boundary_points(params, c);
    const double start = ref_angle(params, bp.us);
    return {start, ccw_delta_deg(start, ref_angle(params, bp.ue))};
}

// Arc swept by the component's inner-circle vertices.
Arc inner_arc(const GridParams& params, const ComponentInterval& c) {
    const std::int64_t ring = params.ring_size(c.t);
    if (interval_length(c, ring) == ring) return {0.0, 360.0};
    const BoundaryPoints bp = boundary_points(params, c);
    if (bp.ls.t == 0) return {0.0, 360.0};  // track 1: the inner circle is the center
    const double start = ref_angle(params, bp.ls);
    return {start, ccw_delta_deg(start, ref_angle(params, bp.le))};
}

// Angular span of the whole interval (occupied plus absorbed blanks).
Arc interval_arc(const GridParams& params, const ComponentInterval& c) {
    const std::int64_t ring = params.ring_size(c.t);
    const std::int64_t len = interval_length(c, ring);
    if (len == ring) return {0.0, 360.0};
    const double step = params.cell_degrees(c.t);
    return {static_cast<double>(c.lo) * step, static_cast<double>(len) * step};
}

std::vector<DividingPointRef> vertices_on_level(const GridParams& params,
                                                const ComponentInterval& c, bool upper) {
    const std::int64_t ring = params.ring_size(c.t);
    const std::int64_t len = interval_length(c, ring);
    std::vector<DividingPointRef> out;
    for (std::int64_t step = 0; step < len; ++step) {
        const std::int64_t w = mod_floor(c.lo + step, ring);
        for (const DividingPointRef& ref : area_vertex_refs(params, c.t, w)) {
            const bool is_upper = ref.t == c.t;
            if (is_upper != upper) continue;
            if (!out.empty() && out.back() == ref) continue;
            out.push_back(ref);
        }
    }
    return out;
}

}  // namespace

std::vector<ComponentInterval> components_on_track(const GridParams& params, int t,
                                                   const std::vector<std::int64_t>& occupied) {
    if (t < 1) throw std::domain_error("components: track must be >= 1");
    const std::int64_t ring = params.ring_size(t);
    for (std::size_t i = 0; i < occupied.size(); ++i) {
        if (occupied[i] < 0 || occupied[i] >= ring)
            throw std::domain_error("components: cell index out of range for track " +
                                    std::to_string(t));
        if (i > 0 && occupied[i] <= occupied[i - 1])
            throw std::domain_error("components: occupied indices must be sorted and unique");
    }
    if (occupied.empty()) return {};

    struct Run {
        std::int64_t lo, hi;
        std::vector<std::int64_t> members;
    };
    std::vector<Run> runs;
    for (std::int64_t j : occupied) {
        if (!runs.empty() && runs.back().hi + 1 == j) {
            runs.back().hi = j;
            runs.back().members.push_back(j);
        } else {
            runs.push_back({j, j, {j}});
        }
    }
    // circular continuation across index 0
    if (runs.size() >= 2 && runs.front().lo == 0 && runs.back().hi == ring - 1) {
        Run tail = runs.front();
        runs.erase(runs.begin());
        runs.back().hi = tail.hi;
        runs.back().members.insert(runs.back().members.end(), tail.members.begin(),
                                   tail.members.end());
    }

    const std::size_t m = runs.size();
    std::vector<bool> bridge(m);
    bool all_bridge = true;
    for (std::size_t i = 0; i < m; ++i) {
        const Run& cur = runs[i];
        const Run& next = runs[(i + 1) % m];
        const std::int64_t gap = mod_floor(next.lo - cur.hi - 1, ring);
        bridge[i] = gap < kSeparatingBlanks;
        all_bridge = all_bridge && bridge[i];
    }

    std::vector<ComponentInterval> out;
    if (all_bridge) {
        ComponentInterval full{t, 0, ring - 1, occupied};
        out.push_back(std::move(full));
        return out;
    }

    // walk circularly, grouping runs chained through bridging gaps
    std::size_t start = 0;
    while (bridge[(start + m - 1) % m]) ++start;  // a non-bridge gap exists
    std::size_t i = start;
    do {
        ComponentInterval c{t, runs[i].lo, runs[i].hi, runs[i].members};
        while (bridge[i]) {
            i = (i + 1) % m;
            c.hi = runs[i].hi;
            c.occupied.insert(c.occupied.end(), runs[i].members.begin(), runs[i].members.end());
        }
        out.push_back(std::move(c));
        i = (i + 1) % m;
    } while (i != start);

    std::sort(out.begin(), out.end(), [](const ComponentInterval& a, const ComponentInterval& b) {
        return a.lo < b.lo;
    });
    return out;
}

TrackComponents components_from_cells(const GridParams& params,
                                      const std::vector<AreaRef>& cells) {
    int max_track = 0;
    for (const AreaRef& c : cells) {
        validate_area(params, c);
        max_track = std::max(max_track, c.t);
    }
    TrackComponents tc;
    tc.per_track.resize(static_cast<std::size_t>(max_track) + 1);
    std::map<int, std::vector<std::int64_t>> occupied;
    for (const AreaRef& c : cells)
        if (!c.is_origin()) occupied[c.t].push_back(c.j);
    for (auto& [t, indices] : occupied) {
        std::sort(indices.begin(), indices.end());
        indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
        tc.per_track[static_cast<std::size_t>(t)] = components_on_track(params, t, indices);
    }
    return tc;
}

std::vector<DividingPointRef> upper_vertices(const GridParams& params,
                                             const ComponentInterval& c) {
    return vertices_on_level(params, c, true);
}

std::vector<DividingPointRef> lower_vertices(const GridParams& params,
                                             const ComponentInterval& c) {
    return vertices_on_level(params, c, false);
}

BoundaryPoints boundary_points(const GridParams& params, const ComponentInterval& c) {
    if (c.t < 1) throw std::domain_error("boundary points: track must be >= 1");
    const auto uppers = upper_vertices(params, c);
    const auto lowers = lower_vertices(params, c);
    return {uppers.front(), uppers.back(), lowers.front(), lowers.back()};
}

bool components_adjacent(const GridParams& params, const ComponentInterval& lower,
                         const ComponentInterval& upper) {
    if (upper.t != lower.t + 1)
        throw std::domain_error("adjacency: components must sit on consecutive tracks");
    // facing arcs live on the shared circle of radius lower.t * r
    const double gap = arc_gap_deg(outer_arc(params, lower), inner_arc(params, upper));
    const double chord =
        2.0 * static_cast<double>(lower.t) * params.r * std::sin(deg_to_rad(gap) / 2.0);
    return chord <= params.r + kEps;
}

std::vector<Branch> build_branches(const GridParams& params, const TrackComponents& tc) {
    std::map<ComponentRef, std::vector<ComponentRef>> children;
    std::set<ComponentRef> has_parent;
    for (int t = 1; t + 1 <= tc.max_track(); ++t) {
        const auto& lower_list = tc.per_track[static_cast<std::size_t>(t)];
        const auto& upper_list = tc.per_track[static_cast<std::size_t>(t + 1)];
        for (int a = 0; a < static_cast<int>(lower_list.size()); ++a) {
            for (int b = 0; b < static_cast<int>(upper_list.size()); ++b) {
                if (components_adjacent(params, lower_list[static_cast<std::size_t>(a)],
                                        upper_list[static_cast<std::size_t>(b)])) {
                    children[{t, a}].push_back({t + 1, b});
                    has_parent.insert({t + 1, b});
                }
            }
        }
    }

    std::vector<Branch> branches;
    std::vector<ComponentRef> path;
    const auto dfs = [&](auto&& self, ComponentRef node) -> void {
        path.push_back(node);
        const auto it = children.find(node);
        if (it == children.end() || it->second.empty()) {
            if (path.size() >= 2) branches.push_back(Branch{path});
        } else {
            for (ComponentRef child : it->second) self(self, child);
        }
        path.pop_back();
    };
    for (int t = 1; t <= tc.max_track(); ++t) {
        const auto& list = tc.per_track[static_cast<std::size_t>(t)];
        for (int idx = 0; idx < static_cast<int>(list.size()); ++idx) {
            const ComponentRef ref{t, idx};
            if (!has_parent.count(ref)) dfs(dfs, ref);
        }
    }
    return branches;
}

std::pair<Polyline, Polyline> branch_boundaries(const GridParams& params,
                                                const TrackComponents& tc, const Branch& b) {
    if (b.chain.empty()) throw std::domain_error("branch boundaries: empty branch");
    Polyline lb, ub;
    for (const ComponentRef& ref : b.chain) {
        const BoundaryPoints bp = boundary_points(params, tc.at(ref.t, ref.idx));
        lb.push_back(point_of(params, bp.ls));
        lb.push_back(point_of(params, bp.us));
        ub.push_back(point_of(params, bp.le));
        ub.push_back(point_of(params, bp.ue));
    }
    return {lb, ub};
}

namespace {

double polyline_signed_area(const Polyline& p) {
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Vec2& a = p[i];
        const Vec2& b = p[(i + 1) % p.size()];
        acc += cross(a, b);
    }
    return 0.5 * acc;
}

double component_mid_angle(const GridParams& params, const ComponentInterval& c) {
    const Arc arc = interval_arc(params, c);
    return std::fmod(arc.start + arc.extent / 2.0, 360.0);
}

Polyline hole_boundary(const GridParams& params, const TrackComponents& tc,
                       const std::vector<ComponentRef>& low_side,
                       const std::vector<ComponentRef>& high_side) {
    Polyline ring;
    for (const ComponentRef& ref : low_side) {
        const BoundaryPoints bp = boundary_points(params, tc.at(ref.t, ref.idx));
        ring.push_back(point_of(params, bp.le));
        ring.push_back(point_of(params, bp.ue));
    }
    for (auto it = high_side.rbegin(); it != high_side.rend(); ++it) {
        const BoundaryPoints bp = boundary_points(params, tc.at(it->t, it->idx));
        ring.push_back(point_of(params, bp.us));
        ring.push_back(point_of(params, bp.ls));
    }
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
    if (ring.size() > 1 && ring.front() == ring.back()) ring.pop_back();
    if (polyline_signed_area(ring) < 0.0) std::reverse(ring.begin(), ring.end());
    return ring;
}

}  // namespace

std::vector<Hole> find_holes(const GridParams& params, const TrackComponents& tc,
                             const std::vector<Branch>& branches) {
    using Signature = std::tuple<ComponentRef, ComponentRef, std::vector<ComponentRef>,
                                 std::vector<ComponentRef>>;
    std::set<Signature> seen;
    std::vector<Hole> holes;

    for (std::size_t i = 0; i < branches.size(); ++i) {
        for (std::size_t j = i + 1; j < branches.size(); ++j) {
            const auto& a = branches[i].chain;
            const auto& b = branches[j].chain;
            std::map<int, ComponentRef> by_track_b;
            for (const ComponentRef& ref : b) by_track_b[ref.t] = ref;

            std::vector<int> shared_tracks;
            std::map<int, ComponentRef> by_track_a;
            for (const ComponentRef& ref : a) {
                by_track_a[ref.t] = ref;
                const auto it = by_track_b.find(ref.t);
                if (it != by_track_b.end() && it->second == ref) shared_tracks.push_back(ref.t);
            }
            std::sort(shared_tracks.begin(), shared_tracks.end());

            for (std::size_t s = 0; s + 1 < shared_tracks.size(); ++s) {
                const int lo = shared_tracks[s];
                const int hi = shared_tracks[s + 1];
                if (hi - lo < 2) continue;  // nothing enclosed between the shared levels
                std::vector<ComponentRef> side_a, side_b;
                for (int t = lo + 1; t < hi; ++t) {
                    side_a.push_back(by_track_a.at(t));
                    side_b.push_back(by_track_b.at(t));
                }
                if (side_b < side_a) std::swap(side_a, side_b);
                const ComponentRef start = by_track_a.at(lo);
                const ComponentRef end = by_track_a.at(hi);
                if (!seen.insert({start, end, side_a, side_b}).second) continue;

                // the angularly lower side faces the hole with its ending
                // boundary, the other side with its starting boundary
                const double ref_lo =
                    interval_arc(params, tc.at(start.t, start.idx)).start;
                const double mid_a = component_mid_angle(
                    params, tc.at(side_a.front().t, side_a.front().idx));
                const double mid_b = component_mid_angle(
                    params, tc.at(side_b.front().t, side_b.front().idx));
                const bool a_low = ccw_delta_deg(ref_lo, mid_a) <= ccw_delta_deg(ref_lo, mid_b);

                Hole hole;
                hole.start = start;
                hole.end = end;
                hole.side_a = side_a;
                hole.side_b = side_b;
                hole.boundary = hole_boundary(params, tc, a_low ? side_a : side_b,
                                              a_low ? side_b : side_a);
                holes.push_back(std::move(hole));
            }
        }
    }
    return holes;
}

std::vector<ComponentRef> find_anomalies(const TrackComponents& tc,
                                         const std::vector<Branch>& branches) {
    std::set<ComponentRef> in_branch;
    for (const Branch& b : branches) in_branch.insert(b.chain.begin(), b.chain.end());
    std::vector<ComponentRef> out;
    for (int t = 1; t <= tc.max_track(); ++t) {
        const auto& list = tc.per_track[static_cast<std::size_t>(t)];
        for (int idx = 0; idx < static_cast<int>(list.size()); ++idx)
            if (!in_branch.count({t, idx})) out.push_back({t, idx});
    }
    return out;
}

Polyline hull_boundary(const GridParams& params, const std::vector<AreaRef>& cells) {
    const TrackComponents tc = components_from_cells(params, cells);
    bool any = false;
    for (const auto& list : tc.per_track) any = any || !list.empty();
    if (!any) throw std::domain_error("hull: dataset maps to no cell");

    struct Mask {
        int t;
        Arc arc;
    };
    std::vector<Mask> masks;
    for (int t = 1; t <= tc.max_track(); ++t)
        for (const ComponentInterval& c : tc.per_track[static_cast<std::size_t>(t)])
            masks.push_back({t, interval_arc(params, c)});

    std::set<std::pair<int, std::int64_t>> kept;
    for (int t = 1; t <= tc.max_track(); ++t) {
        for (const ComponentInterval& c : tc.per_track[static_cast<std::size_t>(t)]) {
            for (const DividingPointRef& v : upper_vertices(params, c)) {
                const double angle = ref_angle(params, v);
                bool covered = false;
                for (const Mask& m : masks) {
                    if (m.t > t && arc_contains(m.arc, angle)) {
                        covered = true;
                        break;
                    }
                }
                if (!covered) kept.insert({v.t, v.k});
            }
        }
    }

    struct HullVertex {
        double angle;
        double radius;
        Vec2 p;
    };
    std::vector<HullVertex> verts;
    for (const auto& [t, k] : kept) {
        const DividingPointRef ref{t, k};
        verts.push_back({ref_angle(params, ref), static_cast<double>(t) * params.r,
                         point_of(params, ref)});
    }
    std::sort(verts.begin(), verts.end(), [](const HullVertex& a, const HullVertex& b) {
        return a.angle < b.angle || (a.angle == b.angle && a.radius < b.radius);
    });
    Polyline out;
    out.reserve(verts.size());
    for (const HullVertex& v : verts) out.push_back(v.p);
    return out;
}

}  // namespace trackgrid
