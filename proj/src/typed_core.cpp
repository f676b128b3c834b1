#include "trackgrid/typed_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace trackgrid {

namespace {

void require_valid_tag(const TypeTag& t) {
    if (!(t.radius > 0.0)) throw std::invalid_argument("type tag: radius must be positive");
    if (t.kind == TypeKind::Dir) {
        if (t.sector_count < 2) throw std::invalid_argument("dir type: need at least 2 sectors");
        if (t.sector_index < 0 || t.sector_index >= t.sector_count)
            throw std::invalid_argument("dir type: sector index out of range");
    }
}

void require_subset(const FinitePointSpace& space, const IndexSet& a) {
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t i : a) {
        if (i >= space.size()) throw std::domain_error("index set: point not in space");
        if (!first && i <= prev) throw std::domain_error("index set: must be sorted and unique");
        prev = i;
        first = false;
    }
}

struct DisjointSet {
    std::vector<std::size_t> parent;

    explicit DisjointSet(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

TypeTag TypeTag::disk(double r) {
    TypeTag t{TypeKind::Disk, r, 0, 0};
    require_valid_tag(t);
    return t;
}

TypeTag TypeTag::left(double r) {
    TypeTag t{TypeKind::Left, r, 0, 0};
    require_valid_tag(t);
    return t;
}

TypeTag TypeTag::right(double r) {
    TypeTag t{TypeKind::Right, r, 0, 0};
    require_valid_tag(t);
    return t;
}

TypeTag TypeTag::dir(double r, int sector_index, int sector_count) {
    TypeTag t{TypeKind::Dir, r, sector_index, sector_count};
    require_valid_tag(t);
    return t;
}

TypeSet::TypeSet(std::vector<TypeTag> tags_) : tags(std::move(tags_)) {
    if (tags.empty()) throw std::invalid_argument("type set: must not be empty");
    for (const TypeTag& t : tags) require_valid_tag(t);
}

TypeSet TypeSet::all_directions(double r, int sector_count) {
    std::vector<TypeTag> tags;
    tags.reserve(static_cast<std::size_t>(sector_count));
    for (int i = 0; i < sector_count; ++i) tags.push_back(TypeTag::dir(r, i, sector_count));
    return TypeSet(std::move(tags));
}

FinitePointSpace::FinitePointSpace(std::vector<Vec2> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("point space: must not be empty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        auto [it, inserted] = index_.insert({{points_[i].x, points_[i].y}, i});
        if (!inserted) throw std::invalid_argument("point space: duplicate point");
    }
}

std::optional<std::size_t> FinitePointSpace::find(Vec2 p) const {
    auto it = index_.find({p.x, p.y});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool in_neighborhood(const TypeTag& p, Vec2 at, Vec2 candidate) {
    if (candidate == at) return true;
    if (distance(at, candidate) > p.radius + kEps) return false;
    switch (p.kind) {
        case TypeKind::Disk:
            return true;
        case TypeKind::Left:
            return candidate.x <= at.x + kEps;
        case TypeKind::Right:
            return candidate.x >= at.x - kEps;
        case TypeKind::Dir: {
            const double a = angle_deg(candidate - at);
            const double lo = 360.0 * p.sector_index / p.sector_count;
            const double hi = 360.0 * (p.sector_index + 1) / p.sector_count;
            if (a >= lo - kEps && a <= hi + kEps) return true;
            // wrap: angles just below 360 belong to the sector starting at 0
            if (lo <= kEps && a >= 360.0 - kEps) return true;
            return hi >= 360.0 - kEps && a <= kEps;
        }
    }
    return false;
}

IndexSet neighborhood(const FinitePointSpace& space, const TypeTag& p, Vec2 x) {
    require_valid_tag(p);
    if (!space.find(x)) throw std::domain_error("neighborhood: anchor point not in space");
    IndexSet out;
    for (std::size_t i = 0; i < space.size(); ++i)
        if (in_neighborhood(p, x, space.points()[i])) out.push_back(i);
    return out;
}

IndexSet direct_closure(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q) {
    require_subset(space, a);
    IndexSet out;
    for (std::size_t y = 0; y < space.size(); ++y) {
        const Vec2 py = space.points()[y];
        bool hit = false;
        for (const TypeTag& tag : q.tags) {
            for (std::size_t xi : a) {
                if (in_neighborhood(tag, py, space.points()[xi])) {
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        if (hit) out.push_back(y);
    }
    return out;
}

IndexSet trail(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q) {
    IndexSet current = a;
    require_subset(space, a);
    for (;;) {
        IndexSet next = direct_closure(space, current, q);
        if (next == current) return current;
        current = std::move(next);
    }
}

std::vector<IndexSet> tracks(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q) {
    require_subset(space, a);
    std::vector<IndexSet> layers{a};
    IndexSet closed = a;
    for (;;) {
        IndexSet next = direct_closure(space, closed, q);
        IndexSet layer;
        std::set_difference(next.begin(), next.end(), closed.begin(), closed.end(),
                            std::back_inserter(layer));
        if (layer.empty()) return layers;
        layers.push_back(layer);
        closed = std::move(next);
    }
}

namespace {

// A neighborhood as a closed plane region: circular sector at `apex` with
// radius `radius`, counterclockwise from angle `a0` over `span` degrees.
struct SectorRegion {
    Vec2 apex;
    double radius;
    double a0;
    double span;
};

SectorRegion region_of(const TypeTag& tag, Vec2 at) {
    switch (tag.kind) {
        case TypeKind::Disk:
            return {at, tag.radius, 0.0, 360.0};
        case TypeKind::Left:
            return {at, tag.radius, 90.0, 180.0};
        case TypeKind::Right:
            return {at, tag.radius, 270.0, 180.0};
        case TypeKind::Dir:
            return {at, tag.radius, 360.0 * tag.sector_index / tag.sector_count,
                    360.0 / tag.sector_count};
    }
    return {at, tag.radius, 0.0, 360.0};
}

bool angle_in_span(double angle, double a0, double span) {
    if (span >= 360.0 - kEps) return true;
    const double d = ccw_delta_deg(a0, angle);
    return d <= span + kEps || d >= 360.0 - kEps;
}

bool point_in_sector(Vec2 p, const SectorRegion& s) {
    const Vec2 rel = p - s.apex;
    const double d = norm(rel);
    if (d > s.radius + kEps) return false;
    if (d <= kEps) return true;
    return angle_in_span(angle_deg(rel), s.a0, s.span);
}

bool on_segment_box(Vec2 p, Vec2 a, Vec2 b) {
    return p.x >= std::min(a.x, b.x) - kEps && p.x <= std::max(a.x, b.x) + kEps &&
           p.y >= std::min(a.y, b.y) - kEps && p.y <= std::max(a.y, b.y) + kEps;
}

bool segments_cross(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double o1 = cross(b - a, c - a);
    const double o2 = cross(b - a, d - a);
    const double o3 = cross(d - c, a - c);
    const double o4 = cross(d - c, b - c);
    if (((o1 > kEps && o2 < -kEps) || (o1 < -kEps && o2 > kEps)) &&
        ((o3 > kEps && o4 < -kEps) || (o3 < -kEps && o4 > kEps)))
        return true;
    if (std::abs(o1) <= kEps && on_segment_box(c, a, b)) return true;
    if (std::abs(o2) <= kEps && on_segment_box(d, a, b)) return true;
    if (std::abs(o3) <= kEps && on_segment_box(a, c, d)) return true;
    return std::abs(o4) <= kEps && on_segment_box(b, c, d);
}

// Intersection of segment [a, b] with the arc of `s`.
bool segment_crosses_arc(Vec2 a, Vec2 b, const SectorRegion& s) {
    const Vec2 u = b - a;
    const Vec2 w = a - s.apex;
    const double qa = dot(u, u);
    if (qa <= kEps * kEps) return point_in_sector(a, s) && std::abs(norm(w) - s.radius) <= kEps;
    const double qb = 2.0 * dot(u, w);
    const double qc = dot(w, w) - s.radius * s.radius;
    const double disc = qb * qb - 4.0 * qa * qc;
    if (disc < -kEps) return false;
    const double root = std::sqrt(std::max(0.0, disc));
    for (const double t : {(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)}) {
        if (t < -kEps || t > 1.0 + kEps) continue;
        const Vec2 p = a + t * u;
        if (angle_in_span(angle_deg(p - s.apex), s.a0, s.span)) return true;
    }
    return false;
}

bool arcs_cross(const SectorRegion& s1, const SectorRegion& s2) {
    const Vec2 delta = s2.apex - s1.apex;
    const double d = norm(delta);
    if (d > s1.radius + s2.radius + kEps) return false;
    if (d <= kEps) {
        if (std::abs(s1.radius - s2.radius) > kEps) return false;
        // same circle: do the angular spans meet?
        return angle_in_span(s1.a0, s2.a0, s2.span) || angle_in_span(s2.a0, s1.a0, s1.span) ||
               angle_in_span(std::fmod(s1.a0 + s1.span, 360.0), s2.a0, s2.span);
    }
    if (d < std::abs(s1.radius - s2.radius) - kEps) return false;
    const double a = (s1.radius * s1.radius - s2.radius * s2.radius + d * d) / (2.0 * d);
    const double h2 = s1.radius * s1.radius - a * a;
    if (h2 < -kEps) return false;
    const double h = std::sqrt(std::max(0.0, h2));
    const Vec2 u = (1.0 / d) * delta;
    const Vec2 v{-u.y, u.x};
    const Vec2 mid = s1.apex + a * u;
    for (const Vec2 p : {mid + h * v, mid - h * v}) {
        if (angle_in_span(angle_deg(p - s1.apex), s1.a0, s1.span) &&
            angle_in_span(angle_deg(p - s2.apex), s2.a0, s2.span))
            return true;
    }
    return false;
}

void radial_edges(const SectorRegion& s, std::vector<std::pair<Vec2, Vec2>>& out) {
    if (s.span >= 360.0 - kEps) return;
    out.push_back({s.apex, s.apex + polar(s.radius, s.a0)});
    out.push_back({s.apex, s.apex + polar(s.radius, s.a0 + s.span)});
}

}  // namespace

bool neighborhoods_overlap(const TypeTag& pa, Vec2 a, const TypeTag& pb, Vec2 b) {
    const SectorRegion s1 = region_of(pa, a);
    const SectorRegion s2 = region_of(pb, b);
    if (distance(a, b) > s1.radius + s2.radius + kEps) return false;
    if (point_in_sector(s1.apex, s2) || point_in_sector(s2.apex, s1)) return true;

    std::vector<std::pair<Vec2, Vec2>> edges1, edges2;
    radial_edges(s1, edges1);
    radial_edges(s2, edges2);
    for (const auto& [p1, p2] : edges1) {
        for (const auto& [q1, q2] : edges2)
            if (segments_cross(p1, p2, q1, q2)) return true;
        if (segment_crosses_arc(p1, p2, s2)) return true;
    }
    for (const auto& [q1, q2] : edges2)
        if (segment_crosses_arc(q1, q2, s1)) return true;
    return arcs_cross(s1, s2);
}

namespace {

// Machinery for type-Q connectivity. Neighborhood intersections are taken as
// closed region overlaps, so two points of A may touch through empty space.
class ConnectivityContext {
public:
    ConnectivityContext(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q)
        : space_(space), a_(a), q_(q) {
        memo_.assign(a.size() * a.size() * q.tags.size() * q.tags.size(), -1);
    }

    std::size_t count() const { return a_.size(); }
    std::size_t type_count() const { return q_.tags.size(); }

    // U(ta, a[i]) and U(tb, a[j]) share a space point.
    bool pair_intersects(std::size_t i, int ta, std::size_t j, int tb) {
        auto& slot = memo_[((i * a_.size() + j) * type_count() + ta) * type_count() + tb];
        if (slot < 0) slot = compute(i, ta, j, tb) ? 1 : 0;
        return slot == 1;
    }

    bool any_pair_combo(std::size_t i, std::size_t j) {
        for (int ta = 0; ta < static_cast<int>(type_count()); ++ta)
            for (int tb = 0; tb < static_cast<int>(type_count()); ++tb)
                if (pair_intersects(i, ta, j, tb)) return true;
        return false;
    }

    // a[j] lies inside some neighborhood of a[i].
    bool sees(std::size_t i, std::size_t j) {
        const Vec2 from = space_.points()[a_[i]];
        const Vec2 to = space_.points()[a_[j]];
        for (const TypeTag& tag : q_.tags)
            if (in_neighborhood(tag, from, to)) return true;
        return false;
    }

private:
    bool compute(std::size_t i, int ta, std::size_t j, int tb) {
        return neighborhoods_overlap(q_.tags[static_cast<std::size_t>(ta)],
                                     space_.points()[a_[i]],
                                     q_.tags[static_cast<std::size_t>(tb)],
                                     space_.points()[a_[j]]);
    }

    const FinitePointSpace& space_;
    const IndexSet& a_;
    const TypeSet& q_;
    std::vector<signed char> memo_;
};

bool graph_connected(const std::vector<std::vector<std::size_t>>& adj) {
    if (adj.empty()) return true;
    std::vector<bool> seen(adj.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t visited = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == adj.size();
}

// Connectivity when every point uses the single fixed type `tag`.
bool uniform_connected(ConnectivityContext& ctx, int tag) {
    const std::size_t n = ctx.count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (ctx.pair_intersects(i, tag, j, tag)) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    return graph_connected(adj);
}

// If some point is reachable from every other point along "x sees next hop"
// steps, orienting a spanning in-tree toward it realizes connectivity: each
// point picks the type that covers its parent.
bool sink_tree_exists(ConnectivityContext& ctx) {
    const std::size_t n = ctx.count();
    std::vector<std::vector<std::size_t>> reverse(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && ctx.sees(i, j)) reverse[j].push_back(i);
    for (std::size_t root = 0; root < n; ++root) {
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{root};
        seen[root] = true;
        std::size_t visited = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : reverse[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++visited;
                    stack.push_back(w);
                }
        }
        if (visited == n) return true;
    }
    return false;
}

// Exact search over per-point type assignments. Prunes whenever even the
// optimistic graph (undecided pairs assumed connected) falls apart.
bool assignment_search(ConnectivityContext& ctx, std::vector<int>& chosen, std::size_t next) {
    const std::size_t n = ctx.count();
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool edge;
            if (i < next && j < next) {
                edge = ctx.pair_intersects(i, chosen[i], j, chosen[j]);
            } else {
                edge = ctx.any_pair_combo(i, j);
            }
            if (edge) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    if (!graph_connected(adj)) return false;
    if (next == n) return true;
    for (int tag = 0; tag < static_cast<int>(ctx.type_count()); ++tag) {
        chosen[next] = tag;
        if (assignment_search(ctx, chosen, next + 1)) return true;
    }
    return false;
}

}  // namespace

bool is_type_q_connected(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q) {
    require_subset(space, a);
    if (a.empty()) throw std::domain_error("type-Q connectivity: empty set");
    if (a.size() == 1) return true;

    ConnectivityContext ctx(space, a, q);
    for (int tag = 0; tag < static_cast<int>(q.tags.size()); ++tag)
        if (uniform_connected(ctx, tag)) return true;
    if (sink_tree_exists(ctx)) return true;

    std::vector<int> chosen(a.size(), 0);
    return assignment_search(ctx, chosen, 0);
}

std::vector<IndexSet> connected_components(const FinitePointSpace& space, const IndexSet& a,
                                           const TypeSet& q) {
    require_subset(space, a);
    if (a.empty()) return {};

    ConnectivityContext ctx(space, a, q);
    DisjointSet dsu(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (ctx.any_pair_combo(i, j)) dsu.unite(i, j);

    std::map<std::size_t, IndexSet> groups;
    for (std::size_t i = 0; i < a.size(); ++i) groups[dsu.find(i)].push_back(a[i]);

    std::vector<IndexSet> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end(), [&](const IndexSet& lhs, const IndexSet& rhs) {
        const auto min_point = [&](const IndexSet& s) {
            Vec2 best = space.points()[s.front()];
            for (std::size_t i : s) {
                const Vec2 p = space.points()[i];
                if (LexLess{}(p, best)) best = p;
            }
            return best;
        };
        return LexLess{}(min_point(lhs), min_point(rhs));
    });
    return out;
}

}  // namespace trackgrid
