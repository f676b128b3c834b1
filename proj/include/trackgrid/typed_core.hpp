#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "trackgrid/geometry.hpp"

namespace trackgrid {

enum class TypeKind { Disk, Left, Right, Dir };

/**
 * A neighborhood type: a closed disk of the given radius, its left/right
 * half, or one angular sector of it. Sector types are axis-anchored, so the
 * neighborhoods of two points are parallel translates of each other.
 */
struct TypeTag {
    TypeKind kind = TypeKind::Disk;
    double radius = 1.0;
    int sector_index = 0;
    int sector_count = 0;

    static TypeTag disk(double r);
    static TypeTag left(double r);
    static TypeTag right(double r);
    static TypeTag dir(double r, int sector_index, int sector_count);
};

struct TypeSet {
    std::vector<TypeTag> tags;

    explicit TypeSet(std::vector<TypeTag> tags_);
    // All sector_count directions of the given radius.
    static TypeSet all_directions(double r, int sector_count);
};

/**
 * A finite set of plane points. Point identity is exact coordinate equality;
 * construction rejects duplicates and empty inputs. Subsets are represented
 * as sorted unique index vectors into points().
 */
class FinitePointSpace {
public:
    explicit FinitePointSpace(std::vector<Vec2> points);

    const std::vector<Vec2>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::optional<std::size_t> find(Vec2 p) const;

private:
    std::vector<Vec2> points_;
    std::map<std::pair<double, double>, std::size_t> index_;
};

using IndexSet = std::vector<std::size_t>;

// Membership of `candidate` in the least p-neighborhood anchored at `at`.
// All neighborhoods are closed (kEps on distance/angle comparisons) and
// contain their anchor.
bool in_neighborhood(const TypeTag& p, Vec2 at, Vec2 candidate);

// Whether two anchored least neighborhoods intersect as closed plane
// regions. Every neighborhood is a circular sector (a disk and a half-disk
// are sectors of span 360 and 180), so this is an exact sector-sector test.
bool neighborhoods_overlap(const TypeTag& pa, Vec2 a, const TypeTag& pb, Vec2 b);

// Least p-neighborhood of x within the space, as indices. x must be a space
// point.
IndexSet neighborhood(const FinitePointSpace& space, const TypeTag& p, Vec2 x);

// One closure step: all y whose least p-neighborhood meets A for some p in Q.
IndexSet direct_closure(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q);

// Least fixpoint of direct_closure containing A.
IndexSet trail(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q);

// Layer decomposition of the trail: element 0 is A, element k+1 is the k+1-st
// closure minus the k-th. The list stops before the first empty layer.
std::vector<IndexSet> tracks(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q);

// Whether some per-point choice of types from Q makes the neighborhood
// overlap graph on A connected. A must be non-empty.
bool is_type_q_connected(const FinitePointSpace& space, const IndexSet& a, const TypeSet& q);

// Partition of A into maximal chains of pairwise type-Q connectivity, ordered
// by each part's lexicographically smallest point.
std::vector<IndexSet> connected_components(const FinitePointSpace& space, const IndexSet& a,
                                           const TypeSet& q);

}  // namespace trackgrid
