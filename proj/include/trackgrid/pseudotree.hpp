#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "trackgrid/track_components.hpp"

namespace trackgrid {

/**
 * Leveled component graph: level t holds the components of track t in order,
 * edges join adjacent components on consecutive tracks. Two consecutive
 * siblings may share at most one child, which must be the last child of the
 * left sibling and the first child of the right one.
 */
struct PseudoNode {
    ComponentRef ref;
    ComponentInterval interval;
    std::int64_t code_lo = 0;  // encode(t, lo)
    std::int64_t code_hi = 0;  // encode(t, hi)
    std::vector<int> children;  // node ids, ordered
    std::vector<int> parents;   // node ids, ordered
};

struct PseudoTree {
    std::vector<PseudoNode> nodes;
    std::vector<std::vector<int>> levels;        // levels[t] = node ids of track t
    std::vector<std::pair<int, int>> edges;      // (parent, child) node ids

    const PseudoNode& node(int id) const { return nodes[static_cast<std::size_t>(id)]; }
};

// Throws StructureError when the shared-child rules are violated.
void validate_type_ii(const PseudoTree& tree);

PseudoTree build_pseudotree(const GridParams& params, const TrackComponents& tc);

// All simple cycles of the undirected edge graph, each as an ordered node
// list starting at its smallest node id.
std::vector<std::vector<int>> find_cycles(const PseudoTree& tree);

}  // namespace trackgrid
