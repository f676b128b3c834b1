#include "trackgrid/pseudotree.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "trackgrid/errors.hpp"

namespace trackgrid {

void validate_type_ii(const PseudoTree& tree) {
    for (const auto& level : tree.levels) {
        for (std::size_t a = 0; a < level.size(); ++a) {
            for (std::size_t b = a + 1; b < level.size(); ++b) {
                const PseudoNode& left = tree.node(level[a]);
                const PseudoNode& right = tree.node(level[b]);
                std::vector<int> shared;
                for (int c : left.children)
                    if (std::find(right.children.begin(), right.children.end(), c) !=
                        right.children.end())
                        shared.push_back(c);
                if (shared.empty()) continue;
                const std::string pair_name = "siblings (" + std::to_string(level[a]) + ", " +
                                              std::to_string(level[b]) + ")";
                if (b != a + 1)
                    throw StructureError("type-II violation: non-consecutive " + pair_name +
                                         " share a child");
                if (shared.size() > 1)
                    throw StructureError("type-II violation: " + pair_name +
                                         " share more than one child");
                if (left.children.back() != shared.front() ||
                    right.children.front() != shared.front())
                    throw StructureError(
                        "type-II violation: shared child of " + pair_name +
                        " must be the last child of the left sibling and the first of the right");
            }
        }
    }
}

PseudoTree build_pseudotree(const GridParams& params, const TrackComponents& tc) {
    PseudoTree tree;
    tree.levels.resize(tc.per_track.size());

    std::vector<std::vector<int>> ids(tc.per_track.size());
    for (int t = 1; t <= tc.max_track(); ++t) {
        const auto& list = tc.per_track[static_cast<std::size_t>(t)];
        for (int idx = 0; idx < static_cast<int>(list.size()); ++idx) {
            const ComponentInterval& c = list[static_cast<std::size_t>(idx)];
            PseudoNode node;
            node.ref = {t, idx};
            node.interval = c;
            node.code_lo = encode(params, AreaRef{t, c.lo}).value;
            node.code_hi = encode(params, AreaRef{t, c.hi}).value;
            const int id = static_cast<int>(tree.nodes.size());
            tree.nodes.push_back(std::move(node));
            ids[static_cast<std::size_t>(t)].push_back(id);
            tree.levels[static_cast<std::size_t>(t)].push_back(id);
        }
    }

    for (int t = 1; t + 1 <= tc.max_track(); ++t) {
        const auto& lower_list = tc.per_track[static_cast<std::size_t>(t)];
        const auto& upper_list = tc.per_track[static_cast<std::size_t>(t + 1)];
        for (int a = 0; a < static_cast<int>(lower_list.size()); ++a) {
            for (int b = 0; b < static_cast<int>(upper_list.size()); ++b) {
                if (!components_adjacent(params, lower_list[static_cast<std::size_t>(a)],
                                         upper_list[static_cast<std::size_t>(b)]))
                    continue;
                const int parent = ids[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)];
                const int child =
                    ids[static_cast<std::size_t>(t + 1)][static_cast<std::size_t>(b)];
                tree.nodes[static_cast<std::size_t>(parent)].children.push_back(child);
                tree.nodes[static_cast<std::size_t>(child)].parents.push_back(parent);
                tree.edges.push_back({parent, child});
            }
        }
    }

    validate_type_ii(tree);
    return tree;
}

std::vector<std::vector<int>> find_cycles(const PseudoTree& tree) {
    const int n = static_cast<int>(tree.nodes.size());
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& [a, b] : tree.edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);

    // enumerate simple cycles whose smallest node is `start`; the
    // second-vs-last comparison keeps one orientation of each cycle
    const auto dfs = [&](auto&& self, int start, int v) -> void {
        path.push_back(v);
        on_path[static_cast<std::size_t>(v)] = true;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == start && path.size() >= 3 && path[1] < path.back()) {
                cycles.push_back(path);
            } else if (w > start && !on_path[static_cast<std::size_t>(w)]) {
                self(self, start, w);
            }
        }
        on_path[static_cast<std::size_t>(v)] = false;
        path.pop_back();
    };
    for (int start = 0; start < n; ++start) dfs(dfs, start, start);
    return cycles;
}

}  // namespace trackgrid
