#ifndef FOLDNET_MLST_HPP
#define FOLDNET_MLST_HPP

#include "foldnet/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace foldnet {

inline constexpr std::uint64_t default_node_budget = 10'000'000'000ULL;

struct SearchOptions
{
    /// Recursion states visited before the search gives up.
    std::uint64_t node_budget = default_node_budget;
    std::optional<std::chrono::milliseconds> time_limit;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned workers = 0;
    /// Skip subtrees that can no longer reach domination. Never changes
    /// the result, only the number of states visited.
    bool prune = true;
};

struct SearchStatistics
{
    std::uint64_t nodes = 0;
    std::uint64_t interior_subtrees = 0;
    double wall_seconds = 0;
};

/**
 * One state of the subtree growth: the tree grown so far, the frontier of
 * candidate edges in first-in-first-out order, vertices that may never join
 * the tree, and the tree size at which growth stops.
 */
struct SearchState
{
    VertexSet tree_vertices;
    EdgeSet tree_edges;
    std::vector<int> frontier;
    VertexSet excluded;
    int target_size = 1;
};

struct MlstResult
{
    int leaf_count = 0;
    int interior_size = 0;
    std::vector<int> roots;
    /// Sorted by CutOrder.
    std::vector<Cut> cuts;
    SearchStatistics stats;
};

/// Minimum-degree vertex (lowest index on ties) followed by its neighbours.
std::vector<int> root_set(const ShellGraph& graph);

/// Initial state for the search rooted at `root`; edges into `excluded`
/// never enter the frontier.
SearchState root_state(const ShellGraph& graph, int root, const VertexSet& excluded, int target_size);

/// Every vertex is in the set or adjacent to it.
bool is_dominating(const ShellGraph& graph, const VertexSet& vertices);

/// Number of spanning trees that keep exactly `interior` as non-leaves.
std::uint64_t expansion_count(const ShellGraph& graph, const VertexSet& interior);

/**
 * All ways of attaching each vertex outside `interior` to one neighbour
 * inside it, each appended to `interior_edges`.
 */
std::vector<Cut> expand_interior(const ShellGraph& graph, const VertexSet& interior, const EdgeSet& interior_edges);

/**
 * Grows every subtree reachable from `state` up to `state.target_size`
 * vertices and expands the dominating ones into spanning subgraphs. Each
 * subtree is produced once: an edge taken from the frontier is removed
 * from it for all later siblings.
 */
std::vector<Cut> grow_recursive(const ShellGraph& graph, const SearchState& state, const SearchOptions& options = {},
                                SearchStatistics* stats = nullptr);

/**
 * Every labelled maximum leaf spanning tree. Interior sizes are tried in
 * increasing order; for each, one search per root with earlier roots
 * forced to be leaves. Throws BudgetExceeded.
 */
MlstResult enumerate_mlsts(const ShellGraph& graph, const SearchOptions& options = {});

/// Dominating subtrees with `target_size` vertices over all roots, without
/// expanding them.
std::uint64_t count_dominating_subtrees(const ShellGraph& graph, int target_size, const SearchOptions& options = {});

/**
 * Local rule: attach all neighbours of the highest-degree vertex, then
 * repeatedly attach all outside neighbours of the tree vertex that has
 * most of them. Ties go to the lowest index.
 */
Cut greedy_mlst(const ShellGraph& graph);

} // namespace foldnet

#endif
