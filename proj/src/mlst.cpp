#include "foldnet/mlst.hpp"

#include "subtree_search.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace foldnet {

std::vector<int> root_set(const ShellGraph& graph)
{
    int pick = 0;
    for (int v = 1; v < graph.vertex_count(); ++v)
        if (graph.degree(v) < graph.degree(pick))
            pick = v;
    std::vector<int> roots{pick};
    roots.insert(roots.end(), graph.neighbours(pick).begin(), graph.neighbours(pick).end());
    return roots;
}

SearchState root_state(const ShellGraph& graph, int root, const VertexSet& excluded, int target_size)
{
    SearchState state;
    state.tree_vertices.set(root);
    state.excluded = excluded;
    state.target_size = target_size;
    const auto& incident = graph.incident_edges(root);
    for (std::size_t k = 0; k < incident.size(); ++k)
        if (!excluded.test(graph.neighbours(root)[k]))
            state.frontier.push_back(incident[k]);
    return state;
}

bool is_dominating(const ShellGraph& graph, const VertexSet& vertices)
{
    return detail::dominated_by(graph, vertices).count() == graph.vertex_count();
}

std::uint64_t expansion_count(const ShellGraph& graph, const VertexSet& interior)
{
    std::uint64_t product = 1;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (!interior.test(v))
            product *= static_cast<std::uint64_t>(graph.neighbour_set(v).intersection_count(interior));
    return product;
}

std::vector<Cut> expand_interior(const ShellGraph& graph, const VertexSet& interior, const EdgeSet& interior_edges)
{
    std::vector<Cut> trees{Cut{interior_edges}};
    for (int v = 0; v < graph.vertex_count(); ++v) {
        if (interior.test(v))
            continue;
        std::vector<int> options;
        const auto& incident = graph.incident_edges(v);
        for (std::size_t k = 0; k < incident.size(); ++k)
            if (interior.test(graph.neighbours(v)[k]))
                options.push_back(incident[k]);
        if (options.empty())
            return {};
        std::vector<Cut> next;
        next.reserve(trees.size() * options.size());
        for (int e : options)
            for (const auto& tree : trees) {
                Cut extended = tree;
                extended.edges.set(e);
                next.push_back(extended);
            }
        trees = std::move(next);
    }
    return trees;
}

std::vector<Cut> grow_recursive(const ShellGraph& graph, const SearchState& state, const SearchOptions& options,
                                SearchStatistics* stats)
{
    detail::SearchBudget budget(options);
    auto out = detail::run_searches(graph, std::span(&state, 1), options, budget, true);
    if (stats) {
        stats->nodes += budget.nodes();
        stats->interior_subtrees += out.interior_subtrees;
    }
    return std::move(out.cuts);
}

namespace {

std::vector<SearchState> root_states(const ShellGraph& graph, const std::vector<int>& roots, int target_size)
{
    std::vector<SearchState> states;
    VertexSet excluded;
    for (int r : roots) {
        states.push_back(root_state(graph, r, excluded, target_size));
        excluded.set(r);
    }
    return states;
}

} // namespace

MlstResult enumerate_mlsts(const ShellGraph& graph, const SearchOptions& options)
{
    if (graph.vertex_count() < 2)
        throw std::invalid_argument("maximum leaf spanning trees need at least 2 vertices");
    if (!graph.connected())
        throw std::invalid_argument("graph is not connected");
    auto start = std::chrono::steady_clock::now();
    MlstResult result;
    result.roots = root_set(graph);
    detail::SearchBudget budget(options);
    for (int size = 1; size <= graph.vertex_count(); ++size) {
        auto states = root_states(graph, result.roots, size);
        auto out = detail::run_searches(graph, states, options, budget, true);
        result.stats.interior_subtrees = out.interior_subtrees;
        if (!out.cuts.empty()) {
            result.interior_size = size;
            result.cuts = std::move(out.cuts);
            break;
        }
    }
    std::sort(result.cuts.begin(), result.cuts.end(), CutOrder{});
    if (std::adjacent_find(result.cuts.begin(), result.cuts.end()) != result.cuts.end())
        throw std::logic_error("duplicate spanning tree emitted");
    result.leaf_count = static_cast<int>(cut_leaves(graph, result.cuts.front()).size());
    result.stats.nodes = budget.nodes();
    result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::uint64_t count_dominating_subtrees(const ShellGraph& graph, int target_size, const SearchOptions& options)
{
    detail::SearchBudget budget(options);
    auto states = root_states(graph, root_set(graph), target_size);
    return detail::run_searches(graph, states, options, budget, false).interior_subtrees;
}

Cut greedy_mlst(const ShellGraph& graph)
{
    Cut tree;
    VertexSet in_tree;
    int seed = 0;
    for (int v = 1; v < graph.vertex_count(); ++v)
        if (graph.degree(v) > graph.degree(seed))
            seed = v;
    in_tree.set(seed);
    int grow = seed;
    while (grow >= 0) {
        const auto& incident = graph.incident_edges(grow);
        for (std::size_t k = 0; k < incident.size(); ++k) {
            int w = graph.neighbours(grow)[k];
            if (!in_tree.test(w)) {
                in_tree.set(w);
                tree.edges.set(incident[k]);
            }
        }
        grow = -1;
        int best = 0;
        in_tree.for_each([&](int v) {
            int outside = graph.degree(v) - graph.neighbour_set(v).intersection_count(in_tree);
            if (outside > best) {
                best = outside;
                grow = v;
            }
        });
    }
    return tree;
}

} // namespace foldnet
