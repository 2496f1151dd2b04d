#ifndef FOLDNET_SUBTREE_SEARCH_HPP
#define FOLDNET_SUBTREE_SEARCH_HPP

#include "foldnet/mlst.hpp"

#include <atomic>
#include <chrono>
#include <span>
#include <vector>

namespace foldnet::detail {

/// Node and deadline accounting shared by the workers of one search.
class SearchBudget
{
public:
    explicit SearchBudget(const SearchOptions& options);

    /// Adds locally counted nodes; returns false once the search must stop.
    bool charge(std::uint64_t nodes);

    [[nodiscard]] bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
    [[nodiscard]] std::uint64_t nodes() const { return nodes_.load(); }
    [[nodiscard]] std::uint64_t limit() const { return limit_; }
    [[nodiscard]] bool deadline_hit() const { return deadline_hit_.load(); }

private:
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> stopped_{false};
    std::atomic<bool> deadline_hit_{false};
    std::uint64_t limit_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
};

struct SearchOutput
{
    std::vector<Cut> cuts;
    std::uint64_t interior_subtrees = 0;
};

/**
 * Single-threaded driver of the recursive subtree growth. `expand` false
 * only counts dominating subtrees.
 */
class SubtreeSearch
{
public:
    SubtreeSearch(const ShellGraph& graph, SearchBudget& budget, bool prune, bool expand);
    ~SubtreeSearch();

    SubtreeSearch(const SubtreeSearch&) = delete;
    SubtreeSearch& operator=(const SubtreeSearch&) = delete;

    /// Runs the full search below `state`.
    void run(const SearchState& state, SearchOutput& out);

    /// Visits `state` and its descendants down to `depth` more vertices,
    /// appending the states at that depth to `tasks` instead of searching
    /// them. Shallower complete results go to `out`.
    void split(const SearchState& state, int depth, std::vector<SearchState>& tasks, SearchOutput& out);

private:

    void visit(int level, const VertexSet& tree_vertices, const EdgeSet& tree_edges, const VertexSet& dominated,
               int size, std::span<const int> frontier, SearchOutput& out);
    void visit_split(SearchState state, const VertexSet& dominated, int depth, std::vector<SearchState>& tasks,
                     SearchOutput& out);
    bool can_still_dominate(const VertexSet& tree_vertices, const VertexSet& dominated, int remaining) const;
    void emit(const VertexSet& tree_vertices, const EdgeSet& tree_edges, SearchOutput& out) const;
    void append_new_edges(int vertex, const VertexSet& tree_vertices, std::vector<int>& frontier) const;
    void tick();
    void flush();

    const ShellGraph& graph_;
    SearchBudget& budget_;
    bool prune_;
    bool expand_;
    VertexSet excluded_;
    int target_ = 0;
    std::vector<int> gain_cap_;
    std::vector<VertexSet> closed_neighbourhood_;
    std::vector<std::vector<int>> buffers_;
    std::uint64_t pending_ = 0;
};

/// Dominated set of a tree: its vertices and all their neighbours.
VertexSet dominated_by(const ShellGraph& graph, const VertexSet& vertices);

/**
 * Runs every initial state (in order) with `workers` threads and
 * concatenates results in task order. Throws BudgetExceeded.
 */
SearchOutput run_searches(const ShellGraph& graph, std::span<const SearchState> states, const SearchOptions& options,
                          SearchBudget& budget, bool expand);

} // namespace foldnet::detail

#endif
