#include "subtree_search.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>

namespace foldnet::detail {

namespace {

constexpr std::uint64_t flush_interval = 1U << 12;

} // namespace

SearchBudget::SearchBudget(const SearchOptions& options) : limit_(options.node_budget)
{
    if (options.time_limit)
        deadline_ = std::chrono::steady_clock::now() + *options.time_limit;
}

bool SearchBudget::charge(std::uint64_t nodes)
{
    auto total = nodes_.fetch_add(nodes) + nodes;
    if (total > limit_)
        stopped_ = true;
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_) {
        deadline_hit_ = true;
        stopped_ = true;
    }
    return !stopped_;
}

VertexSet dominated_by(const ShellGraph& graph, const VertexSet& vertices)
{
    VertexSet result = vertices;
    vertices.for_each([&](int v) { result |= graph.neighbour_set(v); });
    return result;
}

SubtreeSearch::SubtreeSearch(const ShellGraph& graph, SearchBudget& budget, bool prune, bool expand) :
    graph_(graph), budget_(budget), prune_(prune), expand_(expand)
{
    const int n = graph.vertex_count();
    gain_cap_.resize(static_cast<std::size_t>(n));
    closed_neighbourhood_.resize(static_cast<std::size_t>(n));
    for (int w = 0; w < n; ++w) {
        // When w joins, its parent and the parent's neighbours are already
        // dominated, so w newly dominates at most this many vertices.
        int shared = graph.degree(w);
        for (int p : graph.neighbours(w))
            shared = std::min(shared, graph.neighbour_set(w).intersection_count(graph.neighbour_set(p)));
        gain_cap_[static_cast<std::size_t>(w)] = std::max(0, graph.degree(w) - 1 - shared);
        closed_neighbourhood_[static_cast<std::size_t>(w)] = graph.neighbour_set(w);
        closed_neighbourhood_[static_cast<std::size_t>(w)].set(w);
    }
    buffers_.resize(static_cast<std::size_t>(n) + 2);
    for (auto& b : buffers_)
        b.reserve(static_cast<std::size_t>(graph.edge_count()));
}

SubtreeSearch::~SubtreeSearch()
{
    flush();
}

void SubtreeSearch::flush()
{
    if (pending_ != 0) {
        budget_.charge(pending_);
        pending_ = 0;
    }
}

void SubtreeSearch::tick()
{
    if (++pending_ >= flush_interval)
        flush();
}

bool SubtreeSearch::can_still_dominate(const VertexSet& tree_vertices, const VertexSet& dominated, int remaining) const
{
    const int undominated = graph_.vertex_count() - dominated.count();
    if (undominated == 0)
        return true;
    if (remaining <= 0)
        return false;
    // Upper bound on what `remaining` more vertices can newly dominate: the
    // sum of the largest per-candidate gains.
    std::array<int, max_vertices + 1> histogram{};
    int top = 0;
    for (int w = 0; w < graph_.vertex_count(); ++w) {
        if (tree_vertices.test(w) || excluded_.test(w))
            continue;
        int gain = std::min(gain_cap_[static_cast<std::size_t>(w)],
                            closed_neighbourhood_[static_cast<std::size_t>(w)].difference_count(dominated));
        ++histogram[static_cast<std::size_t>(gain)];
        top = std::max(top, gain);
    }
    int covered = 0;
    for (int gain = top; gain > 0 && remaining > 0; --gain) {
        int take = std::min(remaining, histogram[static_cast<std::size_t>(gain)]);
        covered += take * gain;
        remaining -= take;
        if (covered >= undominated)
            return true;
    }
    return covered >= undominated;
}

void SubtreeSearch::emit(const VertexSet& tree_vertices, const EdgeSet& tree_edges, SearchOutput& out) const
{
    ++out.interior_subtrees;
    if (!expand_)
        return;
    auto trees = expand_interior(graph_, tree_vertices, tree_edges);
    out.cuts.insert(out.cuts.end(), trees.begin(), trees.end());
}

void SubtreeSearch::append_new_edges(int vertex, const VertexSet& tree_vertices, std::vector<int>& frontier) const
{
    // Edges back into the tree would only be skipped when reached, so they
    // are never queued.
    const auto& incident = graph_.incident_edges(vertex);
    const auto& neighbours = graph_.neighbours(vertex);
    for (std::size_t k = 0; k < incident.size(); ++k) {
        int l = neighbours[k];
        if (!tree_vertices.test(l) && !excluded_.test(l))
            frontier.push_back(incident[k]);
    }
}

void SubtreeSearch::visit(int level, const VertexSet& tree_vertices, const EdgeSet& tree_edges,
                          const VertexSet& dominated, int size, std::span<const int> frontier, SearchOutput& out)
{
    tick();
    if (budget_.stopped())
        return;
    if (prune_ && !can_still_dominate(tree_vertices, dominated, target_ - size))
        return;
    if (size == target_) {
        if (dominated.count() == graph_.vertex_count())
            emit(tree_vertices, tree_edges, out);
        return;
    }
    auto& child = buffers_[static_cast<std::size_t>(level) + 1];
    for (std::size_t pos = 0; pos < frontier.size(); ++pos) {
        const int e = frontier[pos];
        const Edge& edge = graph_.edge(e);
        int added;
        if (!tree_vertices.test(edge.v))
            added = edge.v;
        else if (!tree_vertices.test(edge.u))
            added = edge.u;
        else
            continue;
        child.assign(frontier.begin() + static_cast<std::ptrdiff_t>(pos) + 1, frontier.end());
        VertexSet next_vertices = tree_vertices;
        next_vertices.set(added);
        append_new_edges(added, next_vertices, child);
        EdgeSet next_edges = tree_edges;
        next_edges.set(e);
        visit(level + 1, next_vertices, next_edges, dominated | closed_neighbourhood_[static_cast<std::size_t>(added)],
              size + 1, child, out);
        if (budget_.stopped())
            return;
    }
}

void SubtreeSearch::run(const SearchState& state, SearchOutput& out)
{
    excluded_ = state.excluded;
    target_ = state.target_size;
    VertexSet dominated = dominated_by(graph_, state.tree_vertices);
    buffers_[0].assign(state.frontier.begin(), state.frontier.end());
    visit(0, state.tree_vertices, state.tree_edges, dominated, state.tree_vertices.count(), buffers_[0], out);
    flush();
}

void SubtreeSearch::visit_split(SearchState state, const VertexSet& dominated, int depth,
                                std::vector<SearchState>& tasks, SearchOutput& out)
{
    const int size = state.tree_vertices.count();
    if (depth == 0) {
        tasks.push_back(std::move(state));
        return;
    }
    tick();
    if (prune_ && !can_still_dominate(state.tree_vertices, dominated, target_ - size))
        return;
    if (size == target_) {
        if (dominated.count() == graph_.vertex_count())
            emit(state.tree_vertices, state.tree_edges, out);
        return;
    }
    for (std::size_t pos = 0; pos < state.frontier.size(); ++pos) {
        const int e = state.frontier[pos];
        const Edge& edge = graph_.edge(e);
        int added;
        if (!state.tree_vertices.test(edge.v))
            added = edge.v;
        else if (!state.tree_vertices.test(edge.u))
            added = edge.u;
        else
            continue;
        SearchState child;
        child.excluded = state.excluded;
        child.target_size = state.target_size;
        child.tree_vertices = state.tree_vertices;
        child.tree_vertices.set(added);
        child.tree_edges = state.tree_edges;
        child.tree_edges.set(e);
        child.frontier.assign(state.frontier.begin() + static_cast<std::ptrdiff_t>(pos) + 1, state.frontier.end());
        append_new_edges(added, child.tree_vertices, child.frontier);
        visit_split(std::move(child), dominated | closed_neighbourhood_[static_cast<std::size_t>(added)], depth - 1,
                    tasks, out);
    }
}

void SubtreeSearch::split(const SearchState& state, int depth, std::vector<SearchState>& tasks, SearchOutput& out)
{
    excluded_ = state.excluded;
    target_ = state.target_size;
    visit_split(state, dominated_by(graph_, state.tree_vertices), depth, tasks, out);
    flush();
}

SearchOutput run_searches(const ShellGraph& graph, std::span<const SearchState> states, const SearchOptions& options,
                          SearchBudget& budget, bool expand)
{
    unsigned workers = options.workers != 0 ? options.workers : std::max(1U, std::thread::hardware_concurrency());
    SearchOutput total;
    const int target = states.empty() ? 0 : states.front().target_size;

    auto throw_if_stopped = [&] {
        if (budget.stopped()) {
            std::string reason = budget.deadline_hit() ? "time limit reached" :
                                                         "node budget of " + std::to_string(budget.limit()) + " exceeded";
            throw BudgetExceeded("search stopped at interior size " + std::to_string(target) + ": " + reason,
                                 budget.nodes(), target);
        }
    };

    if (workers == 1) {
        SubtreeSearch search(graph, budget, options.prune, expand);
        for (const auto& state : states) {
            search.run(state, total);
            throw_if_stopped();
        }
        return total;
    }

    std::vector<SearchState> tasks;
    {
        SubtreeSearch search(graph, budget, options.prune, expand);
        for (const auto& state : states)
            search.split(state, 2, tasks, total);
    }
    throw_if_stopped();

    std::vector<SearchOutput> outputs(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            SubtreeSearch search(graph, budget, options.prune, expand);
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= tasks.size() || budget.stopped())
                    break;
                search.run(tasks[k], outputs[k]);
            }
        }
        catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, tasks.size()); ++w)
        pool.emplace_back(work);
    pool.clear();
    if (failure)
        std::rethrow_exception(failure);
    throw_if_stopped();

    for (auto& out : outputs) {
        total.interior_subtrees += out.interior_subtrees;
        total.cuts.insert(total.cuts.end(), std::make_move_iterator(out.cuts.begin()),
                          std::make_move_iterator(out.cuts.end()));
    }
    return total;
}

} // namespace foldnet::detail
