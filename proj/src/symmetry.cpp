#include "foldnet/symmetry.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <set>

namespace foldnet {

AutomorphismGroup::AutomorphismGroup(const ShellGraph& graph, std::vector<Permutation> vertex_maps) :
    vertex_maps_(std::move(vertex_maps))
{
    std::sort(vertex_maps_.begin(), vertex_maps_.end());
    edge_maps_.reserve(vertex_maps_.size());
    for (const auto& p : vertex_maps_) {
        Permutation edge_map(static_cast<std::size_t>(graph.edge_count()));
        for (int e = 0; e < graph.edge_count(); ++e) {
            const Edge& edge = graph.edge(e);
            edge_map[static_cast<std::size_t>(e)] =
                graph.edge_index(p[static_cast<std::size_t>(edge.u)], p[static_cast<std::size_t>(edge.v)]);
        }
        edge_maps_.push_back(std::move(edge_map));
    }
}

EdgeSet AutomorphismGroup::apply(std::size_t k, const EdgeSet& edges) const
{
    const auto& map = edge_maps_[k];
    EdgeSet image;
    edges.for_each([&](int e) { image.set(map[static_cast<std::size_t>(e)]); });
    return image;
}

AutomorphismGroup AutomorphismGroup::stabilizer(const ShellGraph& graph, const EdgeSet& edges) const
{
    std::vector<Permutation> kept;
    for (std::size_t k = 0; k < order(); ++k)
        if (apply(k, edges) == edges)
            kept.push_back(vertex_maps_[k]);
    return AutomorphismGroup(graph, std::move(kept));
}

namespace {

class AutomorphismSearch
{
public:
    explicit AutomorphismSearch(const ShellGraph& graph) : graph_(graph)
    {
        const int n = graph.vertex_count();
        for (int v = 0; v < n; ++v) {
            std::vector<int> profile;
            for (int w : graph.neighbours(v))
                profile.push_back(graph.degree(w));
            std::sort(profile.begin(), profile.end());
            profile.push_back(-graph.degree(v));
            profiles_.push_back(std::move(profile));
        }
        // Breadth-first order so every vertex after the first has an
        // already-mapped neighbour (the graph is connected).
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        parent_.assign(static_cast<std::size_t>(n), -1);
        for (int s = 0; s < n; ++s) {
            if (seen[static_cast<std::size_t>(s)])
                continue;
            seen[static_cast<std::size_t>(s)] = true;
            order_.push_back(s);
            for (std::size_t head = order_.size() - 1; head < order_.size(); ++head) {
                int v = order_[head];
                for (int w : graph.neighbours(v))
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = true;
                        parent_[static_cast<std::size_t>(w)] = v;
                        order_.push_back(w);
                    }
            }
        }
        image_.assign(static_cast<std::size_t>(n), -1);
        used_.assign(static_cast<std::size_t>(n), false);
    }

    std::vector<Permutation> run()
    {
        extend(0);
        return std::move(found_);
    }

private:
    bool consistent(int v, int candidate, std::size_t depth) const
    {
        if (profiles_[static_cast<std::size_t>(v)] != profiles_[static_cast<std::size_t>(candidate)])
            return false;
        for (std::size_t k = 0; k < depth; ++k) {
            int q = order_[k];
            if (graph_.adjacent(v, q) != graph_.adjacent(candidate, image_[static_cast<std::size_t>(q)]))
                return false;
        }
        return true;
    }

    void extend(std::size_t depth)
    {
        if (depth == order_.size()) {
            found_.push_back(image_);
            return;
        }
        int v = order_[depth];
        int p = parent_[static_cast<std::size_t>(v)];
        auto try_candidate = [&](int candidate) {
            if (used_[static_cast<std::size_t>(candidate)] || !consistent(v, candidate, depth))
                return;
            image_[static_cast<std::size_t>(v)] = candidate;
            used_[static_cast<std::size_t>(candidate)] = true;
            extend(depth + 1);
            used_[static_cast<std::size_t>(candidate)] = false;
            image_[static_cast<std::size_t>(v)] = -1;
        };
        if (p >= 0) {
            for (int candidate : graph_.neighbours(image_[static_cast<std::size_t>(p)]))
                try_candidate(candidate);
        }
        else {
            for (int candidate = 0; candidate < graph_.vertex_count(); ++candidate)
                try_candidate(candidate);
        }
    }

    const ShellGraph& graph_;
    std::vector<std::vector<int>> profiles_;
    std::vector<int> order_;
    std::vector<int> parent_;
    Permutation image_;
    std::vector<bool> used_;
    std::vector<Permutation> found_;
};

} // namespace

AutomorphismGroup find_automorphisms(const ShellGraph& graph)
{
    return AutomorphismGroup(graph, AutomorphismSearch(graph).run());
}

bool satisfies_group_axioms(const ShellGraph& graph, const AutomorphismGroup& group)
{
    const auto& maps = group.vertex_maps();
    const std::size_t n = static_cast<std::size_t>(graph.vertex_count());
    std::set<Permutation> members(maps.begin(), maps.end());
    if (members.size() != maps.size())
        return false;
    Permutation identity(n);
    for (std::size_t v = 0; v < n; ++v)
        identity[v] = static_cast<int>(v);
    if (!members.contains(identity))
        return false;
    for (const auto& p : maps) {
        for (const auto& edge : graph.edges())
            if (!graph.adjacent(p[static_cast<std::size_t>(edge.u)], p[static_cast<std::size_t>(edge.v)]))
                return false;
        Permutation inverse(n);
        for (std::size_t v = 0; v < n; ++v)
            inverse[static_cast<std::size_t>(p[v])] = static_cast<int>(v);
        if (!members.contains(inverse))
            return false;
        for (const auto& q : maps) {
            Permutation composed(n);
            for (std::size_t v = 0; v < n; ++v)
                composed[v] = p[static_cast<std::size_t>(q[v])];
            if (!members.contains(composed))
                return false;
        }
    }
    return true;
}

CanonicalCut canonical_cut(const Cut& cut, const AutomorphismGroup& group)
{
    CanonicalCut result{cut, 1};
    std::size_t stabilizer = 0;
    for (std::size_t k = 0; k < group.order(); ++k) {
        EdgeSet image = group.apply(k, cut.edges);
        if (image == cut.edges)
            ++stabilizer;
        if (sequence_less(image, result.representative.edges))
            result.representative.edges = image;
    }
    // Orbit-stabiliser: distinct images = |G| / |Stab(cut)|.
    result.orbit_size = stabilizer == 0 ? 1 : group.order() / stabilizer;
    return result;
}

std::vector<CanonicalCut> dedupe_cuts(std::span<const Cut> cuts, const AutomorphismGroup& group, unsigned workers)
{
    std::vector<CanonicalCut> canonical(cuts.size());
    detail::parallel_for(cuts.size(), workers, [&](std::size_t i) { canonical[i] = canonical_cut(cuts[i], group); }, 256);
    std::sort(canonical.begin(), canonical.end(), [](const CanonicalCut& a, const CanonicalCut& b) {
        return CutOrder{}(a.representative, b.representative);
    });
    canonical.erase(std::unique(canonical.begin(), canonical.end(),
                                [](const CanonicalCut& a, const CanonicalCut& b) {
                                    return a.representative == b.representative;
                                }),
                    canonical.end());
    return canonical;
}

BigRational estimate_net_count(const ShellGraph& graph)
{
    return BigRational(count_spanning_trees(graph)) / BigRational(find_automorphisms(graph).order());
}

} // namespace foldnet
