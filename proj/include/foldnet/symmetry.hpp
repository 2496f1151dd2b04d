#ifndef FOLDNET_SYMMETRY_HPP
#define FOLDNET_SYMMETRY_HPP

#include "foldnet/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <vector>

namespace foldnet {

using BigRational = boost::multiprecision::cpp_rational;

using Permutation = std::vector<int>;

/// Vertex relabelings that map the shell graph onto itself, with the edge
/// permutation each one induces.
class AutomorphismGroup
{
public:
    AutomorphismGroup() = default;
    AutomorphismGroup(const ShellGraph& graph, std::vector<Permutation> vertex_maps);

    [[nodiscard]] std::size_t order() const { return vertex_maps_.size(); }
    [[nodiscard]] const std::vector<Permutation>& vertex_maps() const { return vertex_maps_; }
    [[nodiscard]] const std::vector<Permutation>& edge_maps() const { return edge_maps_; }

    [[nodiscard]] EdgeSet apply(std::size_t k, const EdgeSet& edges) const;

    /// Subgroup whose elements map `edges` onto itself.
    [[nodiscard]] AutomorphismGroup stabilizer(const ShellGraph& graph, const EdgeSet& edges) const;

private:
    std::vector<Permutation> vertex_maps_;
    std::vector<Permutation> edge_maps_;
};

/**
 * The full automorphism group, by backtracking in breadth-first vertex
 * order; candidates must match degree and neighbour-degree profile and be
 * consistent with every vertex already mapped. Sorted, identity first.
 */
AutomorphismGroup find_automorphisms(const ShellGraph& graph);

/// Identity present, closed under composition and inversion, every
/// element preserves the edge set.
bool satisfies_group_axioms(const ShellGraph& graph, const AutomorphismGroup& group);

struct CanonicalCut
{
    /// Smallest image of the cut over the group, in CutOrder.
    Cut representative;
    /// Number of distinct labelled images.
    std::size_t orbit_size = 1;

    friend bool operator==(const CanonicalCut&, const CanonicalCut&) = default;
};

CanonicalCut canonical_cut(const Cut& cut, const AutomorphismGroup& group);

/**
 * One representative per orbit, sorted by representative. The input is
 * expected to be closed under the group, so the orbit sizes sum to its
 * length.
 */
std::vector<CanonicalCut> dedupe_cuts(std::span<const Cut> cuts, const AutomorphismGroup& group, unsigned workers = 0);

/// Lower bound N_ST / N_aut on the number of distinct nets.
BigRational estimate_net_count(const ShellGraph& graph);

} // namespace foldnet

#endif
