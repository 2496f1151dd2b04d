#ifndef FOLDNET_HOLES_HPP
#define FOLDNET_HOLES_HPP

#include "foldnet/graph.hpp"
#include "foldnet/mlst.hpp"

#include <vector>

namespace foldnet {

/// Faces removed from a closed shell, with the boundary they leave behind.
struct HoleSpec
{
    std::vector<int> removed_faces;
    /// Boundary vertices in cycle order, indexed in the open shell.
    std::vector<int> boundary_cycle;
    VertexSet boundary_vertices;
    EdgeSet boundary_edges;
};

/**
 * A closed shell with faces removed. Vertices used only by removed faces
 * are dropped and the rest renumbered in their original order.
 */
struct OpenShell
{
    PolyhedronSpec spec;
    /// Original index of each open-shell vertex.
    std::vector<int> original_vertex;
    /// Original index of each open-shell face.
    std::vector<int> original_face;
    ShellGraph graph;
    HoleSpec hole;
};

/**
 * Removes `removed_faces` from `closed`. The removed faces must be
 * edge-connected and their union must be bounded by one simple cycle;
 * otherwise StructuralError.
 */
OpenShell make_open_shell(const PolyhedronSpec& closed, std::vector<int> removed_faces);

struct HoleCutResult
{
    int leaf_count = 0;
    int interior_size = 0;
    /// Sorted by CutOrder.
    std::vector<Cut> cuts;
    SearchStatistics stats;
};

/**
 * Every cut that contains the hole boundary, spans the shell with the
 * boundary as its only cycle, and has the most leaves. Growth starts from
 * the whole boundary and needs no root set.
 */
HoleCutResult enumerate_hole_cuts(const ShellGraph& graph, const HoleSpec& hole, const SearchOptions& options = {});

/**
 * Checks the open-shell cut conditions: boundary contained, spanning,
 * connected, exactly one cycle (the boundary), no leaf on the boundary.
 */
bool is_valid_hole_cut(const ShellGraph& graph, const HoleSpec& hole, const Cut& cut);

} // namespace foldnet

#endif
