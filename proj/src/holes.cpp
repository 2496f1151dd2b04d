#include "foldnet/holes.hpp"

#include "subtree_search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

namespace foldnet {

namespace {

std::pair<int, int> key(int a, int b)
{
    return {std::min(a, b), std::max(a, b)};
}

} // namespace

OpenShell make_open_shell(const PolyhedronSpec& closed, std::vector<int> removed_faces)
{
    std::sort(removed_faces.begin(), removed_faces.end());
    removed_faces.erase(std::unique(removed_faces.begin(), removed_faces.end()), removed_faces.end());
    const int face_count = static_cast<int>(closed.faces.size());
    if (removed_faces.empty())
        throw StructuralError("a hole needs at least one removed face");
    for (int f : removed_faces)
        if (f < 0 || f >= face_count)
            throw StructuralError("hole face " + std::to_string(f) + " out of range [0," + std::to_string(face_count) + ")");
    if (static_cast<int>(removed_faces.size()) >= face_count)
        throw StructuralError("cannot remove every face");
    build_shell_graph(closed); // closed input must itself be a valid shell

    std::vector<bool> removed(static_cast<std::size_t>(face_count), false);
    for (int f : removed_faces)
        removed[static_cast<std::size_t>(f)] = true;

    // Removed faces must form one edge-connected patch.
    std::map<std::pair<int, int>, std::vector<int>> faces_by_edge;
    for (int f = 0; f < face_count; ++f) {
        const auto& face = closed.faces[static_cast<std::size_t>(f)];
        for (std::size_t k = 0; k < face.size(); ++k)
            faces_by_edge[key(face[k], face[(k + 1) % face.size()])].push_back(f);
    }
    {
        std::set<int> reached{removed_faces.front()};
        std::vector<int> stack{removed_faces.front()};
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            const auto& face = closed.faces[static_cast<std::size_t>(f)];
            for (std::size_t k = 0; k < face.size(); ++k)
                for (int g : faces_by_edge[key(face[k], face[(k + 1) % face.size()])])
                    if (removed[static_cast<std::size_t>(g)] && reached.insert(g).second)
                        stack.push_back(g);
        }
        if (reached.size() != removed_faces.size())
            throw StructuralError("removed faces are not edge-connected");
    }

    OpenShell open;
    open.spec.name = closed.name + "-open";
    std::vector<int> new_index(static_cast<std::size_t>(closed.vertex_count), -1);
    std::vector<bool> used(static_cast<std::size_t>(closed.vertex_count), false);
    for (int f = 0; f < face_count; ++f)
        if (!removed[static_cast<std::size_t>(f)])
            for (int v : closed.faces[static_cast<std::size_t>(f)])
                used[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < closed.vertex_count; ++v) {
        if (!used[static_cast<std::size_t>(v)])
            continue;
        new_index[static_cast<std::size_t>(v)] = static_cast<int>(open.original_vertex.size());
        open.original_vertex.push_back(v);
        if (closed.has_coordinates())
            open.spec.vertices.push_back(closed.vertices[static_cast<std::size_t>(v)]);
    }
    open.spec.vertex_count = static_cast<int>(open.original_vertex.size());
    for (int f = 0; f < face_count; ++f) {
        if (removed[static_cast<std::size_t>(f)])
            continue;
        std::vector<int> face;
        for (int v : closed.faces[static_cast<std::size_t>(f)])
            face.push_back(new_index[static_cast<std::size_t>(v)]);
        open.spec.faces.push_back(std::move(face));
        open.original_face.push_back(f);
    }
    open.graph = build_shell_graph(open.spec, Boundary::allowed);

    // Boundary: edges of the open shell bordered by one remaining face.
    std::map<std::pair<int, int>, int> remaining_count;
    std::map<int, std::vector<int>> boundary_neighbours;
    for (const auto& face : open.spec.faces)
        for (std::size_t k = 0; k < face.size(); ++k)
            ++remaining_count[key(face[k], face[(k + 1) % face.size()])];
    HoleSpec& hole = open.hole;
    hole.removed_faces = removed_faces;
    for (const auto& [edge, count] : remaining_count) {
        if (count != 1)
            continue;
        hole.boundary_edges.set(open.graph.edge_index(edge.first, edge.second));
        hole.boundary_vertices.set(edge.first);
        hole.boundary_vertices.set(edge.second);
        boundary_neighbours[edge.first].push_back(edge.second);
        boundary_neighbours[edge.second].push_back(edge.first);
    }
    for (const auto& [v, adjacent] : boundary_neighbours)
        if (adjacent.size() != 2)
            throw StructuralError("hole boundary is not a simple cycle (vertex " +
                                  std::to_string(open.original_vertex[static_cast<std::size_t>(v)]) + ")");
    int start = boundary_neighbours.begin()->first;
    int previous = -1, current = start;
    do {
        hole.boundary_cycle.push_back(current);
        const auto& adjacent = boundary_neighbours[current];
        int next = adjacent[0] != previous ? adjacent[0] : adjacent[1];
        previous = current;
        current = next;
    } while (current != start);
    if (static_cast<int>(hole.boundary_cycle.size()) != hole.boundary_vertices.count())
        throw StructuralError("hole boundary consists of several cycles");
    return open;
}

HoleCutResult enumerate_hole_cuts(const ShellGraph& graph, const HoleSpec& hole, const SearchOptions& options)
{
    if (hole.boundary_cycle.size() < 3 || static_cast<int>(hole.boundary_cycle.size()) != hole.boundary_edges.count())
        throw StructuralError("hole boundary is not a cycle");
    auto start = std::chrono::steady_clock::now();
    SearchState initial;
    initial.tree_vertices = hole.boundary_vertices;
    initial.tree_edges = hole.boundary_edges;
    hole.boundary_vertices.for_each([&](int v) {
        const auto& incident = graph.incident_edges(v);
        for (std::size_t k = 0; k < incident.size(); ++k)
            if (!hole.boundary_vertices.test(graph.neighbours(v)[k]))
                initial.frontier.push_back(incident[k]);
    });

    HoleCutResult result;
    detail::SearchBudget budget(options);
    for (int size = hole.boundary_vertices.count(); size <= graph.vertex_count(); ++size) {
        initial.target_size = size;
        auto out = detail::run_searches(graph, std::span(&initial, 1), options, budget, true);
        result.stats.interior_subtrees = out.interior_subtrees;
        if (!out.cuts.empty()) {
            result.interior_size = size;
            result.cuts = std::move(out.cuts);
            break;
        }
    }
    std::sort(result.cuts.begin(), result.cuts.end(), CutOrder{});
    if (std::adjacent_find(result.cuts.begin(), result.cuts.end()) != result.cuts.end())
        throw std::logic_error("duplicate cut emitted");
    if (!result.cuts.empty())
        result.leaf_count = static_cast<int>(cut_leaves(graph, result.cuts.front()).size());
    result.stats.nodes = budget.nodes();
    result.stats.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

bool is_valid_hole_cut(const ShellGraph& graph, const HoleSpec& hole, const Cut& cut)
{
    if (!hole.boundary_edges.is_subset_of(cut.edges))
        return false;
    // Spanning, connected, and exactly one cycle: E = V.
    if (cut.size() != graph.vertex_count() || component_count(graph, cut.edges) != 1)
        return false;
    auto degree = subgraph_degrees(graph, cut.edges);
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (degree[static_cast<std::size_t>(v)] == 0 ||
            (degree[static_cast<std::size_t>(v)] == 1 && hole.boundary_vertices.test(v)))
            return false;
    return true;
}

} // namespace foldnet
