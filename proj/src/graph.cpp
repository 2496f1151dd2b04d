#include "foldnet/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace foldnet {

namespace {

std::string edge_name(int u, int v)
{
    std::ostringstream out;
    out << "(" << u << "," << v << ")";
    return out.str();
}

bool face_indices_valid(const PolyhedronSpec& spec, std::vector<std::string>* messages)
{
    bool ok = true;
    for (std::size_t f = 0; f < spec.faces.size(); ++f) {
        const auto& face = spec.faces[f];
        if (face.size() < 3) {
            ok = false;
            if (messages)
                messages->push_back("face " + std::to_string(f) + " has fewer than 3 vertices");
        }
        for (std::size_t k = 0; k < face.size(); ++k) {
            if (face[k] < 0 || face[k] >= spec.vertex_count) {
                ok = false;
                if (messages)
                    messages->push_back("face " + std::to_string(f) + " index " + std::to_string(face[k]) +
                                        " out of range [0," + std::to_string(spec.vertex_count) + ")");
            }
        }
        auto sorted = face;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            ok = false;
            if (messages)
                messages->push_back("face " + std::to_string(f) + " repeats a vertex");
        }
    }
    return ok;
}

// Faces bordering each undirected edge, keyed by (min, max).
std::map<std::pair<int, int>, std::vector<int>> edge_faces(const PolyhedronSpec& spec)
{
    std::map<std::pair<int, int>, std::vector<int>> result;
    for (std::size_t f = 0; f < spec.faces.size(); ++f) {
        const auto& face = spec.faces[f];
        for (std::size_t k = 0; k < face.size(); ++k) {
            int a = face[k], b = face[(k + 1) % face.size()];
            result[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(f));
        }
    }
    return result;
}

struct DisjointSets
{
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a)
    {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }

    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }

    std::vector<int> parent;
};

} // namespace

Diagnostics validate_polyhedron(const PolyhedronSpec& spec)
{
    Diagnostics d;
    d.vertex_count = spec.vertex_count;
    d.face_count = static_cast<int>(spec.faces.size());
    d.indices_valid = face_indices_valid(spec, &d.messages);
    if (!d.indices_valid) {
        d.manifold = d.connected = d.euler_ok = false;
        return d;
    }

    auto faces_by_edge = edge_faces(spec);
    d.edge_count = static_cast<int>(faces_by_edge.size());
    for (const auto& [edge, faces] : faces_by_edge) {
        if (faces.size() != 2) {
            d.manifold = false;
            d.messages.push_back("edge " + edge_name(edge.first, edge.second) + " borders " +
                                 std::to_string(faces.size()) + " face(s)");
        }
    }
    // Consistent orientation: each directed edge appears at most once.
    std::map<std::pair<int, int>, int> directed;
    for (const auto& face : spec.faces)
        for (std::size_t k = 0; k < face.size(); ++k)
            ++directed[{face[k], face[(k + 1) % face.size()]}];
    for (const auto& [edge, count] : directed) {
        if (count > 1) {
            d.manifold = false;
            d.messages.push_back("directed edge " + edge_name(edge.first, edge.second) +
                                 " used by several faces (inconsistent orientation)");
        }
    }

    DisjointSets sets(spec.vertex_count);
    std::vector<bool> used(static_cast<std::size_t>(spec.vertex_count), false);
    for (const auto& [edge, faces] : faces_by_edge) {
        sets.unite(edge.first, edge.second);
        used[static_cast<std::size_t>(edge.first)] = used[static_cast<std::size_t>(edge.second)] = true;
    }
    for (int v = 0; v < spec.vertex_count; ++v) {
        if (!used[static_cast<std::size_t>(v)]) {
            d.connected = false;
            d.messages.push_back("vertex " + std::to_string(v) + " belongs to no face");
        }
        else if (sets.find(v) != sets.find(0)) {
            d.connected = false;
        }
    }
    if (!d.connected)
        d.messages.push_back("shell graph is not connected");

    d.euler_characteristic = d.vertex_count - d.edge_count + d.face_count;
    d.euler_ok = d.euler_characteristic == 2;
    if (!d.euler_ok)
        d.messages.push_back("Euler characteristic V-E+F = " + std::to_string(d.euler_characteristic) + ", expected 2");

    if (spec.has_coordinates()) {
        double total = 0;
        for (const auto& [edge, faces] : faces_by_edge) {
            double length = norm(spec.vertices[static_cast<std::size_t>(edge.first)] -
                                 spec.vertices[static_cast<std::size_t>(edge.second)]);
            if (!(length > 0)) {
                d.positive_edges = false;
                d.messages.push_back("edge " + edge_name(edge.first, edge.second) + " has zero length");
            }
            total += length;
        }
        double mean_edge = faces_by_edge.empty() ? 1.0 : total / static_cast<double>(faces_by_edge.size());
        for (std::size_t f = 0; f < spec.faces.size(); ++f) {
            const auto& face = spec.faces[f];
            // Newell normal and centroid give the least-squares plane for
            // planar and near-planar polygons.
            Vec3 normal{}, centre{};
            for (std::size_t k = 0; k < face.size(); ++k) {
                Vec3 a = spec.vertices[static_cast<std::size_t>(face[k])];
                Vec3 b = spec.vertices[static_cast<std::size_t>(face[(k + 1) % face.size()])];
                normal = normal + Vec3{(a.y - b.y) * (a.z + b.z), (a.z - b.z) * (a.x + b.x), (a.x - b.x) * (a.y + b.y)};
                centre = centre + a;
            }
            centre = (1.0 / static_cast<double>(face.size())) * centre;
            double n = norm(normal);
            if (!(n > 0))
                continue;
            normal = (1.0 / n) * normal;
            for (int v : face) {
                double distance = std::abs(dot(spec.vertices[static_cast<std::size_t>(v)] - centre, normal)) / mean_edge;
                d.planarity_residual = std::max(d.planarity_residual, distance);
            }
        }
        d.planar = d.planarity_residual <= planarity_tolerance;
        if (!d.planar)
            d.messages.push_back("face planarity residual " + std::to_string(d.planarity_residual) +
                                 " exceeds tolerance");
    }
    return d;
}

ShellGraph::ShellGraph(int vertex_count, std::span<const std::pair<int, int>> edges) : vertex_count_(vertex_count)
{
    if (vertex_count > max_vertices)
        throw StructuralError("graph has " + std::to_string(vertex_count) + " vertices, limit is " +
                              std::to_string(max_vertices));
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw StructuralError("edge " + edge_name(a, b) + " has an endpoint out of range");
        if (a == b)
            throw StructuralError("self-loop at vertex " + std::to_string(a));
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw StructuralError("duplicate edge in edge list");
    if (edge_count() > max_edges)
        throw StructuralError("graph has " + std::to_string(edge_count()) + " edges, limit is " +
                              std::to_string(max_edges));

    auto n = static_cast<std::size_t>(vertex_count);
    neighbours_.resize(n);
    incident_.resize(n);
    neighbour_sets_.resize(n);
    index_.assign(n * n, -1);
    for (int e = 0; e < edge_count(); ++e) {
        auto [u, v] = edges_[static_cast<std::size_t>(e)];
        neighbours_[static_cast<std::size_t>(u)].push_back(v);
        neighbours_[static_cast<std::size_t>(v)].push_back(u);
        incident_[static_cast<std::size_t>(u)].push_back(e);
        incident_[static_cast<std::size_t>(v)].push_back(e);
        neighbour_sets_[static_cast<std::size_t>(u)].set(v);
        neighbour_sets_[static_cast<std::size_t>(v)].set(u);
        index_[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] = e;
        index_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = e;
    }
}

int ShellGraph::edge_index(int u, int v) const
{
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
        return -1;
    return index_[static_cast<std::size_t>(u) * static_cast<std::size_t>(vertex_count_) + static_cast<std::size_t>(v)];
}

VertexSet ShellGraph::all_vertices() const
{
    VertexSet s;
    for (int v = 0; v < vertex_count_; ++v)
        s.set(v);
    return s;
}

bool ShellGraph::connected() const
{
    if (vertex_count_ == 0)
        return true;
    VertexSet seen, frontier;
    seen.set(0);
    frontier.set(0);
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= neighbour_sets_[static_cast<std::size_t>(v)]; });
        next.subtract(seen);
        seen |= next;
        frontier = next;
    }
    return seen.count() == vertex_count_;
}

ShellGraph build_shell_graph(const PolyhedronSpec& spec, Boundary boundary)
{
    std::vector<std::string> messages;
    if (!face_indices_valid(spec, &messages))
        throw StructuralError(messages.front());
    std::vector<std::pair<int, int>> pairs;
    for (const auto& [edge, faces] : edge_faces(spec)) {
        bool ok = faces.size() == 2 || (boundary == Boundary::allowed && faces.size() == 1);
        if (!ok)
            throw StructuralError("non-manifold edge " + edge_name(edge.first, edge.second) + ": borders " +
                                  std::to_string(faces.size()) + " face(s)");
        pairs.push_back(edge);
    }
    ShellGraph graph(spec.vertex_count, pairs);
    if (!graph.connected())
        throw StructuralError("shell graph of '" + spec.name + "' is not connected");
    return graph;
}

bool FaceGraph::connected() const
{
    if (face_count == 0)
        return true;
    DisjointSets sets(face_count);
    int components = face_count;
    for (const auto& link : links)
        if (sets.unite(link.face_a, link.face_b))
            --components;
    return components == 1;
}

FaceGraph build_face_graph(const PolyhedronSpec& spec, Boundary boundary)
{
    ShellGraph graph = build_shell_graph(spec, boundary);
    FaceGraph result;
    result.face_count = static_cast<int>(spec.faces.size());
    result.link_of_edge.assign(static_cast<std::size_t>(graph.edge_count()), -1);
    result.faces_of_edge.resize(static_cast<std::size_t>(graph.edge_count()));
    result.adjacent_links.resize(spec.faces.size());
    for (const auto& [edge, faces] : edge_faces(spec)) {
        int e = graph.edge_index(edge.first, edge.second);
        result.faces_of_edge[static_cast<std::size_t>(e)] = faces;
    }
    for (int e = 0; e < graph.edge_count(); ++e) {
        const auto& faces = result.faces_of_edge[static_cast<std::size_t>(e)];
        if (faces.size() != 2)
            continue;
        int link = static_cast<int>(result.links.size());
        result.links.push_back({std::min(faces[0], faces[1]), std::max(faces[0], faces[1]), e});
        result.link_of_edge[static_cast<std::size_t>(e)] = link;
        result.adjacent_links[static_cast<std::size_t>(faces[0])].push_back(link);
        result.adjacent_links[static_cast<std::size_t>(faces[1])].push_back(link);
    }
    if (!result.connected())
        throw StructuralError("face graph of '" + spec.name + "' is not connected");
    return result;
}

std::vector<int> subgraph_degrees(const ShellGraph& graph, const EdgeSet& edges)
{
    std::vector<int> degree(static_cast<std::size_t>(graph.vertex_count()), 0);
    edges.for_each([&](int e) {
        ++degree[static_cast<std::size_t>(graph.edge(e).u)];
        ++degree[static_cast<std::size_t>(graph.edge(e).v)];
    });
    return degree;
}

std::vector<int> cut_leaves(const ShellGraph& graph, const Cut& cut)
{
    auto degree = subgraph_degrees(graph, cut.edges);
    std::vector<int> leaves;
    for (int v = 0; v < graph.vertex_count(); ++v)
        if (degree[static_cast<std::size_t>(v)] == 1)
            leaves.push_back(v);
    return leaves;
}

int component_count(const ShellGraph& graph, const EdgeSet& edges)
{
    DisjointSets sets(graph.vertex_count());
    int components = graph.vertex_count();
    edges.for_each([&](int e) {
        if (sets.unite(graph.edge(e).u, graph.edge(e).v))
            --components;
    });
    return components;
}

bool is_spanning_tree(const ShellGraph& graph, const EdgeSet& edges)
{
    return edges.count() == graph.vertex_count() - 1 && component_count(graph, edges) == 1;
}

BigInt count_spanning_trees(const ShellGraph& graph)
{
    const int n = graph.vertex_count() - 1;
    if (n <= 0)
        return 1;
    if (!graph.connected())
        return 0;
    std::vector<std::vector<BigInt>> m(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = graph.degree(i);
        for (int j : graph.neighbours(i))
            if (j < n)
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    }
    // Bareiss: after step k every entry of the trailing block is an exact
    // k-th order minor, so each division is exact.
    BigInt previous = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        auto kk = static_cast<std::size_t>(k);
        if (m[kk][kk] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (m[static_cast<std::size_t>(r)][kk] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0)
                return 0;
            std::swap(m[kk], m[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            auto ii = static_cast<std::size_t>(i);
            for (int j = k + 1; j < n; ++j) {
                auto jj = static_cast<std::size_t>(j);
                m[ii][jj] = (m[ii][jj] * m[kk][kk] - m[ii][kk] * m[kk][jj]) / previous;
            }
            m[ii][kk] = 0;
        }
        previous = m[kk][kk];
    }
    BigInt det = m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return sign > 0 ? det : BigInt(-det);
}

TreeCapExceeded::TreeCapExceeded(std::uint64_t cap, std::vector<Cut> partial) :
    std::runtime_error("spanning tree enumeration exceeded cap of " + std::to_string(cap)),
    cap(cap),
    partial(std::move(partial))
{
}

namespace {

class TreeEnumerator
{
public:
    TreeEnumerator(const ShellGraph& graph, std::uint64_t cap) : graph_(graph), cap_(cap) {}

    std::vector<Cut> run()
    {
        if (!graph_.connected())
            return {};
        std::vector<int> component(static_cast<std::size_t>(graph_.vertex_count()));
        std::iota(component.begin(), component.end(), 0);
        recurse(component, EdgeSet{}, EdgeSet{}, 0);
        return std::move(trees_);
    }

private:
    // `component` labels the contracted super-vertices.
    void recurse(const std::vector<int>& component, EdgeSet chosen, EdgeSet excluded, int chosen_count)
    {
        if (chosen_count == graph_.vertex_count() - 1) {
            if (trees_.size() >= cap_)
                throw TreeCapExceeded(cap_, std::move(trees_));
            trees_.push_back(Cut{chosen});
            return;
        }
        int pick = -1;
        for (int e = 0; e < graph_.edge_count(); ++e) {
            if (chosen.test(e) || excluded.test(e))
                continue;
            const Edge& edge = graph_.edge(e);
            if (component[static_cast<std::size_t>(edge.u)] != component[static_cast<std::size_t>(edge.v)]) {
                pick = e;
                break;
            }
        }
        if (pick < 0)
            return;
        const Edge& edge = graph_.edge(pick);

        // Contract.
        {
            auto merged = component;
            int from = component[static_cast<std::size_t>(edge.v)], to = component[static_cast<std::size_t>(edge.u)];
            for (auto& c : merged)
                if (c == from)
                    c = to;
            EdgeSet next = chosen;
            next.set(pick);
            recurse(merged, next, excluded, chosen_count + 1);
        }
        // Delete, when the rest still connects every super-vertex.
        EdgeSet next_excluded = excluded;
        next_excluded.set(pick);
        if (still_connected(component, next_excluded))
            recurse(component, chosen, next_excluded, chosen_count);
    }

    bool still_connected(const std::vector<int>& component, const EdgeSet& excluded) const
    {
        DisjointSets sets(graph_.vertex_count());
        int roots = 0;
        for (int v = 0; v < graph_.vertex_count(); ++v)
            if (component[static_cast<std::size_t>(v)] == v)
                ++roots;
        for (int e = 0; e < graph_.edge_count(); ++e) {
            if (excluded.test(e))
                continue;
            const Edge& edge = graph_.edge(e);
            if (sets.unite(component[static_cast<std::size_t>(edge.u)], component[static_cast<std::size_t>(edge.v)]))
                --roots;
        }
        return roots == 1;
    }

    const ShellGraph& graph_;
    std::uint64_t cap_;
    std::vector<Cut> trees_;
};

} // namespace

std::vector<Cut> enumerate_spanning_trees(const ShellGraph& graph, std::uint64_t cap)
{
    auto trees = TreeEnumerator(graph, cap).run();
    std::sort(trees.begin(), trees.end(), CutOrder{});
    return trees;
}

std::vector<Cut> max_leaf_subset(const ShellGraph& graph, std::span<const Cut> trees)
{
    std::vector<Cut> best;
    std::size_t best_leaves = 0;
    for (const auto& tree : trees) {
        auto leaves = cut_leaves(graph, tree).size();
        if (leaves > best_leaves) {
            best.clear();
            best_leaves = leaves;
        }
        if (leaves == best_leaves)
            best.push_back(tree);
    }
    return best;
}

} // namespace foldnet
