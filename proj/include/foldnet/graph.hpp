#ifndef FOLDNET_GRAPH_HPP
#define FOLDNET_GRAPH_HPP

#include "foldnet/bitset.hpp"
#include "foldnet/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace foldnet {

using BigInt = boost::multiprecision::cpp_int;

struct Vec3
{
    double x = 0, y = 0, z = 0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) { return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x}; }
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

/**
 * A polyhedral shell: vertex coordinates plus faces given as vertex cycles,
 * counter-clockwise seen from outside. Coordinates may be absent for
 * purely combinatorial input, in which case only the graph operations work.
 */
struct PolyhedronSpec
{
    std::string name;
    int vertex_count = 0;
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;

    [[nodiscard]] bool has_coordinates() const { return static_cast<int>(vertices.size()) == vertex_count; }

    friend bool operator==(const PolyhedronSpec&, const PolyhedronSpec&) = default;
};

struct Diagnostics
{
    bool indices_valid = true;
    bool manifold = true;
    bool connected = true;
    bool euler_ok = true;
    int euler_characteristic = 0;
    int vertex_count = 0;
    int edge_count = 0;
    int face_count = 0;
    /// Largest distance of a face vertex from its least-squares plane,
    /// relative to the mean edge length. Zero without coordinates.
    double planarity_residual = 0;
    bool planar = true;
    bool positive_edges = true;
    std::vector<std::string> messages;

    [[nodiscard]] bool ok() const
    {
        return indices_valid && manifold && connected && euler_ok && planar && positive_edges;
    }
};

inline constexpr double planarity_tolerance = 1e-9;

Diagnostics validate_polyhedron(const PolyhedronSpec& spec);

struct Edge
{
    int u = 0, v = 0; // u < v

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Whether edges bordered by a single face are accepted (open shells).
enum class Boundary { forbidden, allowed };

/**
 * Undirected simple graph whose vertices and edges are those of the shell.
 * Edges are indexed lexicographically by (min vertex, max vertex).
 */
class ShellGraph
{
public:
    ShellGraph() = default;

    /// Builds from an explicit edge list; pairs are normalised and sorted.
    ShellGraph(int vertex_count, std::span<const std::pair<int, int>> edges);

    [[nodiscard]] int vertex_count() const { return vertex_count_; }
    [[nodiscard]] int edge_count() const { return static_cast<int>(edges_.size()); }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    [[nodiscard]] int degree(int v) const { return static_cast<int>(neighbours_[static_cast<std::size_t>(v)].size()); }
    [[nodiscard]] const std::vector<int>& neighbours(int v) const { return neighbours_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] const VertexSet& neighbour_set(int v) const { return neighbour_sets_[static_cast<std::size_t>(v)]; }
    /// Edge indices incident to v, in the order of neighbours(v).
    [[nodiscard]] const std::vector<int>& incident_edges(int v) const { return incident_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] bool adjacent(int u, int v) const { return neighbour_sets_[static_cast<std::size_t>(u)].test(v); }
    /// Index of edge {u, v}, or -1.
    [[nodiscard]] int edge_index(int u, int v) const;
    [[nodiscard]] int other_end(int e, int v) const { return edge(e).u == v ? edge(e).v : edge(e).u; }
    [[nodiscard]] bool connected() const;
    [[nodiscard]] VertexSet all_vertices() const;

    friend bool operator==(const ShellGraph& a, const ShellGraph& b) { return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_; }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbours_;
    std::vector<std::vector<int>> incident_;
    std::vector<VertexSet> neighbour_sets_;
    std::vector<int> index_; // vertex_count_ x vertex_count_, -1 when absent
};

ShellGraph build_shell_graph(const PolyhedronSpec& spec, Boundary boundary = Boundary::forbidden);

struct FaceLink
{
    int face_a = 0, face_b = 0; // face_a < face_b
    int edge = 0;               // shell edge shared by the two faces
};

/// Faces as nodes, one link per shell edge shared by two faces.
struct FaceGraph
{
    int face_count = 0;
    std::vector<FaceLink> links;
    /// link index per shell edge, -1 for boundary edges of open shells
    std::vector<int> link_of_edge;
    /// faces bordering each shell edge (one or two entries)
    std::vector<std::vector<int>> faces_of_edge;
    std::vector<std::vector<int>> adjacent_links; // per face

    [[nodiscard]] bool connected() const;
};

FaceGraph build_face_graph(const PolyhedronSpec& spec, Boundary boundary = Boundary::forbidden);

/// A set of shell edges selected for cutting.
struct Cut
{
    EdgeSet edges;

    [[nodiscard]] std::vector<int> edge_indices() const { return edges.to_vector(); }
    [[nodiscard]] int size() const { return edges.count(); }

    friend bool operator==(const Cut&, const Cut&) = default;
};

/// Orders cuts by their ascending edge-index sequences.
struct CutOrder
{
    bool operator()(const Cut& a, const Cut& b) const { return sequence_less(a.edges, b.edges); }
};

/// Degree of every vertex in the subgraph formed by the given edges.
std::vector<int> subgraph_degrees(const ShellGraph& graph, const EdgeSet& edges);

/// Vertices of degree one in the cut subgraph.
std::vector<int> cut_leaves(const ShellGraph& graph, const Cut& cut);

/// Spanning tree of the whole graph: V-1 edges, connected, acyclic.
bool is_spanning_tree(const ShellGraph& graph, const EdgeSet& edges);

/// Number of connected components of (all vertices, edges).
int component_count(const ShellGraph& graph, const EdgeSet& edges);

/// Exact number of labelled spanning trees, by fraction-free elimination
/// of the reduced Laplacian. Zero for disconnected graphs.
BigInt count_spanning_trees(const ShellGraph& graph);

inline constexpr std::uint64_t default_tree_cap = 10'000'000;

class TreeCapExceeded : public std::runtime_error
{
public:
    TreeCapExceeded(std::uint64_t cap, std::vector<Cut> partial);

    std::uint64_t cap;
    std::vector<Cut> partial;
};

/**
 * Every labelled spanning tree, each exactly once, sorted by CutOrder.
 * Uses contraction/deletion branching; throws TreeCapExceeded with the
 * trees found so far when more than `cap` exist.
 */
std::vector<Cut> enumerate_spanning_trees(const ShellGraph& graph, std::uint64_t cap = default_tree_cap);

/// Subset of spanning trees with the most leaves.
std::vector<Cut> max_leaf_subset(const ShellGraph& graph, std::span<const Cut> trees);

} // namespace foldnet

#endif
