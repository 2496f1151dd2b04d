#ifndef FOLDNET_GEOMETRY_HPP
#define FOLDNET_GEOMETRY_HPP

#include "foldnet/graph.hpp"
#include "foldnet/symmetry.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace foldnet {

struct Vec2
{
    double x = 0, y = 0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }

struct PlacedFace
{
    int face = -1;
    /// Shell vertices in the face's cycle order.
    std::vector<int> vertices;
    std::vector<Vec2> points;
};

struct Hinge
{
    int parent_face = -1;
    int child_face = -1;
    int edge = -1;
    /// The shared segment as placed.
    Vec2 from, to;
};

/**
 * A cut leaf: two faces that meet at `vertex` across the cut edge to
 * `partner` without sharing an edge.
 */
struct VertexConnection
{
    int vertex = -1;
    int partner = -1;
    int face_a = -1;
    int face_b = -1;
    Vec2 point;
    Vec2 partner_in_a;
    Vec2 partner_in_b;
};

struct NetLayout
{
    /// Indexed by face number.
    std::vector<PlacedFace> faces;
    /// In placement order.
    std::vector<Hinge> hinges;
    std::vector<VertexConnection> connections;
    int root_face = 0;
};

struct UnfoldOptions
{
    /// Defaults to face 0.
    std::optional<int> root_face;
};

/**
 * Lays the faces out in the plane, hinged along every shell edge outside
 * the cut. The root face keeps its shape under an isometry; every other
 * face is placed breadth-first by the proper rigid motion that glues it
 * to its parent along their shared edge. Throws StructuralError when the
 * uncut edges do not form a spanning tree of the face graph and
 * DegenerateInput when the spec has no coordinates.
 */
NetLayout unfold(const PolyhedronSpec& spec, const Cut& cut, const UnfoldOptions& options = {});

/// Leaves of the cut subgraph, ascending.
std::vector<int> vertex_connections(const ShellGraph& graph, const Cut& cut);

struct AreaMoments
{
    double area = 0;
    Vec2 centroid;
    double radius_of_gyration = 0;
};

/// Area, centroid and radius of gyration of the union of placed faces,
/// summing per-polygon integrals. Throws DegenerateInput on zero area.
AreaMoments centroid_and_rg(const NetLayout& layout);

struct OverlapReport
{
    bool overlaps = false;
    std::optional<std::pair<int, int>> witness;
    double area = 0;
};

/// Any two placed faces sharing interior area above tolerance. Touching
/// along an edge or at a vertex does not count.
OverlapReport check_overlap(const NetLayout& layout);

/// Area of the intersection of two simple polygons given counter-clockwise.
double intersection_area(std::span<const Vec2> a, std::span<const Vec2> b);

struct RankedNet
{
    CanonicalCut cut;
    NetLayout layout;
    Vec2 centroid;
    double radius_of_gyration = 0;
    bool overlaps = false;
    /// 1-based.
    std::size_t rank = 0;
};

/// Unfolds every cut and sorts by radius of gyration, ties by cut order.
std::vector<RankedNet> rank_nets(const PolyhedronSpec& spec, std::span<const CanonicalCut> cuts, unsigned workers = 0);

/// First net in rank order that does not overlap itself.
const RankedNet& select_optimal_net(std::span<const RankedNet> ranked);

struct SvgOptions
{
    /// Pixels per unit length.
    double scale = 100;
};

/// Faces as polygons, hinges as lines, vertex connections as circles.
std::string export_svg(const NetLayout& layout, const SvgOptions& options = {});

} // namespace foldnet

#endif
