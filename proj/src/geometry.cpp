#include "foldnet/geometry.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace foldnet {

namespace {

Vec2 rotate(Vec2 p, Vec2 unit) { return {unit.x * p.x - unit.y * p.y, unit.y * p.x + unit.x * p.y}; }

Vec3 newell_normal(const PolyhedronSpec& spec, const std::vector<int>& face)
{
    Vec3 n;
    for (std::size_t i = 0; i < face.size(); ++i) {
        Vec3 a = spec.vertices[static_cast<std::size_t>(face[i])];
        Vec3 b = spec.vertices[static_cast<std::size_t>(face[(i + 1) % face.size()])];
        n.x += (a.y - b.y) * (a.z + b.z);
        n.y += (a.z - b.z) * (a.x + b.x);
        n.z += (a.x - b.x) * (a.y + b.y);
    }
    return n;
}

/// Face in its own plane: first vertex at the origin, first edge along +x,
/// counter-clockwise seen from outside.
std::vector<Vec2> flatten(const PolyhedronSpec& spec, const std::vector<int>& face)
{
    Vec3 origin = spec.vertices[static_cast<std::size_t>(face[0])];
    Vec3 x_axis = spec.vertices[static_cast<std::size_t>(face[1])] - origin;
    Vec3 normal = newell_normal(spec, face);
    double x_len = norm(x_axis);
    double n_len = norm(normal);
    if (x_len == 0 || n_len == 0)
        throw DegenerateInput("face with zero extent in '" + spec.name + "'");
    x_axis = (1 / x_len) * x_axis;
    normal = (1 / n_len) * normal;
    Vec3 y_axis = cross(normal, x_axis);
    std::vector<Vec2> points;
    points.reserve(face.size());
    for (int v : face) {
        Vec3 d = spec.vertices[static_cast<std::size_t>(v)] - origin;
        points.push_back({dot(d, x_axis), dot(d, y_axis)});
    }
    return points;
}

std::size_t position_in(const std::vector<int>& cycle, int v)
{
    return static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), v) - cycle.begin());
}

class Unfolder
{
public:
    explicit Unfolder(const PolyhedronSpec& spec) :
        spec_(spec),
        graph_(build_shell_graph(spec, Boundary::allowed)),
        faces_(build_face_graph(spec, Boundary::allowed))
    {
        if (!spec.has_coordinates())
            throw DegenerateInput("'" + spec.name + "' has no vertex coordinates");
        for (const auto& face : spec.faces)
            local_.push_back(flatten(spec, face));
    }

    [[nodiscard]] const ShellGraph& graph() const { return graph_; }

    NetLayout run(const Cut& cut, int root) const
    {
        const int face_count = faces_.face_count;
        if (root < 0 || root >= face_count)
            throw std::invalid_argument("root face " + std::to_string(root) + " out of range");

        std::vector<std::vector<int>> hinges_of(static_cast<std::size_t>(face_count));
        int hinge_count = 0;
        for (int e = 0; e < graph_.edge_count(); ++e) {
            if (cut.edges.test(e))
                continue;
            int link = faces_.link_of_edge[static_cast<std::size_t>(e)];
            if (link < 0)
                throw StructuralError("uncut edge " + edge_name(e) + " borders only one face");
            const FaceLink& l = faces_.links[static_cast<std::size_t>(link)];
            hinges_of[static_cast<std::size_t>(l.face_a)].push_back(e);
            hinges_of[static_cast<std::size_t>(l.face_b)].push_back(e);
            ++hinge_count;
        }
        if (hinge_count != face_count - 1)
            throw StructuralError("uncut edges form " + std::to_string(hinge_count) + " hinges, a net of " +
                                  std::to_string(face_count) + " faces needs " + std::to_string(face_count - 1));

        NetLayout layout;
        layout.root_face = root;
        layout.faces.resize(static_cast<std::size_t>(face_count));
        std::vector<bool> placed(static_cast<std::size_t>(face_count), false);
        std::vector<int> queue{root};
        place(layout, root, local_[static_cast<std::size_t>(root)]);
        placed[static_cast<std::size_t>(root)] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int parent = queue[head];
            for (int e : hinges_of[static_cast<std::size_t>(parent)]) {
                const FaceLink& l = faces_.links[static_cast<std::size_t>(faces_.link_of_edge[static_cast<std::size_t>(e)])];
                int child = l.face_a == parent ? l.face_b : l.face_a;
                if (placed[static_cast<std::size_t>(child)])
                    continue;
                placed[static_cast<std::size_t>(child)] = true;
                queue.push_back(child);
                attach(layout, parent, child, e);
            }
        }
        if (static_cast<int>(queue.size()) != face_count)
            throw StructuralError("uncut edges do not connect all faces");

        add_connections(layout, cut);
        return layout;
    }

private:
    std::string edge_name(int e) const
    {
        return "(" + std::to_string(graph_.edge(e).u) + "," + std::to_string(graph_.edge(e).v) + ")";
    }

    void place(NetLayout& layout, int face, std::vector<Vec2> points) const
    {
        PlacedFace& placed = layout.faces[static_cast<std::size_t>(face)];
        placed.face = face;
        placed.vertices = spec_.faces[static_cast<std::size_t>(face)];
        placed.points = std::move(points);
    }

    void attach(NetLayout& layout, int parent, int child, int e) const
    {
        const Edge& edge = graph_.edge(e);
        const PlacedFace& host = layout.faces[static_cast<std::size_t>(parent)];
        const auto& child_cycle = spec_.faces[static_cast<std::size_t>(child)];
        const auto& local = local_[static_cast<std::size_t>(child)];

        Vec2 target_u = host.points[position_in(host.vertices, edge.u)];
        Vec2 target_v = host.points[position_in(host.vertices, edge.v)];
        Vec2 local_u = local[position_in(child_cycle, edge.u)];
        Vec2 local_v = local[position_in(child_cycle, edge.v)];

        // Both faces are counter-clockwise, so the shared edge runs in
        // opposite directions and a proper motion puts the child across it.
        Vec2 want = target_v - target_u;
        Vec2 have = local_v - local_u;
        double scale = norm(want) * norm(have);
        Vec2 unit{(have.x * want.x + have.y * want.y) / scale, (have.x * want.y - have.y * want.x) / scale};

        std::vector<Vec2> points;
        points.reserve(local.size());
        for (Vec2 p : local)
            points.push_back(target_u + rotate(p - local_u, unit));
        place(layout, child, std::move(points));
        layout.hinges.push_back({parent, child, e, target_u, target_v});
    }

    void add_connections(NetLayout& layout, const Cut& cut) const
    {
        auto degree = subgraph_degrees(graph_, cut.edges);
        for (int v = 0; v < graph_.vertex_count(); ++v) {
            if (degree[static_cast<std::size_t>(v)] != 1)
                continue;
            int cut_edge = -1;
            for (int e : graph_.incident_edges(v))
                if (cut.edges.test(e))
                    cut_edge = e;
            const auto& flanking = faces_.faces_of_edge[static_cast<std::size_t>(cut_edge)];
            if (flanking.size() != 2)
                continue;
            VertexConnection c;
            c.vertex = v;
            c.partner = graph_.other_end(cut_edge, v);
            c.face_a = flanking[0];
            c.face_b = flanking[1];
            const PlacedFace& a = layout.faces[static_cast<std::size_t>(c.face_a)];
            const PlacedFace& b = layout.faces[static_cast<std::size_t>(c.face_b)];
            c.point = a.points[position_in(a.vertices, v)];
            c.partner_in_a = a.points[position_in(a.vertices, c.partner)];
            c.partner_in_b = b.points[position_in(b.vertices, c.partner)];
            layout.connections.push_back(c);
        }
    }

    const PolyhedronSpec& spec_;
    ShellGraph graph_;
    FaceGraph faces_;
    std::vector<std::vector<Vec2>> local_;
};

double signed_area(std::span<const Vec2> poly)
{
    double twice = 0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        twice += cross(poly[i], poly[(i + 1) % poly.size()]);
    return twice / 2;
}

using Triangle = std::array<Vec2, 3>;

bool point_in_triangle(Vec2 p, Vec2 a, Vec2 b, Vec2 c)
{
    return cross(b - a, p - a) >= 0 && cross(c - b, p - b) >= 0 && cross(a - c, p - c) >= 0;
}

/// Ear clipping of a simple counter-clockwise polygon.
std::vector<Triangle> triangulate(std::span<const Vec2> poly)
{
    std::vector<Triangle> triangles;
    std::vector<std::size_t> ring(poly.size());
    for (std::size_t i = 0; i < ring.size(); ++i)
        ring[i] = i;
    while (ring.size() > 3) {
        bool clipped = false;
        for (std::size_t i = 0; i < ring.size() && !clipped; ++i) {
            std::size_t prev = ring[(i + ring.size() - 1) % ring.size()];
            std::size_t cur = ring[i];
            std::size_t next = ring[(i + 1) % ring.size()];
            Vec2 a = poly[prev], b = poly[cur], c = poly[next];
            if (cross(b - a, c - b) <= 0)
                continue;
            bool empty = true;
            for (std::size_t k : ring)
                if (k != prev && k != cur && k != next && point_in_triangle(poly[k], a, b, c))
                    empty = false;
            if (!empty)
                continue;
            triangles.push_back({a, b, c});
            ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
        }
        if (!clipped)
            break;
    }
    if (ring.size() == 3)
        triangles.push_back({poly[ring[0]], poly[ring[1]], poly[ring[2]]});
    return triangles;
}

/// Sutherland-Hodgman clip of a convex polygon by a convex counter-clockwise one.
std::vector<Vec2> clip_convex(std::vector<Vec2> subject, std::span<const Vec2> clip)
{
    for (std::size_t i = 0; i < clip.size() && !subject.empty(); ++i) {
        Vec2 a = clip[i];
        Vec2 b = clip[(i + 1) % clip.size()];
        auto side = [&](Vec2 p) { return cross(b - a, p - a); };
        std::vector<Vec2> out;
        for (std::size_t k = 0; k < subject.size(); ++k) {
            Vec2 p = subject[k];
            Vec2 q = subject[(k + 1) % subject.size()];
            double sp = side(p), sq = side(q);
            if (sp >= 0)
                out.push_back(p);
            if ((sp >= 0) != (sq >= 0))
                out.push_back(p + (sp / (sp - sq)) * (q - p));
        }
        subject = std::move(out);
    }
    return subject;
}

struct Box
{
    double min_x, min_y, max_x, max_y;
};

Box bounding_box(std::span<const Vec2> poly)
{
    Box box{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
            std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (Vec2 p : poly) {
        box.min_x = std::min(box.min_x, p.x);
        box.min_y = std::min(box.min_y, p.y);
        box.max_x = std::max(box.max_x, p.x);
        box.max_y = std::max(box.max_y, p.y);
    }
    return box;
}

double mean_edge_length(const NetLayout& layout)
{
    double total = 0;
    std::size_t count = 0;
    for (const auto& face : layout.faces)
        for (std::size_t i = 0; i < face.points.size(); ++i, ++count)
            total += norm(face.points[(i + 1) % face.points.size()] - face.points[i]);
    return count == 0 ? 0 : total / static_cast<double>(count);
}

std::string number(double value)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.3f", value);
    std::string text = buffer;
    if (text == "-0.000")
        text = "0.000";
    return text;
}

} // namespace

NetLayout unfold(const PolyhedronSpec& spec, const Cut& cut, const UnfoldOptions& options)
{
    return Unfolder(spec).run(cut, options.root_face.value_or(0));
}

std::vector<int> vertex_connections(const ShellGraph& graph, const Cut& cut) { return cut_leaves(graph, cut); }

AreaMoments centroid_and_rg(const NetLayout& layout)
{
    Vec2 origin;
    std::size_t count = 0;
    for (const auto& face : layout.faces)
        for (Vec2 p : face.points) {
            origin = origin + p;
            ++count;
        }
    if (count == 0)
        throw DegenerateInput("layout has no faces");
    origin = (1.0 / static_cast<double>(count)) * origin;

    double area = 0, moment_x = 0, moment_y = 0, second = 0;
    for (const auto& face : layout.faces) {
        const std::size_t n = face.points.size();
        for (std::size_t i = 0; i < n; ++i) {
            Vec2 p = face.points[i] - origin;
            Vec2 q = face.points[(i + 1) % n] - origin;
            double c = cross(p, q);
            area += c;
            moment_x += (p.x + q.x) * c;
            moment_y += (p.y + q.y) * c;
            second += (p.x * p.x + p.x * q.x + q.x * q.x + p.y * p.y + p.y * q.y + q.y * q.y) * c;
        }
    }
    area /= 2;
    if (!(area > 0))
        throw DegenerateInput("layout has zero area");
    Vec2 offset{moment_x / (6 * area), moment_y / (6 * area)};
    double rg_squared = second / (12 * area) - dot(offset, offset);
    return {area, origin + offset, std::sqrt(std::max(0.0, rg_squared))};
}

double intersection_area(std::span<const Vec2> a, std::span<const Vec2> b)
{
    double total = 0;
    auto triangles_b = triangulate(b);
    for (const auto& ta : triangulate(a))
        for (const auto& tb : triangles_b) {
            auto piece = clip_convex({ta.begin(), ta.end()}, tb);
            if (piece.size() >= 3)
                total += std::abs(signed_area(piece));
        }
    return total;
}

OverlapReport check_overlap(const NetLayout& layout)
{
    OverlapReport report;
    const double length = mean_edge_length(layout);
    const double tolerance = 1e-9 * length;
    const double area_tolerance = 1e-9 * length * length;
    std::vector<Box> boxes;
    for (const auto& face : layout.faces)
        boxes.push_back(bounding_box(face.points));
    for (std::size_t i = 0; i < layout.faces.size(); ++i)
        for (std::size_t j = i + 1; j < layout.faces.size(); ++j) {
            const Box& p = boxes[i];
            const Box& q = boxes[j];
            if (p.max_x <= q.min_x + tolerance || q.max_x <= p.min_x + tolerance || p.max_y <= q.min_y + tolerance ||
                q.max_y <= p.min_y + tolerance)
                continue;
            double shared = intersection_area(layout.faces[i].points, layout.faces[j].points);
            if (shared > area_tolerance) {
                report.overlaps = true;
                report.witness = {layout.faces[i].face, layout.faces[j].face};
                report.area = shared;
                return report;
            }
        }
    return report;
}

std::vector<RankedNet> rank_nets(const PolyhedronSpec& spec, std::span<const CanonicalCut> cuts, unsigned workers)
{
    Unfolder unfolder(spec);
    std::vector<RankedNet> ranked(cuts.size());
    detail::parallel_for(
        cuts.size(), workers,
        [&](std::size_t i) {
            RankedNet& net = ranked[i];
            net.cut = cuts[i];
            try {
                net.layout = unfolder.run(cuts[i].representative, 0);
            }
            catch (const StructuralError& error) {
                std::string edges;
                for (int e : cuts[i].representative.edge_indices())
                    edges += (edges.empty() ? "" : " ") + std::to_string(e);
                throw StructuralError("cut " + std::to_string(i) + " [" + edges + "]: " + error.what());
            }
            AreaMoments moments = centroid_and_rg(net.layout);
            net.centroid = moments.centroid;
            net.radius_of_gyration = moments.radius_of_gyration;
            net.overlaps = check_overlap(net.layout).overlaps;
        },
        16);
    std::sort(ranked.begin(), ranked.end(), [](const RankedNet& a, const RankedNet& b) {
        if (a.radius_of_gyration != b.radius_of_gyration)
            return a.radius_of_gyration < b.radius_of_gyration;
        return CutOrder{}(a.cut.representative, b.cut.representative);
    });
    for (std::size_t i = 0; i < ranked.size(); ++i)
        ranked[i].rank = i + 1;
    return ranked;
}

const RankedNet& select_optimal_net(std::span<const RankedNet> ranked)
{
    if (ranked.empty())
        throw std::invalid_argument("no ranked nets to select from");
    for (const auto& net : ranked)
        if (!net.overlaps)
            return net;
    throw FallbackExhausted("all " + std::to_string(ranked.size()) +
                            " optimal nets overlap themselves; fewer-leaf cuts would be needed");
}

std::string export_svg(const NetLayout& layout, const SvgOptions& options)
{
    std::vector<Vec2> all;
    for (const auto& face : layout.faces)
        all.insert(all.end(), face.points.begin(), face.points.end());
    if (all.empty())
        throw std::invalid_argument("cannot draw an empty layout");
    if (!(options.scale > 0))
        throw std::invalid_argument("svg scale must be positive");

    const double margin = 0.25;
    Box box = bounding_box(all);
    auto px = [&](Vec2 p) { return number((p.x - box.min_x + margin) * options.scale); };
    auto py = [&](Vec2 p) { return number((box.max_y - p.y + margin) * options.scale); };
    std::string width = number((box.max_x - box.min_x + 2 * margin) * options.scale);
    std::string height = number((box.max_y - box.min_y + 2 * margin) * options.scale);

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + width + "\" height=\"" + height +
           "\" viewBox=\"0 0 " + width + " " + height + "\">\n";
    out += "<g class=\"faces\" fill=\"#f3e7c4\" stroke=\"#202020\" stroke-width=\"2\" stroke-linejoin=\"round\">\n";
    for (const auto& face : layout.faces) {
        out += "<polygon data-face=\"" + std::to_string(face.face) + "\" points=\"";
        for (std::size_t i = 0; i < face.points.size(); ++i)
            out += (i ? " " : "") + px(face.points[i]) + "," + py(face.points[i]);
        out += "\"/>\n";
    }
    out += "</g>\n<g class=\"hinges\" stroke=\"#7a7a7a\" stroke-width=\"1\" stroke-dasharray=\"6 4\">\n";
    for (const auto& hinge : layout.hinges)
        out += "<line data-edge=\"" + std::to_string(hinge.edge) + "\" x1=\"" + px(hinge.from) + "\" y1=\"" +
               py(hinge.from) + "\" x2=\"" + px(hinge.to) + "\" y2=\"" + py(hinge.to) + "\"/>\n";
    out += "</g>\n<g class=\"connections\" fill=\"none\" stroke=\"#c0182a\" stroke-width=\"2\">\n";
    for (const auto& c : layout.connections)
        out += "<circle data-vertex=\"" + std::to_string(c.vertex) + "\" cx=\"" + px(c.point) + "\" cy=\"" +
               py(c.point) + "\" r=\"7\"/>\n";
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace foldnet
