// Slow reference implementations, written independently of the library
// code they check.
#ifndef FOLDNET_TESTS_ORACLES_HPP
#define FOLDNET_TESTS_ORACLES_HPP

#include "foldnet/geometry.hpp"
#include "foldnet/graph.hpp"
#include "foldnet/symmetry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using foldnet::BigInt;
using foldnet::BigRational;
using foldnet::Cut;
using foldnet::EdgeSet;
using foldnet::ShellGraph;

inline ShellGraph make_graph(int n, std::vector<std::pair<int, int>> edges) { return ShellGraph(n, edges); }

inline ShellGraph complete_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return make_graph(n, edges);
}

inline ShellGraph cycle_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return make_graph(n, edges);
}

inline ShellGraph path_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return make_graph(n, edges);
}

/// Hub 0 joined to the rim 1..n.
inline ShellGraph wheel_graph(int n)
{
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i % n + 1);
    }
    return make_graph(n + 1, edges);
}

inline ShellGraph hypercube_graph(int dimension)
{
    std::vector<std::pair<int, int>> edges;
    int n = 1 << dimension;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dimension; ++b)
            if (!(v & (1 << b)))
                edges.emplace_back(v, v | (1 << b));
    return make_graph(n, edges);
}

/// Complete multipartite graph with `parts` parts of `size` vertices.
inline ShellGraph multipartite_graph(int parts, int size)
{
    std::vector<std::pair<int, int>> edges;
    int n = parts * size;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / size != v / size)
                edges.emplace_back(u, v);
    return make_graph(n, edges);
}

struct UnionFind
{
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

/// Every (V-1)-edge subset that is acyclic, as sorted edge-index vectors.
inline std::vector<std::vector<int>> subset_spanning_trees(const ShellGraph& g)
{
    std::vector<std::vector<int>> trees;
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> chosen;
    std::function<void(int)> pick = [&](int next) {
        if (static_cast<int>(chosen.size()) == n - 1) {
            UnionFind uf(n);
            for (int e : chosen)
                if (!uf.unite(g.edge(e).u, g.edge(e).v))
                    return;
            trees.push_back(chosen);
            return;
        }
        if (m - next < n - 1 - static_cast<int>(chosen.size()))
            return;
        chosen.push_back(next);
        pick(next + 1);
        chosen.pop_back();
        pick(next + 1);
    };
    pick(0);
    return trees;
}

/// Reduced Laplacian determinant by exact rational Gaussian elimination.
inline BigInt rational_tree_count(const ShellGraph& g)
{
    const int n = g.vertex_count() - 1;
    if (n <= 0)
        return 1;
    std::vector<std::vector<BigRational>> m(static_cast<std::size_t>(n), std::vector<BigRational>(static_cast<std::size_t>(n)));
    for (const auto& e : g.edges()) {
        for (int a : {e.u, e.v})
            if (a < n)
                m[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] += 1;
        if (e.u < n && e.v < n) {
            m[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] -= 1;
            m[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] -= 1;
        }
    }
    BigRational det = 1;
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && m[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(c)]);
            det = -det;
        }
        det *= m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
        for (int r = c + 1; r < n; ++r) {
            BigRational f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] / m[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
            if (f == 0)
                continue;
            for (int k = c; k < n; ++k)
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] -= f * m[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)];
        }
    }
    return boost::multiprecision::numerator(det);
}

inline int leaf_count(const ShellGraph& g, const std::vector<int>& edges)
{
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int e : edges) {
        ++degree[static_cast<std::size_t>(g.edge(e).u)];
        ++degree[static_cast<std::size_t>(g.edge(e).v)];
    }
    return static_cast<int>(std::count(degree.begin(), degree.end(), 1));
}

/// Every permutation of the vertices that preserves adjacency.
inline std::vector<std::vector<int>> permutation_automorphisms(const ShellGraph& g)
{
    std::vector<int> p(static_cast<std::size_t>(g.vertex_count()));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> found;
    do {
        bool keeps = true;
        for (const auto& e : g.edges())
            if (!g.adjacent(p[static_cast<std::size_t>(e.u)], p[static_cast<std::size_t>(e.v)])) {
                keeps = false;
                break;
            }
        if (keeps)
            found.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return found;
}

inline std::vector<int> image(const ShellGraph& g, const std::vector<int>& perm, const std::vector<int>& edges)
{
    std::vector<int> out;
    for (int e : edges)
        out.push_back(g.edge_index(perm[static_cast<std::size_t>(g.edge(e).u)], perm[static_cast<std::size_t>(g.edge(e).v)]));
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of orbits of edge sets under the vertex permutations, by
/// walking each unvisited set's full orbit.
inline std::size_t orbit_count(const ShellGraph& g, const std::vector<std::vector<int>>& perms,
                               const std::vector<std::vector<int>>& sets)
{
    std::set<std::vector<int>> seen;
    std::size_t orbits = 0;
    for (const auto& s : sets) {
        if (seen.contains(s))
            continue;
        ++orbits;
        for (const auto& p : perms)
            seen.insert(image(g, p, s));
    }
    return orbits;
}

inline std::vector<int> to_vector(const Cut& cut) { return cut.edge_indices(); }

/// Area, centroid and polar second moment by fan triangulation and the
/// triangle formulas, for counter-clockwise convex polygons.
struct Moments
{
    double area = 0, cx = 0, cy = 0, rg = 0;
};

inline Moments triangle_moments(const std::vector<std::vector<foldnet::Vec2>>& polygons)
{
    double area = 0, sx = 0, sy = 0, second = 0;
    for (const auto& poly : polygons)
        for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
            foldnet::Vec2 a = poly[0], b = poly[i], c = poly[i + 1];
            double t = ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)) / 2;
            area += t;
            sx += t * (a.x + b.x + c.x) / 3;
            sy += t * (a.y + b.y + c.y) / 3;
            // Integral of |p|^2 over a triangle: A/6 (sum |v|^2 + sum v.w).
            auto d = [](foldnet::Vec2 p, foldnet::Vec2 q) { return p.x * q.x + p.y * q.y; };
            second += t / 6 * (d(a, a) + d(b, b) + d(c, c) + d(a, b) + d(b, c) + d(c, a));
        }
    Moments m;
    m.area = area;
    m.cx = sx / area;
    m.cy = sy / area;
    m.rg = std::sqrt(second / area - m.cx * m.cx - m.cy * m.cy);
    return m;
}

inline bool strictly_inside_convex(foldnet::Vec2 p, const std::vector<foldnet::Vec2>& poly, double margin)
{
    for (std::size_t i = 0; i < poly.size(); ++i) {
        foldnet::Vec2 a = poly[i], b = poly[(i + 1) % poly.size()];
        double len = std::hypot(b.x - a.x, b.y - a.y);
        if (((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / len <= margin)
            return false;
    }
    return true;
}

/// Samples a grid inside each convex face and looks for a point strictly
/// inside two faces at once.
inline bool sampled_overlap(const foldnet::NetLayout& layout, int grid = 12)
{
    std::vector<foldnet::Vec2> samples;
    std::vector<std::size_t> owner;
    for (std::size_t f = 0; f < layout.faces.size(); ++f) {
        const auto& poly = layout.faces[f].points;
        for (std::size_t i = 1; i + 1 < poly.size(); ++i)
            for (int a = 1; a < grid; ++a)
                for (int b = 1; a + b < grid; ++b) {
                    double s = static_cast<double>(a) / grid, t = static_cast<double>(b) / grid;
                    foldnet::Vec2 p{poly[0].x + s * (poly[i].x - poly[0].x) + t * (poly[i + 1].x - poly[0].x),
                                    poly[0].y + s * (poly[i].y - poly[0].y) + t * (poly[i + 1].y - poly[0].y)};
                    samples.push_back(p);
                    owner.push_back(f);
                }
    }
    for (std::size_t k = 0; k < samples.size(); ++k)
        for (std::size_t f = 0; f < layout.faces.size(); ++f)
            if (f != owner[k] && strictly_inside_convex(samples[k], layout.faces[f].points, 1e-6))
                return true;
    return false;
}

/// Exact test for convex faces: a proper edge crossing, or a vertex, edge
/// midpoint or centroid of one face strictly inside another.
inline bool crossing_overlap(const foldnet::NetLayout& layout)
{
    using foldnet::Vec2;
    double scale = 0;
    std::size_t sides = 0;
    for (const auto& f : layout.faces)
        for (std::size_t i = 0; i < f.points.size(); ++i, ++sides)
            scale += std::hypot(f.points[(i + 1) % f.points.size()].x - f.points[i].x,
                                f.points[(i + 1) % f.points.size()].y - f.points[i].y);
    const double eps = 1e-9 * scale / static_cast<double>(sides);
    auto side = [&](Vec2 a, Vec2 b, Vec2 p) {
        double len = std::hypot(b.x - a.x, b.y - a.y);
        double d = ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x)) / len;
        return d > eps ? 1 : d < -eps ? -1 : 0;
    };
    auto probes = [](const std::vector<Vec2>& poly) {
        std::vector<Vec2> out = poly;
        Vec2 c{0, 0};
        for (std::size_t i = 0; i < poly.size(); ++i) {
            const Vec2& a = poly[i];
            const Vec2& b = poly[(i + 1) % poly.size()];
            out.push_back({(a.x + b.x) / 2, (a.y + b.y) / 2});
            c.x += a.x / static_cast<double>(poly.size());
            c.y += a.y / static_cast<double>(poly.size());
        }
        out.push_back(c);
        return out;
    };
    for (std::size_t f = 0; f < layout.faces.size(); ++f)
        for (std::size_t g = f + 1; g < layout.faces.size(); ++g) {
            const auto& p = layout.faces[f].points;
            const auto& q = layout.faces[g].points;
            for (std::size_t i = 0; i < p.size(); ++i)
                for (std::size_t j = 0; j < q.size(); ++j) {
                    Vec2 a = p[i], b = p[(i + 1) % p.size()], c = q[j], d = q[(j + 1) % q.size()];
                    if (side(a, b, c) * side(a, b, d) < 0 && side(c, d, a) * side(c, d, b) < 0)
                        return true;
                }
            for (const auto& [inner, outer] : {std::pair{&p, &q}, std::pair{&q, &p}})
                for (Vec2 x : probes(*inner))
                    if (strictly_inside_convex(x, *outer, eps))
                        return true;
        }
    return false;
}

} // namespace oracle

#endif
