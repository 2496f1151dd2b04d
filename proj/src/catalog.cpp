#include "foldnet/catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <stdexcept>

namespace foldnet {

namespace {

using Triple = std::array<double, 3>;

constexpr double phi = std::numbers::phi;

enum class Perms { all, even };
enum class Signs { all, even_plus, odd_plus };

// Sign-and-permutation orbit of one coordinate triple; duplicates from
// zero coordinates are dropped.
void add_orbit(std::vector<Vec3>& points, Triple base, Perms perms, Signs signs = Signs::all)
{
    static constexpr std::array<std::array<int, 3>, 3> even{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};
    static constexpr std::array<std::array<int, 3>, 3> odd{{{1, 0, 2}, {0, 2, 1}, {2, 1, 0}}};
    std::vector<std::array<int, 3>> orders(even.begin(), even.end());
    if (perms == Perms::all)
        orders.insert(orders.end(), odd.begin(), odd.end());
    for (const auto& order : orders) {
        for (int mask = 0; mask < 8; ++mask) {
            Triple p{};
            int plus = 0;
            for (int k = 0; k < 3; ++k) {
                bool negative = (mask >> k) & 1;
                plus += negative ? 0 : 1;
                p[static_cast<std::size_t>(k)] = (negative ? -1.0 : 1.0) * base[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
            }
            if (signs == Signs::even_plus && plus % 2 != 0)
                continue;
            if (signs == Signs::odd_plus && plus % 2 != 1)
                continue;
            Vec3 v{p[0], p[1], p[2]};
            bool seen = std::any_of(points.begin(), points.end(), [&](const Vec3& q) { return norm(q - v) < 1e-12; });
            if (!seen)
                points.push_back(v);
        }
    }
}

std::vector<Vec3> orbit_points(std::initializer_list<Triple> bases, Perms perms, Signs signs = Signs::all)
{
    std::vector<Vec3> points;
    for (const auto& base : bases)
        add_orbit(points, base, perms, signs);
    return points;
}

std::vector<Vec3> octagonal_points(bool dipyramid)
{
    std::vector<Vec3> points{{0, 0, 1}};
    for (int k = 0; k < 8; ++k) {
        double angle = 2 * std::numbers::pi * k / 8;
        points.push_back({std::cos(angle), std::sin(angle), 0});
    }
    if (dipyramid)
        points.push_back({0, 0, -1});
    return points;
}

std::vector<Vec3> snub_cube_points()
{
    // Tribonacci constant: real root of t^3 = t^2 + t + 1.
    const double t = (1 + std::cbrt(19 + 3 * std::sqrt(33.0)) + std::cbrt(19 - 3 * std::sqrt(33.0))) / 3;
    std::vector<Vec3> points;
    add_orbit(points, {1, 1 / t, t}, Perms::even, Signs::even_plus);
    // Odd permutations with an odd number of plus signs.
    std::vector<Vec3> odd;
    add_orbit(odd, {1 / t, 1, t}, Perms::even, Signs::odd_plus);
    points.insert(points.end(), odd.begin(), odd.end());
    return points;
}

std::vector<Vec3> snub_dodecahedron_points()
{
    // xi: real root of xi^3 - 2 xi = phi, by Newton iteration from 1.7.
    double xi = 1.7;
    for (int k = 0; k < 60; ++k)
        xi -= (xi * xi * xi - 2 * xi - phi) / (3 * xi * xi - 2);
    const double a = xi - 1 / xi;
    const double b = xi * phi + phi * phi + phi / xi;
    return orbit_points({{2 * a, 2, 2 * b},
                         {a + b / phi + phi, -a * phi + b + 1 / phi, a / phi + b * phi - 1},
                         {-a / phi + b * phi + 1, -a + b / phi - phi, a * phi + b - 1 / phi},
                         {-a / phi + b * phi - 1, a - b / phi - phi, a * phi + b + 1 / phi},
                         {a + b / phi - phi, a * phi - b + 1 / phi, a / phi + b * phi + 1}},
                        Perms::even, Signs::even_plus);
}

CatalogEntry make_entry(std::string name, PolyhedronSpec spec, ReferenceValues reference, RunTier tier)
{
    return CatalogEntry{std::move(name), std::move(spec), reference, tier};
}

std::vector<CatalogEntry> build_catalog()
{
    const double r2 = std::sqrt(2.0);
    std::vector<CatalogEntry> c;
    auto hull = [](std::string name, std::vector<Vec3> points) { return convex_polyhedron(std::move(name), points); };

    auto tetrahedron = hull("tetrahedron", {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}});
    auto cube = hull("cube", orbit_points({{1, 1, 1}}, Perms::all));
    auto octahedron = hull("octahedron", orbit_points({{1, 0, 0}}, Perms::all));
    auto icosahedron = hull("icosahedron", orbit_points({{0, 1, phi}}, Perms::even));
    auto dodecahedron = hull("dodecahedron", orbit_points({{1, 1, 1}, {0, 1 / phi, phi}}, Perms::even));
    auto truncated_icosahedron =
        hull("truncated-icosahedron", orbit_points({{0, 1, 3 * phi}, {1, 2 + phi, 2 * phi}, {phi, 2, phi * phi * phi}}, Perms::even));
    auto truncated_dodecahedron = hull(
        "truncated-dodecahedron", orbit_points({{0, 1 / phi, 2 + phi}, {1 / phi, phi, 2 * phi}, {phi, 2, phi + 1}}, Perms::even));

    // Table order. Tetrahedron reference uses V=4, E=6, F=4.
    c.push_back(make_entry("tetrahedron", tetrahedron, {4, 6, 4, 3, 1, 4}, RunTier::quick));
    c.push_back(make_entry("octahedron", octahedron, {6, 12, 8, 4, 2, {}}, RunTier::quick));
    c.push_back(make_entry("cube", cube, {8, 12, 6, 4, 4, 120}, RunTier::quick));
    c.push_back(make_entry("icosahedron", icosahedron, {12, 30, 20, 8, 21, {}}, RunTier::quick));
    c.push_back(make_entry("dodecahedron", dodecahedron, {20, 30, 12, 10, 21, 1980}, RunTier::quick));
    c.push_back(make_entry("octagonal-pyramid", hull("octagonal-pyramid", octagonal_points(false)), {9, 16, 9, 8, 1, {}},
                           RunTier::quick));
    c.push_back(make_entry("octagonal-dipyramid", hull("octagonal-dipyramid", octagonal_points(true)),
                           {10, 24, 16, 7, 3, {}}, RunTier::quick));
    c.push_back(make_entry("truncated-tetrahedron",
                           hull("truncated-tetrahedron", orbit_points({{3, 1, 1}}, Perms::all, Signs::odd_plus)),
                           {12, 18, 8, 6, 4, {}}, RunTier::quick));
    c.push_back(make_entry("cuboctahedron", hull("cuboctahedron", orbit_points({{1, 1, 0}}, Perms::all)),
                           {12, 24, 14, 7, 34, {}}, RunTier::quick));
    c.push_back(make_entry("truncated-cube", hull("truncated-cube", orbit_points({{r2 - 1, 1, 1}}, Perms::all)),
                           {24, 36, 14, 10, 399, {}}, RunTier::mid));
    c.push_back(make_entry("snub-cube", hull("snub-cube", snub_cube_points()), {24, 60, 38, 16, 600, {}}, RunTier::mid));
    c.push_back(make_entry("rhombicuboctahedron", hull("rhombicuboctahedron", orbit_points({{1, 1, 1 + r2}}, Perms::all)),
                           {24, 48, 26, 15, 32, 1536}, RunTier::mid));
    c.push_back(make_entry("truncated-octahedron", hull("truncated-octahedron", orbit_points({{0, 1, 2}}, Perms::all)),
                           {24, 36, 14, 12, 56, {}}, RunTier::mid));
    c.push_back(make_entry("icosidodecahedron",
                           hull("icosidodecahedron", orbit_points({{0, 0, phi}, {0.5, phi / 2, phi * phi / 2}}, Perms::even)),
                           {30, 60, 32, 16, 308928, {}}, RunTier::long_run));
    c.push_back(make_entry("truncated-cuboctahedron",
                           hull("truncated-cuboctahedron", orbit_points({{1, 1 + r2, 1 + 2 * r2}}, Perms::all)),
                           {48, 72, 26, 24, 244, {}}, RunTier::mid));
    c.push_back(make_entry("truncated-icosahedron", truncated_icosahedron, {60, 90, 32, 30, 4114, 484800}, RunTier::long_run));
    c.push_back(make_entry("truncated-dodecahedron", truncated_dodecahedron, {60, 90, 32, 22, 3719677167ULL, {}},
                           RunTier::long_run));
    c.push_back(make_entry(
        "rhombicosidodecahedron",
        hull("rhombicosidodecahedron",
             orbit_points({{1, 1, phi * phi * phi}, {phi * phi, phi, 2 * phi}, {2 + phi, 0, phi * phi}}, Perms::even)),
        {60, 120, 62, 37, 77952, {}}, RunTier::long_run));
    c.push_back(make_entry("snub-dodecahedron", hull("snub-dodecahedron", snub_dodecahedron_points()),
                           {60, 150, 92, 39, 13436928, {}}, RunTier::long_run));
    c.push_back(make_entry("triakis-icosahedron", polar_dual("triakis-icosahedron", truncated_dodecahedron),
                           {32, 90, 60, 26, 664128, {}}, RunTier::long_run));
    c.push_back(make_entry("pentakis-dodecahedron", polar_dual("pentakis-dodecahedron", truncated_icosahedron),
                           {32, 90, 60, 22, 845280, {}}, RunTier::long_run));
    return c;
}

} // namespace

PolyhedronSpec convex_polyhedron(std::string name, std::span<const Vec3> input)
{
    // Canonical vertex order: top to bottom, then by y and x.
    std::vector<Vec3> points(input.begin(), input.end());
    double scale = 0;
    for (const auto& p : points)
        scale = std::max(scale, norm(p));
    const double tol = 1e-9 * std::max(scale, 1.0);
    auto coordinate_less = [tol](double a, double b) { return a < b - tol; };
    std::sort(points.begin(), points.end(), [&](const Vec3& a, const Vec3& b) {
        if (coordinate_less(b.z, a.z) || coordinate_less(a.z, b.z))
            return a.z > b.z;
        if (coordinate_less(b.y, a.y) || coordinate_less(a.y, b.y))
            return a.y > b.y;
        return a.x > b.x;
    });

    const int n = static_cast<int>(points.size());
    std::set<std::vector<int>> seen;
    struct Face
    {
        std::vector<int> cycle;
        double height;
    };
    std::vector<Face> faces;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec3 normal = cross(points[static_cast<std::size_t>(j)] - points[static_cast<std::size_t>(i)],
                                    points[static_cast<std::size_t>(k)] - points[static_cast<std::size_t>(i)]);
                double length = norm(normal);
                if (length < tol * scale)
                    continue;
                normal = (1 / length) * normal;
                double offset = dot(normal, points[static_cast<std::size_t>(i)]);
                bool above = false, below = false;
                std::vector<int> on_plane;
                for (int m = 0; m < n; ++m) {
                    double s = dot(normal, points[static_cast<std::size_t>(m)]) - offset;
                    if (s > tol)
                        above = true;
                    else if (s < -tol)
                        below = true;
                    else
                        on_plane.push_back(m);
                }
                if (above && below)
                    continue;
                if (above)
                    normal = -1.0 * normal;
                if (!seen.insert(on_plane).second)
                    continue;
                Vec3 centre{};
                for (int m : on_plane)
                    centre = centre + points[static_cast<std::size_t>(m)];
                centre = (1.0 / static_cast<double>(on_plane.size())) * centre;
                Vec3 u = points[static_cast<std::size_t>(on_plane[0])] - centre;
                u = (1 / norm(u)) * u;
                Vec3 w = cross(normal, u);
                std::vector<std::pair<double, int>> around;
                for (int m : on_plane) {
                    Vec3 d = points[static_cast<std::size_t>(m)] - centre;
                    around.emplace_back(std::atan2(dot(d, w), dot(d, u)), m);
                }
                std::sort(around.begin(), around.end());
                std::vector<int> cycle;
                for (const auto& [angle, m] : around)
                    cycle.push_back(m);
                std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
                faces.push_back({std::move(cycle), centre.z});
            }
    std::sort(faces.begin(), faces.end(), [&](const Face& a, const Face& b) {
        if (std::abs(a.height - b.height) > tol)
            return a.height > b.height;
        return a.cycle < b.cycle;
    });

    PolyhedronSpec spec;
    spec.name = std::move(name);
    spec.vertex_count = n;
    spec.vertices = std::move(points);
    for (auto& face : faces)
        spec.faces.push_back(std::move(face.cycle));
    return spec;
}

PolyhedronSpec polar_dual(std::string name, const PolyhedronSpec& spec)
{
    std::vector<Vec3> points;
    for (const auto& face : spec.faces) {
        Vec3 a = spec.vertices[static_cast<std::size_t>(face[0])];
        Vec3 b = spec.vertices[static_cast<std::size_t>(face[1])];
        Vec3 c = spec.vertices[static_cast<std::size_t>(face[2])];
        Vec3 normal = cross(b - a, c - a);
        normal = (1 / norm(normal)) * normal;
        double offset = dot(normal, a);
        if (!(offset > 0))
            throw StructuralError("polar dual needs the origin strictly inside '" + spec.name + "'");
        points.push_back((1 / offset) * normal);
    }
    return convex_polyhedron(std::move(name), points);
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

std::vector<std::string> catalog_names()
{
    std::vector<std::string> names;
    for (const auto& entry : catalog())
        names.push_back(entry.name);
    return names;
}

const CatalogEntry& catalog_entry(std::string_view name)
{
    std::string key(name);
    if (key == "small-rhombicuboctahedron")
        key = "rhombicuboctahedron";
    else if (key == "buckyball" || key == "soccer-ball")
        key = "truncated-icosahedron";
    for (const auto& entry : catalog())
        if (entry.name == key)
            return entry;
    std::string list;
    for (const auto& entry : catalog())
        list += (list.empty() ? "" : ", ") + entry.name;
    throw std::invalid_argument("unknown solid '" + std::string(name) + "'; available: " + list);
}

PolyhedronSpec builtin(std::string_view name)
{
    return catalog_entry(name).spec;
}

} // namespace foldnet
