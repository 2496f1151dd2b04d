#ifndef FOLDNET_CATALOG_HPP
#define FOLDNET_CATALOG_HPP

#include "foldnet/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foldnet {

/// How long the exact pipeline takes for a solid: seconds, minutes, hours.
enum class RunTier { quick, mid, long_run };

/// Reference values for a built-in solid; absent where none are known.
struct ReferenceValues
{
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int leaves = 0;
    std::uint64_t optimal_nets = 0;
    std::optional<std::uint64_t> labelled_mlsts;
};

struct CatalogEntry
{
    std::string name;
    PolyhedronSpec spec;
    ReferenceValues reference;
    RunTier tier = RunTier::quick;
};

/// The built-in solids, in table order.
const std::vector<CatalogEntry>& catalog();

std::vector<std::string> catalog_names();

/// Throws std::invalid_argument listing the catalog for unknown names.
const CatalogEntry& catalog_entry(std::string_view name);

PolyhedronSpec builtin(std::string_view name);

/**
 * Convex hull of points in convex position. Faces are maximal coplanar
 * vertex sets ordered counter-clockwise from outside, starting at their
 * lowest vertex; faces are sorted top-down by centroid height.
 */
PolyhedronSpec convex_polyhedron(std::string name, std::span<const Vec3> points);

/// Polar reciprocal about the origin, which must be strictly inside.
PolyhedronSpec polar_dual(std::string name, const PolyhedronSpec& spec);

} // namespace foldnet

#endif
