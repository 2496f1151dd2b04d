#ifndef FOLDNET_IO_HPP
#define FOLDNET_IO_HPP

#include "foldnet/analysis.hpp"
#include "foldnet/geometry.hpp"
#include "foldnet/graph.hpp"
#include "foldnet/symmetry.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace foldnet {

/**
 * Reads a polyhedron document:
 *
 *   { "name": "cube",
 *     "vertices": [[x, y, z], ...],
 *     "faces": [[0, 1, 2, 3], ...] }
 *
 * "vertices" may be replaced by "vertex_count" for coordinate-free input.
 * Throws SchemaError naming the offending field, or the line and column
 * for malformed text.
 */
PolyhedronSpec load_polyhedron(std::string_view document);
PolyhedronSpec load_polyhedron_file(const std::filesystem::path& path);

/// Inverse of load_polyhedron; coordinates keep full double precision.
std::string save_polyhedron(const PolyhedronSpec& spec);

enum class CutListKind { labelled, nets };

/// A list of cuts on one shell, either every labelled cut or one per orbit.
struct CutList
{
    CutListKind kind = CutListKind::labelled;
    std::string shell;
    std::vector<int> hole_faces;
    int vertex_count = 0;
    std::vector<Edge> edges;
    int leaves = 0;
    int interior_size = 0;
    /// Search stopped early; `cuts` holds nothing trustworthy.
    bool partial = false;
    std::string note;
    std::vector<Cut> cuts;
    /// Parallel to `cuts` for kind == nets.
    std::vector<std::size_t> orbit_sizes;

    friend bool operator==(const CutList&, const CutList&) = default;
};

std::string save_results(const CutList& list);
CutList load_results(std::string_view document);

/// Tab-separated: rank, cut id (position in `nets`), R_g, overlap, edges.
std::string format_ranking(std::span<const RankedNet> ranked, std::span<const CanonicalCut> nets);

std::string format_statistics_table(std::span<const ShellStatistics> rows);
std::string format_residual_report(std::span<const ResidualRow> rows);
/// Long format: series, x, y.
std::string format_plot_data(std::span<const PlotSeries> series);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view text);

} // namespace foldnet

#endif
