#ifndef FOLDNET_ANALYSIS_HPP
#define FOLDNET_ANALYSIS_HPP

#include "foldnet/graph.hpp"
#include "foldnet/mlst.hpp"
#include "foldnet/symmetry.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace foldnet {

/// Leaf count trend in the edge count: E/4 + 2.
BigRational leaf_estimate(int edges);

/// Leaf count trend in the vertex count: (V + 3)/2.
BigRational leaf_estimate_from_vertices(int vertices);

/// Vertex count trend in the edge count: E/2 + 1.
BigRational vertex_estimate(int edges);

struct RatioEstimate
{
    double value = 0;
    /// Exact base-2 logarithm, 3/2 - E/2.
    BigRational log2;
};

/// Trend of the fraction of spanning trees that are optimal: 2^(3/2 - E/2).
RatioEstimate mlst_ratio_estimate(int edges);

struct ShellStatistics
{
    std::string name;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    BigInt spanning_trees;
    std::size_t automorphisms = 0;
    std::optional<int> leaves;
    std::optional<std::uint64_t> labelled_mlsts;
    std::optional<std::uint64_t> optimal_nets;
    BigRational leaf_estimate;
    RatioEstimate ratio_estimate;
    /// Set when the search ran out of budget; the optional counts are empty.
    bool partial = false;
    std::string note;

    [[nodiscard]] bool complete() const { return !partial && leaves.has_value(); }
    /// Exact N_MLST / N_ST of a complete row.
    [[nodiscard]] BigRational mlst_fraction() const;
};

struct StatisticsOptions
{
    SearchOptions search;
    /// Rows computed concurrently.
    unsigned row_workers = 1;
};

/**
 * Counts, automorphisms and optimal nets per closed shell. A row whose
 * search exceeds the budget is kept with only the cheap columns filled.
 */
std::vector<ShellStatistics> build_statistics_table(std::span<const PolyhedronSpec> specs,
                                                    const StatisticsOptions& options = {});

/// One row, searched within `search`'s budget.
ShellStatistics shell_statistics(const PolyhedronSpec& spec, const SearchOptions& search = {});

/// Counts and estimates only; marked partial with the note "not searched".
ShellStatistics basic_statistics(const PolyhedronSpec& spec);

/// Estimate minus exact value for every complete row.
struct ResidualRow
{
    std::string name;
    int vertices = 0;
    int edges = 0;
    int leaves = 0;
    BigRational leaf_from_edges;
    BigRational leaf_from_vertices;
    BigRational vertex_from_edges;
    double log2_fraction = 0;
    BigRational log2_fraction_estimate;

    [[nodiscard]] BigRational leaf_residual() const { return leaf_from_edges - leaves; }
    [[nodiscard]] BigRational leaf_residual_from_vertices() const { return leaf_from_vertices - leaves; }
    [[nodiscard]] BigRational vertex_residual() const { return vertex_from_edges - vertices; }
    [[nodiscard]] double log2_fraction_residual() const;
};

std::vector<ResidualRow> residual_report(std::span<const ShellStatistics> rows);

struct TrendFit
{
    std::size_t points = 0;
    double slope = 0;
    double intercept = 0;
    /// Spearman correlation, ties ranked by their mean position.
    double rank_correlation = 0;
};

/// Least-squares line and rank correlation of y against x.
TrendFit fit_trend(std::span<const double> x, std::span<const double> y);

/// log2(N_MLST / N_ST) against E over the complete rows.
TrendFit mlst_fraction_trend(std::span<const ShellStatistics> rows);

struct PlotSeries
{
    std::string name;
    std::string x_label;
    std::string y_label;
    std::vector<std::pair<double, double>> points;
};

/**
 * Leaves, log2 optimal fraction and log10 of the net-count lower bound,
 * each against E, plus the matching trend lines sampled at the same E.
 */
std::vector<PlotSeries> plot_series(std::span<const ShellStatistics> rows);

} // namespace foldnet

#endif
