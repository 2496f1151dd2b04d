#include "foldnet/analysis.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace foldnet {

namespace {

void require_positive_edges(int edges)
{
    if (edges <= 0)
        throw std::invalid_argument("edge count must be positive, got " + std::to_string(edges));
}

double log2_of(const BigRational& value)
{
    // Split off powers of two so huge counts stay representable.
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    auto log2_int = [](BigInt n) {
        long shift = 0;
        std::size_t bits = boost::multiprecision::msb(n);
        if (bits > 60) {
            shift = static_cast<long>(bits) - 60;
            n >>= shift;
        }
        return std::log2(n.convert_to<double>()) + static_cast<double>(shift);
    };
    return log2_int(num) - log2_int(den);
}

std::vector<double> ranks(std::span<const double> values)
{
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> result(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]])
            ++j;
        double mean = (static_cast<double>(i) + static_cast<double>(j)) / 2 + 1;
        for (std::size_t k = i; k <= j; ++k)
            result[order[k]] = mean;
        i = j + 1;
    }
    return result;
}

double pearson(std::span<const double> x, std::span<const double> y)
{
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxx == 0 || syy == 0 ? 0 : sxy / std::sqrt(sxx * syy);
}

} // namespace

BigRational leaf_estimate(int edges)
{
    require_positive_edges(edges);
    return BigRational(edges, 4) + 2;
}

BigRational leaf_estimate_from_vertices(int vertices)
{
    if (vertices < 4)
        throw std::invalid_argument("a shell has at least 4 vertices, got " + std::to_string(vertices));
    return BigRational(vertices + 3, 2);
}

BigRational vertex_estimate(int edges)
{
    require_positive_edges(edges);
    return BigRational(edges, 2) + 1;
}

RatioEstimate mlst_ratio_estimate(int edges)
{
    require_positive_edges(edges);
    BigRational exponent = BigRational(3 - edges, 2);
    return {std::exp2(exponent.convert_to<double>()), exponent};
}

BigRational ShellStatistics::mlst_fraction() const
{
    if (!labelled_mlsts || spanning_trees == 0)
        throw std::logic_error("row '" + name + "' has no optimal fraction");
    return BigRational(BigInt(*labelled_mlsts), spanning_trees);
}

ShellStatistics basic_statistics(const PolyhedronSpec& spec)
{
    ShellStatistics row;
    row.name = spec.name;
    ShellGraph graph = build_shell_graph(spec);
    row.vertices = graph.vertex_count();
    row.edges = graph.edge_count();
    row.faces = static_cast<int>(spec.faces.size());
    row.spanning_trees = count_spanning_trees(graph);
    row.automorphisms = find_automorphisms(graph).order();
    row.leaf_estimate = leaf_estimate(row.edges);
    row.ratio_estimate = mlst_ratio_estimate(row.edges);
    row.partial = true;
    row.note = "not searched";
    return row;
}

ShellStatistics shell_statistics(const PolyhedronSpec& spec, const SearchOptions& search)
{
    ShellStatistics row = basic_statistics(spec);
    ShellGraph graph = build_shell_graph(spec);
    try {
        MlstResult result = enumerate_mlsts(graph, search);
        row.leaves = result.leaf_count;
        row.labelled_mlsts = result.cuts.size();
        row.optimal_nets = dedupe_cuts(result.cuts, find_automorphisms(graph), search.workers).size();
        row.partial = false;
        row.note.clear();
    }
    catch (const BudgetExceeded& error) {
        row.note = error.what();
    }
    return row;
}

std::vector<ShellStatistics> build_statistics_table(std::span<const PolyhedronSpec> specs,
                                                    const StatisticsOptions& options)
{
    std::vector<ShellStatistics> rows(specs.size());
    detail::parallel_for(
        specs.size(), options.row_workers, [&](std::size_t i) { rows[i] = shell_statistics(specs[i], options.search); }, 1);
    return rows;
}

double ResidualRow::log2_fraction_residual() const
{
    return log2_fraction_estimate.convert_to<double>() - log2_fraction;
}

std::vector<ResidualRow> residual_report(std::span<const ShellStatistics> rows)
{
    std::vector<ResidualRow> report;
    for (const auto& row : rows) {
        if (!row.complete())
            continue;
        ResidualRow r;
        r.name = row.name;
        r.vertices = row.vertices;
        r.edges = row.edges;
        r.leaves = *row.leaves;
        r.leaf_from_edges = leaf_estimate(row.edges);
        r.leaf_from_vertices = leaf_estimate_from_vertices(row.vertices);
        r.vertex_from_edges = vertex_estimate(row.edges);
        r.log2_fraction = log2_of(row.mlst_fraction());
        r.log2_fraction_estimate = mlst_ratio_estimate(row.edges).log2;
        report.push_back(std::move(r));
    }
    return report;
}

TrendFit fit_trend(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("trend fit needs paired samples");
    TrendFit fit;
    fit.points = x.size();
    if (x.size() < 2)
        return fit;
    const double n = static_cast<double>(x.size());
    double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    fit.slope = sxx == 0 ? 0 : sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    auto rx = ranks(x);
    auto ry = ranks(y);
    fit.rank_correlation = pearson(rx, ry);
    return fit;
}

TrendFit mlst_fraction_trend(std::span<const ShellStatistics> rows)
{
    std::vector<double> x, y;
    for (const auto& r : residual_report(rows)) {
        x.push_back(r.edges);
        y.push_back(r.log2_fraction);
    }
    return fit_trend(x, y);
}

std::vector<PlotSeries> plot_series(std::span<const ShellStatistics> rows)
{
    PlotSeries leaves{"leaves_vs_edges", "E", "L", {}};
    PlotSeries leaves_trend{"leaves_trend", "E", "E/4+2", {}};
    PlotSeries fraction{"mlst_fraction_vs_edges", "E", "log2(N_MLST/N_ST)", {}};
    PlotSeries fraction_trend{"mlst_fraction_trend", "E", "3/2-E/2", {}};
    PlotSeries bound{"net_bound_vs_edges", "E", "log10(N_ST/N_aut)", {}};
    for (const auto& row : rows) {
        const double e = row.edges;
        bound.points.emplace_back(
            e, log2_of(BigRational(row.spanning_trees, BigInt(row.automorphisms))) / std::log2(10.0));
        if (!row.complete())
            continue;
        leaves.points.emplace_back(e, *row.leaves);
        leaves_trend.points.emplace_back(e, leaf_estimate(row.edges).convert_to<double>());
        fraction.points.emplace_back(e, log2_of(row.mlst_fraction()));
        fraction_trend.points.emplace_back(e, row.ratio_estimate.log2.convert_to<double>());
    }
    std::vector<PlotSeries> all{leaves, leaves_trend, fraction, fraction_trend, bound};
    for (auto& series : all)
        std::stable_sort(series.points.begin(), series.points.end());
    return all;
}

} // namespace foldnet
