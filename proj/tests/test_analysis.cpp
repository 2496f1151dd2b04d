#include "foldnet/analysis.hpp"
#include "foldnet/catalog.hpp"

#include <doctest.h>

#include <cmath>

using namespace foldnet;

namespace {

const std::vector<ShellStatistics>& desk_rows()
{
    static const std::vector<ShellStatistics> rows = [] {
        std::vector<PolyhedronSpec> specs;
        for (const auto& entry : catalog())
            if (entry.tier != RunTier::long_run)
                specs.push_back(entry.spec);
        return build_statistics_table(specs);
    }();
    return rows;
}

const ShellStatistics& row(const std::string& name)
{
    for (const auto& r : desk_rows())
        if (r.name == name)
            return r;
    throw std::runtime_error("no row " + name);
}

} // namespace

TEST_SUITE("analysis")
{
    TEST_CASE("leaf estimate from edges")
    {
        CHECK(leaf_estimate(12) == 5);
        CHECK(leaf_estimate(90) == BigRational(49, 2));
        CHECK_THROWS_AS(leaf_estimate(0), std::invalid_argument);
    }

    TEST_CASE("leaf estimate from vertices")
    {
        CHECK(leaf_estimate_from_vertices(8) == BigRational(11, 2));
        CHECK(leaf_estimate_from_vertices(4) == BigRational(7, 2));
        CHECK(leaf_estimate_from_vertices(60) == BigRational(63, 2));
        CHECK_THROWS_AS(leaf_estimate_from_vertices(3), std::invalid_argument);
    }

    TEST_CASE("vertex estimate")
    {
        CHECK(vertex_estimate(12) == 7);
        CHECK(vertex_estimate(30) == 16);
        CHECK(vertex_estimate(90) == 46);
        CHECK_THROWS_AS(vertex_estimate(-2), std::invalid_argument);
    }

    TEST_CASE("optimal fraction estimate")
    {
        RatioEstimate cube = mlst_ratio_estimate(12);
        CHECK(cube.log2 == BigRational(-9, 2));
        CHECK(cube.value == doctest::Approx(0.0442).epsilon(0.001));
        RatioEstimate dodeca = mlst_ratio_estimate(30);
        CHECK(dodeca.log2 == BigRational(-27, 2));
        CHECK(dodeca.value == doctest::Approx(8.6e-5).epsilon(0.01));
        CHECK(mlst_ratio_estimate(3).value == 1.0);
        CHECK(mlst_ratio_estimate(3).log2 == 0);
        CHECK_THROWS_AS(mlst_ratio_estimate(0), std::invalid_argument);
    }

    TEST_CASE("exact fractions")
    {
        CHECK(row("cube").mlst_fraction() == BigRational(120, 384));
        CHECK(row("dodecahedron").mlst_fraction() < BigRational(4, 10000));
    }

    TEST_CASE("statistics rows")
    {
        const ShellStatistics& cube = row("cube");
        CHECK(cube.vertices == 8);
        CHECK(cube.faces == 6);
        CHECK(cube.edges == 12);
        CHECK(cube.leaves == 4);
        CHECK(cube.optimal_nets == 4u);
        CHECK(cube.automorphisms == 48);

        const ShellStatistics& octa = row("truncated-octahedron");
        CHECK(octa.vertices == 24);
        CHECK(octa.faces == 14);
        CHECK(octa.edges == 36);
        CHECK(octa.leaves == 12);
        CHECK(octa.optimal_nets == 56u);

        const ShellStatistics& cubocta = row("cuboctahedron");
        CHECK(cubocta.vertices == 12);
        CHECK(cubocta.faces == 14);
        CHECK(cubocta.edges == 24);
        CHECK(cubocta.leaves == 7);
        CHECK(cubocta.optimal_nets == 34u);
    }

    TEST_CASE("row invariants")
    {
        for (const auto& r : desk_rows()) {
            CAPTURE(r.name);
            REQUIRE(r.complete());
            CHECK(r.vertices - r.edges + r.faces == 2);
            CHECK(BigInt(*r.labelled_mlsts) <= r.spanning_trees);
            CHECK(*r.optimal_nets <= *r.labelled_mlsts);
            CHECK(r.leaf_estimate == leaf_estimate(r.edges));
        }
    }

    TEST_CASE("rows match the catalog reference counts")
    {
        for (const auto& entry : catalog()) {
            if (entry.tier == RunTier::long_run)
                continue;
            CAPTURE(entry.name);
            CHECK(row(entry.name).optimal_nets == entry.reference.optimal_nets);
            // The dipyramid reference leaf count is one short of an explicit 8-leaf tree.
            if (entry.name == "octagonal-dipyramid")
                CHECK(row(entry.name).leaves == entry.reference.leaves + 1);
            else
                CHECK(row(entry.name).leaves == entry.reference.leaves);
        }
    }

    TEST_CASE("exact fractions around the trend line")
    {
        // Within a factor 30 of 2^(3/2 - E/2) up to E = 60, apart from two
        // solids whose exact counts sit further out.
        for (const auto& r : desk_rows()) {
            if (r.edges > 60)
                continue;
            CAPTURE(r.name);
            double factor = r.mlst_fraction().convert_to<double>() / r.ratio_estimate.value;
            double spread = std::max(factor, 1 / factor);
            if (r.name == "truncated-cube")
                CHECK(spread == doctest::Approx(51.9).epsilon(0.01));
            else if (r.name == "rhombicuboctahedron")
                CHECK(spread == doctest::Approx(33.0).epsilon(0.01));
            else
                CHECK(spread < 30);
        }
    }

    TEST_CASE("optimal fraction falls with the edge count")
    {
        TrendFit fit = mlst_fraction_trend(desk_rows());
        CHECK(fit.points == desk_rows().size());
        CHECK(fit.slope < 0);
        CHECK(fit.rank_correlation < 0);
    }

    TEST_CASE("trend fitting")
    {
        std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
        TrendFit line = fit_trend(x, y);
        CHECK(line.slope == doctest::Approx(2));
        CHECK(line.intercept == doctest::Approx(1));
        CHECK(line.rank_correlation == doctest::Approx(1));

        std::vector<double> tied_x{1, 1, 2, 3}, falling{4, 4, 2, 1};
        CHECK(fit_trend(tied_x, falling).rank_correlation == doctest::Approx(-1));
        CHECK(fit_trend(std::vector<double>{1}, std::vector<double>{2}).points == 1);
        CHECK_THROWS(fit_trend(std::vector<double>{1, 2}, std::vector<double>{1}));
    }

    TEST_CASE("residual report")
    {
        auto report = residual_report(desk_rows());
        CHECK(report.size() == desk_rows().size());
        for (const auto& r : report)
            if (r.name == "cube") {
                CHECK(r.leaf_residual() == 1);
                CHECK(r.leaf_residual_from_vertices() == BigRational(3, 2));
                CHECK(r.vertex_residual() == -1);
                CHECK(r.log2_fraction == doctest::Approx(std::log2(0.3125)));
            }
    }

    TEST_CASE("budget-limited rows are partial")
    {
        SearchOptions tiny;
        tiny.node_budget = 10;
        ShellStatistics r = shell_statistics(builtin("truncated-cube"), tiny);
        CHECK(r.partial);
        CHECK_FALSE(r.complete());
        CHECK_FALSE(r.leaves.has_value());
        CHECK_FALSE(r.note.empty());
        CHECK(r.spanning_trees == 32400000);

        ShellStatistics basic = basic_statistics(builtin("truncated-icosahedron"));
        CHECK(basic.partial);
        CHECK(basic.automorphisms == 120);
        std::vector<ShellStatistics> mixed{row("cube"), basic};
        CHECK(residual_report(mixed).size() == 1);
    }

    TEST_CASE("plot series")
    {
        auto series = plot_series(desk_rows());
        REQUIRE(series.size() == 5);
        for (const auto& s : series) {
            CAPTURE(s.name);
            CHECK(s.points.size() == desk_rows().size());
            CHECK(std::is_sorted(s.points.begin(), s.points.end()));
        }
    }

    TEST_CASE("row-parallel table equals the serial one")
    {
        std::vector<PolyhedronSpec> specs{builtin("cube"), builtin("icosahedron"), builtin("truncated-tetrahedron")};
        StatisticsOptions parallel;
        parallel.row_workers = 3;
        auto a = build_statistics_table(specs, parallel);
        auto b = build_statistics_table(specs);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].name == b[i].name);
            CHECK(a[i].labelled_mlsts == b[i].labelled_mlsts);
            CHECK(a[i].optimal_nets == b[i].optimal_nets);
        }
    }
}
