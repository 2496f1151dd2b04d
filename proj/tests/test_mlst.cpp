#include "oracles.hpp"

#include "foldnet/catalog.hpp"
#include "foldnet/mlst.hpp"

#include <doctest.h>

#include <chrono>
#include <random>

using namespace foldnet;

namespace {

SearchOptions serial()
{
    SearchOptions options;
    options.workers = 1;
    return options;
}

VertexSet vertex_set(std::initializer_list<int> vertices)
{
    VertexSet s;
    for (int v : vertices)
        s.set(v);
    return s;
}

bool naive_dominating(const ShellGraph& g, const VertexSet& s)
{
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (s.test(v))
            continue;
        bool covered = false;
        for (int w : g.neighbours(v))
            covered = covered || s.test(w);
        if (!covered)
            return false;
    }
    return true;
}

} // namespace

TEST_SUITE("mlst")
{
    TEST_CASE("small exact results")
    {
        MlstResult k4 = enumerate_mlsts(oracle::complete_graph(4), serial());
        CHECK(k4.leaf_count == 3);
        CHECK(k4.cuts.size() == 4);

        MlstResult cube = enumerate_mlsts(build_shell_graph(builtin("cube")), serial());
        CHECK(cube.leaf_count == 4);
        CHECK(cube.cuts.size() == 120);

        MlstResult dodeca = enumerate_mlsts(build_shell_graph(builtin("dodecahedron")), serial());
        CHECK(dodeca.leaf_count == 10);
        CHECK(dodeca.cuts.size() == 1980);
    }

    TEST_CASE("octagonal dipyramid")
    {
        ShellGraph g = build_shell_graph(builtin("octagonal-dipyramid"));
        std::vector<int> apexes;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.neighbours(v).size() == 8)
                apexes.push_back(v);
        REQUIRE(apexes.size() == 2);
        // One apex spans the ring; the other hangs off a ring vertex. 7 ring leaves + 1 apex.
        Cut star;
        for (int w : g.neighbours(apexes[0]))
            star.edges.set(g.edge_index(apexes[0], w));
        star.edges.set(g.edge_index(apexes[1], g.neighbours(apexes[0]).front()));
        REQUIRE(is_spanning_tree(g, star.edges));
        CHECK(cut_leaves(g, star).size() == 8);

        MlstResult result = enumerate_mlsts(g, serial());
        CHECK(result.leaf_count == 8);
        CHECK(result.cuts.size() == 64);
        CHECK(max_leaf_subset(g, enumerate_spanning_trees(g)) == result.cuts);
    }

    TEST_CASE("single-level growth")
    {
        ShellGraph cube = build_shell_graph(builtin("cube"));
        CHECK(grow_recursive(cube, root_state(cube, root_set(cube).front(), {}, 1), serial()).empty());

        ShellGraph wheel = oracle::wheel_graph(5);
        auto star = grow_recursive(wheel, root_state(wheel, 0, {}, 1), serial());
        REQUIRE(star.size() == 1);
        CHECK(cut_leaves(wheel, star[0]).size() == 5);

        CHECK(count_dominating_subtrees(cube, 3, serial()) == 0);
        CHECK(count_dominating_subtrees(cube, 4, serial()) > 0);
    }

    TEST_CASE("root state respects the excluded vertices")
    {
        ShellGraph cube = build_shell_graph(builtin("cube"));
        VertexSet excluded = vertex_set({1, 2});
        SearchState state = root_state(cube, 0, excluded, 3);
        CHECK(state.tree_vertices.count() == 1);
        CHECK(state.tree_edges.empty());
        CHECK_FALSE(state.tree_vertices.intersects(excluded));
        for (int e : state.frontier) {
            int far = cube.other_end(e, 0);
            CHECK_FALSE(excluded.test(far));
        }
        CHECK(state.frontier.size() == 1);
    }

    TEST_CASE("domination")
    {
        ShellGraph cube = build_shell_graph(builtin("cube"));
        CHECK_FALSE(is_dominating(cube, vertex_set({0, 1})));
        CHECK(is_dominating(cube, vertex_set({0, 7})));
        CHECK(is_dominating(oracle::complete_graph(4), vertex_set({2})));
        // 0-1-3-7 runs across two faces.
        CHECK(is_dominating(cube, vertex_set({0, 1, 3, 7})) == naive_dominating(cube, vertex_set({0, 1, 3, 7})));

        std::mt19937 rng(7);
        ShellGraph ico = build_shell_graph(builtin("icosahedron"));
        for (int trial = 0; trial < 500; ++trial) {
            VertexSet s;
            for (int v = 0; v < ico.vertex_count(); ++v)
                if (rng() % 4 == 0)
                    s.set(v);
            CHECK(is_dominating(ico, s) == naive_dominating(ico, s));
        }
    }

    TEST_CASE("expansion product rule")
    {
        ShellGraph path = oracle::path_graph(3);
        EdgeSet none;
        CHECK(expand_interior(path, vertex_set({1}), none).size() == 1);

        // Interior 0-1-2; vertex 3 sees 0 and 1, vertex 4 sees 0, 1 and 2.
        std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}, {2, 4}};
        ShellGraph g(5, edges);
        EdgeSet interior_edges;
        interior_edges.set(g.edge_index(0, 1));
        interior_edges.set(g.edge_index(1, 2));
        auto trees = expand_interior(g, vertex_set({0, 1, 2}), interior_edges);
        CHECK(trees.size() == 6);
        CHECK(expansion_count(g, vertex_set({0, 1, 2})) == 6);
        for (const auto& t : trees)
            CHECK(is_spanning_tree(g, t.edges));
    }

    TEST_CASE("greedy heuristic")
    {
        ShellGraph cube = build_shell_graph(builtin("cube"));
        Cut greedy_cube = greedy_mlst(cube);
        CHECK(is_spanning_tree(cube, greedy_cube.edges));
        CHECK(cut_leaves(cube, greedy_cube).size() == 4);

        ShellGraph k4 = oracle::complete_graph(4);
        CHECK(cut_leaves(k4, greedy_mlst(k4)).size() == 3);

        ShellGraph ico = build_shell_graph(builtin("icosahedron"));
        auto ico_leaves = cut_leaves(ico, greedy_mlst(ico)).size();
        MESSAGE("greedy icosahedron leaves: " << ico_leaves);
        CHECK(ico_leaves >= 6);
        CHECK(ico_leaves <= 8);

        for (const auto& entry : catalog()) {
            if (entry.tier == RunTier::long_run)
                continue;
            ShellGraph g = build_shell_graph(entry.spec);
            Cut c = greedy_mlst(g);
            CAPTURE(entry.name);
            CHECK(is_spanning_tree(g, c.edges));
            CHECK(static_cast<int>(cut_leaves(g, c).size()) <= enumerate_mlsts(g, serial()).leaf_count);
        }
    }

    TEST_CASE("oracle equivalence on every small catalog graph")
    {
        std::vector<ShellGraph> graphs{oracle::complete_graph(5), oracle::wheel_graph(5), oracle::wheel_graph(8),
                                       oracle::multipartite_graph(4, 2)};
        for (const auto& entry : catalog()) {
            ShellGraph g = build_shell_graph(entry.spec);
            if (count_spanning_trees(g) <= 1'000'000)
                graphs.push_back(g);
        }
        for (const auto& g : graphs) {
            CAPTURE(g.vertex_count());
            CAPTURE(g.edge_count());
            MlstResult result = enumerate_mlsts(g, serial());
            auto trees = enumerate_spanning_trees(g);
            CHECK(max_leaf_subset(g, trees) == result.cuts);
        }
    }

    TEST_CASE("subset brute force agrees on tiny graphs")
    {
        for (const auto& g : {oracle::complete_graph(4), oracle::wheel_graph(5), build_shell_graph(builtin("cube")),
                              build_shell_graph(builtin("octahedron"))}) {
            auto trees = oracle::subset_spanning_trees(g);
            int best = 0;
            for (const auto& t : trees)
                best = std::max(best, oracle::leaf_count(g, t));
            std::vector<std::vector<int>> expected;
            for (const auto& t : trees)
                if (oracle::leaf_count(g, t) == best)
                    expected.push_back(t);
            std::sort(expected.begin(), expected.end());
            MlstResult result = enumerate_mlsts(g, serial());
            std::vector<std::vector<int>> mine;
            for (const auto& c : result.cuts)
                mine.push_back(c.edge_indices());
            CHECK(result.leaf_count == best);
            CHECK(mine == expected);
        }
    }

    TEST_CASE("result invariants across the quick and mid catalog")
    {
        for (const auto& entry : catalog()) {
            if (entry.tier == RunTier::long_run)
                continue;
            CAPTURE(entry.name);
            ShellGraph g = build_shell_graph(entry.spec);
            MlstResult result = enumerate_mlsts(g, {});
            REQUIRE_FALSE(result.cuts.empty());
            CHECK(std::is_sorted(result.cuts.begin(), result.cuts.end(), CutOrder{}));
            CHECK(std::adjacent_find(result.cuts.begin(), result.cuts.end()) == result.cuts.end());
            CHECK(result.interior_size == g.vertex_count() - result.leaf_count);

            std::vector<int> roots = root_set(g);
            bool trees_ok = true, roots_ok = true;
            for (const auto& cut : result.cuts) {
                trees_ok = trees_ok && is_spanning_tree(g, cut.edges) &&
                           static_cast<int>(cut_leaves(g, cut).size()) == result.leaf_count;
                auto degree = subgraph_degrees(g, cut.edges);
                roots_ok = roots_ok && std::any_of(roots.begin(), roots.end(), [&](int r) {
                               return degree[static_cast<std::size_t>(r)] > 1;
                           });
            }
            CHECK(trees_ok);
            CHECK(roots_ok);

            // Nothing smaller dominates.
            CHECK(count_dominating_subtrees(g, result.interior_size - 1, {}) == 0);
        }
    }

    TEST_CASE("worker count and pruning do not change the result")
    {
        for (const char* name : {"cuboctahedron", "truncated-cube", "truncated-octahedron"}) {
            CAPTURE(name);
            ShellGraph g = build_shell_graph(builtin(name));
            MlstResult reference = enumerate_mlsts(g, serial());
            for (unsigned workers : {2U, 3U, 8U}) {
                SearchOptions options;
                options.workers = workers;
                CHECK(enumerate_mlsts(g, options).cuts == reference.cuts);
            }
            SearchOptions unpruned = serial();
            unpruned.prune = false;
            MlstResult plain = enumerate_mlsts(g, unpruned);
            CHECK(plain.cuts == reference.cuts);
            CHECK(plain.stats.interior_subtrees == reference.stats.interior_subtrees);
            CHECK(plain.stats.nodes >= reference.stats.nodes);
        }
    }

    TEST_CASE("budgets stop the search")
    {
        ShellGraph g = build_shell_graph(builtin("truncated-cuboctahedron"));
        SearchOptions tiny = serial();
        tiny.node_budget = 1000;
        try {
            enumerate_mlsts(g, tiny);
            FAIL("expected the node budget to trigger");
        }
        catch (const BudgetExceeded& error) {
            CHECK(error.nodes_visited >= 1000);
            CHECK(error.interior_size > 0);
        }

        SearchOptions hurried;
        hurried.time_limit = std::chrono::milliseconds(1);
        CHECK_THROWS_AS(enumerate_mlsts(build_shell_graph(builtin("truncated-icosahedron")), hurried), BudgetExceeded);
    }
}
