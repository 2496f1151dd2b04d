#include "oracles.hpp"

#include "foldnet/catalog.hpp"
#include "foldnet/mlst.hpp"
#include "foldnet/symmetry.hpp"

#include <doctest.h>

using namespace foldnet;

namespace {

std::vector<Cut> mlsts(const char* name)
{
    return enumerate_mlsts(build_shell_graph(builtin(name))).cuts;
}

AutomorphismGroup identity_group(const ShellGraph& g)
{
    Permutation identity(static_cast<std::size_t>(g.vertex_count()));
    std::iota(identity.begin(), identity.end(), 0);
    return AutomorphismGroup(g, {identity});
}

} // namespace

TEST_SUITE("symmetry")
{
    TEST_CASE("automorphism group orders")
    {
        CHECK(find_automorphisms(oracle::complete_graph(4)).order() == 24);
        CHECK(find_automorphisms(build_shell_graph(builtin("cube"))).order() == 48);
        CHECK(find_automorphisms(build_shell_graph(builtin("dodecahedron"))).order() == 120);
        CHECK(find_automorphisms(build_shell_graph(builtin("snub-cube"))).order() == 24);
    }

    TEST_CASE("backtracking finds exactly the adjacency-preserving permutations")
    {
        std::vector<ShellGraph> graphs{oracle::complete_graph(4), oracle::complete_graph(5), oracle::wheel_graph(5),
                                       oracle::cycle_graph(7), build_shell_graph(builtin("cube")),
                                       build_shell_graph(builtin("octahedron")),
                                       build_shell_graph(builtin("octagonal-pyramid"))};
        for (const auto& g : graphs) {
            CAPTURE(g.vertex_count());
            auto expected = oracle::permutation_automorphisms(g);
            CHECK(find_automorphisms(g).vertex_maps() == expected);
        }
    }

    TEST_CASE("every catalog group satisfies the axioms")
    {
        for (const auto& entry : catalog()) {
            CAPTURE(entry.name);
            ShellGraph g = build_shell_graph(entry.spec);
            AutomorphismGroup group = find_automorphisms(g);
            CHECK(satisfies_group_axioms(g, group));
            CHECK(group.vertex_maps().front() == [&] {
                Permutation id(static_cast<std::size_t>(g.vertex_count()));
                std::iota(id.begin(), id.end(), 0);
                return id;
            }());
        }
    }

    TEST_CASE("non-groups are detected")
    {
        ShellGraph c5 = oracle::cycle_graph(5);
        AutomorphismGroup full = find_automorphisms(c5);
        std::vector<Permutation> partial(full.vertex_maps().begin(), full.vertex_maps().begin() + 3);
        CHECK_FALSE(satisfies_group_axioms(c5, AutomorphismGroup(c5, partial)));
    }

    TEST_CASE("canonical forms")
    {
        ShellGraph k4 = oracle::complete_graph(4);
        Cut star_at_2;
        for (int v : {0, 1, 3})
            star_at_2.edges.set(k4.edge_index(2, v));
        Cut star_at_0;
        for (int v : {1, 2, 3})
            star_at_0.edges.set(k4.edge_index(0, v));
        CanonicalCut canonical = canonical_cut(star_at_2, find_automorphisms(k4));
        CHECK(canonical.representative == star_at_0);
        CHECK(canonical.orbit_size == 4);

        CanonicalCut unchanged = canonical_cut(star_at_2, identity_group(k4));
        CHECK(unchanged.representative == star_at_2);
        CHECK(unchanged.orbit_size == 1);

        ShellGraph cube = build_shell_graph(builtin("cube"));
        AutomorphismGroup group = find_automorphisms(cube);
        for (const auto& cut : mlsts("cube"))
            CHECK(48 % canonical_cut(cut, group).orbit_size == 0);
    }

    TEST_CASE("dedupe counts")
    {
        auto count = [](const char* name) {
            return dedupe_cuts(mlsts(name), find_automorphisms(build_shell_graph(builtin(name)))).size();
        };
        CHECK(count("cube") == 4);
        CHECK(count("dodecahedron") == 21);
        CHECK(count("rhombicuboctahedron") == 32);
    }

    TEST_CASE("dedupe properties")
    {
        for (const char* name : {"cube", "octahedron", "icosahedron", "truncated-tetrahedron", "cuboctahedron"}) {
            CAPTURE(name);
            ShellGraph g = build_shell_graph(builtin(name));
            AutomorphismGroup group = find_automorphisms(g);
            auto cuts = mlsts(name);
            auto nets = dedupe_cuts(cuts, group);

            std::size_t total = 0;
            for (const auto& n : nets)
                total += n.orbit_size;
            CHECK(total == cuts.size());
            CHECK(std::is_sorted(nets.begin(), nets.end(), [](const CanonicalCut& a, const CanonicalCut& b) {
                return CutOrder{}(a.representative, b.representative);
            }));

            std::vector<std::vector<int>> sets;
            for (const auto& c : cuts)
                sets.push_back(c.edge_indices());
            auto perms = oracle::permutation_automorphisms(g);
            CHECK(nets.size() == oracle::orbit_count(g, perms, sets));

            for (const auto& n : nets) {
                CHECK(canonical_cut(n.representative, group) == n);
                std::set<std::vector<int>> images;
                for (const auto& p : perms)
                    images.insert(oracle::image(g, p, n.representative.edge_indices()));
                CHECK(images.size() == n.orbit_size);
                CHECK(*images.begin() == n.representative.edge_indices());
            }

            for (std::size_t k = 0; k < group.order(); k += 7) {
                Cut moved{group.apply(k, cuts.front().edges)};
                CHECK(canonical_cut(moved, group) == canonical_cut(cuts.front(), group));
            }
        }
    }

    TEST_CASE("dedupe is independent of the worker count")
    {
        ShellGraph g = build_shell_graph(builtin("truncated-cube"));
        AutomorphismGroup group = find_automorphisms(g);
        auto cuts = enumerate_mlsts(g).cuts;
        auto serial = dedupe_cuts(cuts, group, 1);
        CHECK(serial.size() == 399);
        CHECK(dedupe_cuts(cuts, group, 4) == serial);
        std::reverse(cuts.begin(), cuts.end());
        CHECK(dedupe_cuts(cuts, group, 3) == serial);
    }

    TEST_CASE("net count estimates")
    {
        CHECK(estimate_net_count(build_shell_graph(builtin("cube"))) == 8);
        CHECK(estimate_net_count(build_shell_graph(builtin("tetrahedron"))) == BigRational(2, 3));
        CHECK(estimate_net_count(build_shell_graph(builtin("icosahedron"))) == 43200);
        CHECK(estimate_net_count(build_shell_graph(builtin("dodecahedron"))) == 43200);
    }

    TEST_CASE("the estimate bounds the number of distinct spanning trees from below")
    {
        struct Case
        {
            const char* name;
            std::size_t nets;
        };
        for (Case c : {Case{"tetrahedron", 2}, Case{"cube", 11}, Case{"octahedron", 11}}) {
            CAPTURE(c.name);
            ShellGraph g = build_shell_graph(builtin(c.name));
            AutomorphismGroup group = find_automorphisms(g);
            auto classes = dedupe_cuts(enumerate_spanning_trees(g), group);
            CHECK(classes.size() == c.nets);
            CHECK(estimate_net_count(g) <= BigRational(classes.size()));
        }
    }

    TEST_CASE("stabilizers")
    {
        ShellGraph cube = build_shell_graph(builtin("cube"));
        AutomorphismGroup group = find_automorphisms(cube);
        EdgeSet top;
        for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 3}, {3, 2}, {2, 0}})
            top.set(cube.edge_index(u, v));
        AutomorphismGroup kept = group.stabilizer(cube, top);
        CHECK(satisfies_group_axioms(cube, kept));
        CHECK(48 % kept.order() == 0);
        for (std::size_t k = 0; k < kept.order(); ++k)
            CHECK(kept.apply(k, top) == top);
    }
}
