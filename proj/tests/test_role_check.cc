#include "support.hh"

#include <rolecol/error.hh>
#include <rolecol/oracle.hh>
#include <rolecol/role_check.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace rolecol;
using namespace rolecol::testing;

TEST_CASE("validate on the path with three vertices")
{
    auto p = path_graph(3);
    CHECK(validate(p, {2, {1, 2, 1}}));
    CHECK_FALSE(validate(p, {2, {1, 1, 2}}));
    CHECK(validate(p, rainbow_colouring(3)));
    CHECK(validate(p, monochromatic_colouring(3)));
}

TEST_CASE("validate requires every class to be non-empty")
{
    auto p = path_graph(3);
    CHECK_FALSE(validate(p, {3, {1, 2, 1}}));
    CHECK_THROWS_AS(validate(p, {2, {1, 2}}), InvalidInput);
    CHECK_THROWS_AS(validate(p, {2, {1, 3, 1}}), InvalidInput);
    CHECK_THROWS_AS(validate(p, {2, {0, 2, 1}}), InvalidInput);
}

TEST_CASE("monochromatic colourings are valid exactly when no component type mixes")
{
    CHECK(validate(cycle_graph(5), monochromatic_colouring(5)));
    CHECK(validate(empty_graph(3), monochromatic_colouring(3)));
    CHECK_FALSE(validate(disjoint_union(empty_graph(1), complete_graph(2)), monochromatic_colouring(3)));
}

TEST_CASE("validate agrees with the pairwise definition on every colour vector")
{
    std::mt19937_64 rng{3};
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(5, 0.45, rng);
        for (int k = 1; k <= 3; ++k) {
            std::vector<Colour> colours(5, 1);
            while (true) {
                CHECK(validate(g, {k, colours}) == naive_valid(g, colours, k));
                int i = 4;
                while (i >= 0 && colours[i] == k)
                    colours[i--] = 1;
                if (i < 0)
                    break;
                ++colours[i];
            }
        }
    }
}

TEST_CASE("validate is invariant under renaming colours")
{
    std::mt19937_64 rng{8};
    for (int trial = 0; trial < 30; ++trial) {
        auto g = random_graph(8, 0.35, rng);
        for (int k = 2; k <= 4; ++k) {
            std::uniform_int_distribution<int> pick(1, k);
            RoleColouring rc{k, {}};
            for (int v = 0; v < 8; ++v)
                rc.colours.push_back(pick(rng));
            std::vector<Colour> rename(k);
            std::iota(rename.begin(), rename.end(), 1);
            std::shuffle(rename.begin(), rename.end(), rng);
            RoleColouring renamed{k, {}};
            for (Colour c : rc.colours)
                renamed.colours.push_back(rename[c - 1]);
            CHECK(validate(g, rc) == validate(g, renamed));
        }
    }
}

TEST_CASE("canonical_colouring renumbers by first appearance")
{
    std::vector<Colour> raw{3, 3, 1, 2, 1};
    CHECK(canonical_colouring(raw) == RoleColouring{3, {1, 1, 2, 3, 2}});
    std::vector<Colour> gappy{7, 2, 7};
    CHECK(canonical_colouring(gappy) == RoleColouring{2, {1, 2, 1}});
}

TEST_CASE("role graphs of small colourings")
{
    auto r = role_graph(path_graph(3), rainbow_colouring(3));
    CHECK(r.edges == std::set<std::pair<Colour, Colour>>{{1, 2}, {2, 3}});
    CHECK(r.loops.empty());

    r = role_graph(path_graph(4), {2, {1, 2, 2, 1}});
    CHECK(r.edges == std::set<std::pair<Colour, Colour>>{{1, 2}});
    CHECK(r.loops == std::set<Colour>{2});
    CHECK(r.neighbourhood(2) == std::vector<Colour>{1, 2});
    CHECK(r.degree(2) == 2);
    CHECK(r.is_tree_with_at_most_one_loop());
    CHECK(solve_exact(path_graph(4), 2).has_value());

    CHECK_THROWS_AS(role_graph(path_graph(3), {2, {1, 1, 2}}), InvalidInput);
}

TEST_CASE("role graph bound predicate")
{
    auto k2 = complete_graph(2);
    CHECK(role_graph_bounds_ok(k2, role_graph(k2, rainbow_colouring(2))));

    auto p = path_graph(3);
    auto mono = role_graph(p, monochromatic_colouring(3));
    CHECK(mono.loops == std::set<Colour>{1});
    CHECK(role_graph_bounds_ok(p, mono));

    // a disconnected role graph cannot come from a connected graph
    RoleGraph split{2, {}, {1, 2}};
    CHECK_FALSE(role_graph_bounds_ok(p, split));
    CHECK(role_graph_bounds_ok(disjoint_union(k2, k2), split));
}

TEST_CASE("every oracle colouring of every graph up to 5 vertices respects the role graph bounds")
{
    for (int n = 1; n <= 5; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
            auto g = graph_from_mask(n, mask);
            for (int k = 1; k <= n; ++k)
                for_each_valid_colouring(g, k, [&](const RoleColouring & rc) {
                    auto r = role_graph(g, rc);
                    CHECK(role_graph_bounds_ok(g, r));
                    // class-wise set equality restated through the quotient
                    auto sets = neighbourhood_colour_sets(g, rc);
                    for (Vertex v = 0; v < n; ++v)
                        CHECK(sets[v] == r.neighbourhood(rc.colours[v]));
                    return true;
                });
        }
}
