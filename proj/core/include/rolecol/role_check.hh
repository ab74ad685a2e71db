#pragma once

#include <rolecol/graph.hh>

#include <set>
#include <utility>
#include <vector>

namespace rolecol
{
    using Colour = int;

    /// Colours are 1..k; colours[v] is the colour of vertex v.
    struct RoleColouring
    {
        int k = 0;
        std::vector<Colour> colours;

        friend auto operator==(const RoleColouring &, const RoleColouring &) -> bool = default;
    };

    auto rainbow_colouring(int n) -> RoleColouring;
    auto monochromatic_colouring(int n) -> RoleColouring;

    /// Renumbers colours to 1..k in order of first appearance by vertex id.
    /// Classes are preserved, k becomes the number of distinct colours.
    auto canonical_colouring(std::span<const Colour> colours) -> RoleColouring;

    /// Quotient of a graph by a valid role colouring. Self-loops are kept
    /// apart from the edge set.
    struct RoleGraph
    {
        int k = 0;
        std::set<std::pair<Colour, Colour>> edges; // c < d
        std::set<Colour> loops;

        /// Colours adjacent to c, including c itself when c has a loop.
        auto neighbourhood(Colour c) const -> std::vector<Colour>;
        /// Number of distinct neighbour colours, a loop counting once.
        auto degree(Colour c) const -> int;
        auto is_connected() const -> bool;
        /// A tree on 1..k (k-1 edges, connected) with at most one loop.
        auto is_tree_with_at_most_one_loop() const -> bool;

        friend auto operator==(const RoleGraph &, const RoleGraph &) -> bool = default;
    };

    /// Neighbourhood colour set of every vertex, each sorted.
    auto neighbourhood_colour_sets(const Graph & g, const RoleColouring & rc) -> std::vector<std::vector<Colour>>;

    /// True iff all k classes are non-empty and same-coloured vertices see
    /// identical sets of colours. Throws InvalidInput on a length mismatch
    /// or a colour outside 1..k.
    auto validate(const Graph & g, const RoleColouring & rc) -> bool;

    /// Throws InvalidInput if rc is not a valid role colouring of g.
    auto role_graph(const Graph & g, const RoleColouring & rc) -> RoleGraph;

    /// Max/min degree of r are bounded by those of g, and g connected
    /// implies r connected.
    auto role_graph_bounds_ok(const Graph & g, const RoleGraph & r) -> bool;
}
