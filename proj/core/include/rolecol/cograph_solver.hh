#pragma once

#include <rolecol/graph.hh>
#include <rolecol/role_check.hh>

#include <optional>
#include <vector>

namespace rolecol
{
    enum class CoTreeKind
    {
        Leaf,
        Union,
        Join
    };

    /// Canonical cotree: internal nodes have at least two children and never
    /// share their kind with their parent.
    struct CoTree
    {
        CoTreeKind kind = CoTreeKind::Leaf;
        Vertex vertex = -1;            // leaves only
        std::vector<CoTree> children;  // internal nodes only

        auto leaves() const -> std::vector<Vertex>; // sorted
        auto leaf_count() const -> int;

        friend auto operator==(const CoTree &, const CoTree &) -> bool = default;
    };

    /// Nothing iff g has an induced P4. Children are ordered by smallest
    /// leaf.
    auto build_cotree(const Graph & g) -> std::optional<CoTree>;

    /// Rebuilds the graph on `n` vertices described by the cotree.
    auto evaluate_cotree(const CoTree & t, int n) -> Graph;

    auto is_cograph(const Graph & g) -> bool;

    /// Every component is an isolated vertex, or none is.
    auto is_one_role_colourable(const Graph & g) -> bool;

    /// Throws InvalidInput if g is not a cograph or has fewer than 2 vertices.
    auto two_role_colour(const Graph & g) -> RoleColouring;

    /// Throws InvalidInput if g is not a cograph, k < 1 or k > n, or k = 1
    /// and g mixes isolated vertices with edges.
    auto k_role_colour(const Graph & g, int k) -> RoleColouring;

    /// Decision version: true for 2 <= k <= n, and for k = 1 iff
    /// is_one_role_colourable.
    auto cograph_k_colourable(const Graph & g, int k) -> bool;
}
