#pragma once

#include <rolecol/graph.hh>
#include <rolecol/role_check.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rolecol
{
    /// Steps through the partitions of {0..n-1} into exactly k non-empty
    /// blocks as restricted growth strings, in lexicographic order.
    ///
    ///     PartitionIterator it{4, 2};
    ///     do { use(it.blocks()); } while (it.next());
    class PartitionIterator
    {
    public:
        /// Throws InvalidInput unless 1 <= k <= n.
        PartitionIterator(int n, int k);

        /// Block index (0-based) of each element.
        auto blocks() const -> const std::vector<int> & { return _blocks; }

        /// Advance; false once the last partition has been passed.
        auto next() -> bool;

        /// The current partition as a colouring with colours 1..k.
        auto colouring() const -> RoleColouring;

    private:
        int _n, _k;
        std::vector<int> _blocks;
        std::vector<int> _prefix_max;
    };

    auto enumerate_k_partitions(int n, int k) -> PartitionIterator;

    /// Stirling number of the second kind, by recurrence. Saturates at the
    /// uint64 maximum.
    auto stirling2(int n, int k) -> std::uint64_t;

    /// Largest graph the oracle accepts (colour sets are 64-bit masks).
    inline constexpr int oracle_max_vertices = 64;

    /// The first valid k-role-colouring in restricted-growth-string order,
    /// or nothing. Subtrees of the search are cut only when a vertex whose
    /// closed neighbourhood is fully assigned disagrees with an earlier
    /// vertex of the same colour, so the reported colouring is exactly the
    /// first one a plain enumeration would find.
    auto solve_exact(const Graph & g, int k) -> std::optional<RoleColouring>;

    /// Calls `visit` on every valid k-role-colouring in canonical order.
    /// Stops early when `visit` returns false. Returns the number visited.
    auto for_each_valid_colouring(const Graph & g, int k,
        const std::function<bool(const RoleColouring &)> & visit) -> std::uint64_t;

    /// { k : solve_exact(g, k) has a value }, ascending.
    auto solvable_k_set(const Graph & g) -> std::vector<int>;
}
