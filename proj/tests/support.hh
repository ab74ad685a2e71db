#pragma once

#include <rolecol/graph.hh>
#include <rolecol/role_check.hh>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace rolecol::testing
{
    /// Validity straight from the definition: pairwise comparison of
    /// neighbour colour sets, with every colour in 1..k used.
    auto naive_valid(const Graph & g, const std::vector<Colour> & colours, int k) -> bool;

    /// Tries all k^n colour vectors. Shares nothing with the oracle.
    auto naive_colourable(const Graph & g, int k) -> bool;

    /// Number of valid k-role-colourings counted as partitions (k^n sweep
    /// divided by k!).
    auto naive_count(const Graph & g, int k) -> std::uint64_t;

    /// S(n, k) for 0 <= k <= n <= n_max by the triangle recurrence.
    auto stirling_table(int n_max) -> std::vector<std::vector<std::uint64_t>>;

    /// Checks every ordered 4-tuple of distinct vertices.
    auto has_induced_p4(const Graph & g) -> bool;

    /// All labelled trees on n vertices, one per Pruefer sequence.
    auto for_each_labelled_tree(int n, const auto & visit) -> void
    {
        if (n == 1) {
            visit(empty_graph(1));
            return;
        }
        std::vector<int> seq(n - 2, 0);
        while (true) {
            visit(decode_pruefer(seq));
            int i = n - 3;
            while (i >= 0 && seq[i] == n - 1)
                seq[i--] = 0;
            if (i < 0)
                return;
            ++seq[i];
        }
    }

    /// Trees on n vertices up to isomorphism, found by decoding every
    /// Pruefer sequence and keeping the first of each class.
    auto trees_up_to_isomorphism(int n) -> std::vector<Graph>;

    /// Graph on n vertices whose edges are the set bits of `mask` over the
    /// pairs (0,1), (0,2), ..., (n-2,n-1).
    auto graph_from_mask(int n, std::uint64_t mask) -> Graph;

    /// Random cograph on n vertices from a random union/join expression.
    auto random_cograph(int n, std::mt19937_64 & rng) -> Graph;

    auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph;

    /// The unique path between u and v in a tree, u first.
    auto tree_path(const Graph & t, Vertex u, Vertex v) -> std::vector<Vertex>;

    /// Violations of the path-colour bound: for same-coloured u, v the tree
    /// path between them carries at most ceil(t/2) colours.
    auto half_path_violations(const Graph & t, const RoleColouring & rc) -> int;

    /// Dangling paths of at most k vertices that repeat a colour.
    auto dangling_rainbow_violations(const Graph & g, const RoleColouring & rc) -> int;
}
