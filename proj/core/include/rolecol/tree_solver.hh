#pragma once

#include <rolecol/graph.hh>
#include <rolecol/role_check.hh>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rolecol
{
    /// Candidate role graph of a tree: a labelled tree on colours 1..k plus
    /// at most one self-loop.
    struct RoleTree
    {
        int k = 0;
        std::vector<std::pair<Colour, Colour>> edges; // c < d, k-1 of them
        std::optional<Colour> loop;

        auto neighbourhoods() const -> std::vector<std::vector<Colour>>; // indexed by colour, [0] unused
        auto as_role_graph() const -> RoleGraph;
    };

    /// All labelled trees on k colours (Pruefer order) crossed with
    /// loop in {none, 1..k}: (k+1) * k^(k-2) role trees. For k = 1 the
    /// single colour is emitted without and then with a loop.
    auto enumerate_role_trees(int k) -> std::vector<RoleTree>;

    /// Visits role trees in the same order without materialising them;
    /// stops when `visit` returns false.
    auto for_each_role_tree(int k, const std::function<bool(const RoleTree &)> & visit) -> void;

    /// A colouring of tree t whose role graph is exactly r (all k colours
    /// used), or nothing. Rooted DP over (vertex, colour, parent colour)
    /// with a subset DP covering the required neighbour colours.
    /// Throws InvalidInput if t is not a tree.
    auto locally_surjective_hom(const Graph & t, const RoleTree & r) -> std::optional<RoleColouring>;

    /// Which candidate role graphs solve_tree_constant_k walks through.
    /// Renaming colours never changes feasibility, so one labelled
    /// representative per isomorphism class (times each loop position) is
    /// enough; Labelled walks the full Pruefer family instead.
    enum class RoleTreeFamily
    {
        UpToIsomorphism,
        Labelled
    };

    /// AHU code of the tree rooted at its centre (the smaller of the two
    /// codes when there are two centres). Equal iff the trees are isomorphic.
    auto canonical_tree_code(const Graph & t) -> std::string;

    /// One tree per isomorphism class on n vertices, grown leaf by leaf.
    auto nonisomorphic_trees(int n) -> std::vector<Graph>;

    /// Tries candidate role trees in order until one admits a locally
    /// surjective homomorphism. Polynomial for fixed k.
    auto solve_tree_constant_k(const Graph & t, int k, RoleTreeFamily family = RoleTreeFamily::UpToIsomorphism)
        -> std::optional<RoleColouring>;

    struct HubGadgetDecomposition
    {
        int surplus = 0;
        std::vector<std::vector<Vertex>> gadgets; // each sorted
        std::vector<Vertex> hubs;                 // sorted
        std::vector<Vertex> free_vertices;        // sorted
        /// hub_of[g] is the hub adjacent to gadgets[g], or -1 when the whole
        /// tree is a single gadget.
        std::vector<Vertex> hub_of;
    };

    /// Gadgets are maximal pendant subtrees with at most 2*surplus+1
    /// vertices. The tree is rooted at its centroid (smaller id on a tie);
    /// a tree with at most 2*surplus+1 vertices is one gadget with no hubs.
    auto hub_gadget_decomposition(const Graph & t, int surplus) -> HubGadgetDecomposition;

    /// Search for a k-role-colouring with n - k small: hubs and free
    /// vertices keep unique colours, repeated colours live inside the
    /// gadgets around one hub, and per-hub duplicate counts are combined
    /// to exactly n - k.
    auto solve_tree_constant_surplus(const Graph & t, int k) -> std::optional<RoleColouring>;

    /// Dispatches on min(k, n - k).
    auto solve_tree(const Graph & t, int k) -> std::optional<RoleColouring>;
}
