#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace rolecol
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    /// Simple undirected graph on vertices 0..n-1. Immutable once built;
    /// neighbour lists are sorted and duplicate free.
    class Graph
    {
    public:
        Graph() = default;

        /// Throws InvalidInput on an out-of-range endpoint or a self-loop.
        /// Repeated edges (in either orientation) collapse to one.
        Graph(int n, std::span<const Edge> edges);

        auto size() const -> int { return static_cast<int>(_adjacency.size()); }
        auto edge_count() const -> std::size_t { return _edge_count; }

        auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adjacency[v]; }
        auto degree(Vertex v) const -> int { return static_cast<int>(_adjacency[v].size()); }
        auto adjacent(Vertex u, Vertex v) const -> bool;

        auto max_degree() const -> int;
        auto min_degree() const -> int;

        /// Edges with u < v, sorted lexicographically.
        auto edges() const -> std::vector<Edge>;

        /// Subgraph induced on `vertices`; vertex vertices[i] becomes i.
        auto induced(std::span<const Vertex> vertices) const -> Graph;

        auto complement() const -> Graph;

        friend auto operator==(const Graph &, const Graph &) -> bool = default;

    private:
        std::vector<std::vector<Vertex>> _adjacency;
        std::size_t _edge_count = 0;
    };

    auto build_graph(int n, std::span<const Edge> edges) -> Graph;

    enum class GraphKind
    {
        Path,
        Tree,
        Cograph,
        General
    };

    auto to_string(GraphKind kind) -> const char *;

    /// `kind` is the most specific of Path, Tree, Cograph, General; the flags
    /// record every class membership since a star is both a tree and a cograph.
    struct GraphClass
    {
        GraphKind kind = GraphKind::General;
        bool is_path = false;
        bool is_tree = false;
        bool is_cograph = false;
        bool connected = false;
        bool has_isolated_vertex = false;
    };

    auto classify(const Graph & g) -> GraphClass;

    auto is_connected(const Graph & g) -> bool;
    auto is_tree(const Graph & g) -> bool;
    auto is_path(const Graph & g) -> bool;

    /// Maximal connected vertex sets, each sorted, ordered by smallest member.
    auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>;

    /// True iff `vs` is an induced path v1..vt of g with deg(v1) = 1 and
    /// v2..v(t-1) of degree 2.
    auto is_dangling_path(const Graph & g, std::span<const Vertex> vs) -> bool;

    /// Every dangling path of g with at most `max_length` vertices, each
    /// listed from its degree-1 end.
    auto dangling_paths(const Graph & g, int max_length) -> std::vector<std::vector<Vertex>>;

    /// For a path graph, the vertices in order starting from the smaller
    /// endpoint. Throws InvalidInput if g is not a path.
    auto path_order(const Graph & g) -> std::vector<Vertex>;

    // Small constructors used throughout the tests, tools and benchmarks.
    auto path_graph(int n) -> Graph;
    auto cycle_graph(int n) -> Graph;
    auto complete_graph(int n) -> Graph;
    auto empty_graph(int n) -> Graph;
    auto star_graph(int leaves) -> Graph;
    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
    auto join(const Graph & a, const Graph & b) -> Graph;

    /// The labelled tree on sequence.size() + 2 vertices with the given
    /// Pruefer sequence (entries in 0..size+1).
    auto decode_pruefer(std::span<const int> sequence) -> Graph;
}
