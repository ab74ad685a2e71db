#include <rolecol/error.hh>
#include <rolecol/graph.hh>

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

namespace rolecol
{
    Graph::Graph(int n, std::span<const Edge> edges)
    {
        if (n < 0)
            throw InvalidInput("negative vertex count");

        _adjacency.resize(n);
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InvalidInput("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint outside 0.." + std::to_string(n - 1));
            if (u == v)
                throw InvalidInput("self-loop on vertex " + std::to_string(u));
            _adjacency[u].push_back(v);
            _adjacency[v].push_back(u);
        }

        for (auto & ns : _adjacency) {
            std::sort(ns.begin(), ns.end());
            ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
            _edge_count += ns.size();
        }
        _edge_count /= 2;
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        return std::binary_search(_adjacency[u].begin(), _adjacency[u].end(), v);
    }

    auto Graph::max_degree() const -> int
    {
        int result = 0;
        for (auto & ns : _adjacency)
            result = std::max(result, static_cast<int>(ns.size()));
        return result;
    }

    auto Graph::min_degree() const -> int
    {
        if (_adjacency.empty())
            return 0;
        int result = size();
        for (auto & ns : _adjacency)
            result = std::min(result, static_cast<int>(ns.size()));
        return result;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex u = 0; u < size(); ++u)
            for (Vertex v : _adjacency[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::induced(std::span<const Vertex> vertices) const -> Graph
    {
        std::vector<int> position(size(), -1);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            position[vertices[i]] = static_cast<int>(i);

        std::vector<Edge> sub;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (Vertex w : _adjacency[vertices[i]])
                if (position[w] > static_cast<int>(i))
                    sub.emplace_back(static_cast<int>(i), position[w]);
        return Graph(static_cast<int>(vertices.size()), sub);
    }

    auto Graph::complement() const -> Graph
    {
        std::vector<Edge> sub;
        for (Vertex u = 0; u < size(); ++u)
            for (Vertex v = u + 1; v < size(); ++v)
                if (! adjacent(u, v))
                    sub.emplace_back(u, v);
        return Graph(size(), sub);
    }

    auto build_graph(int n, std::span<const Edge> edges) -> Graph
    {
        return Graph(n, edges);
    }

    auto to_string(GraphKind kind) -> const char *
    {
        switch (kind) {
        case GraphKind::Path: return "path";
        case GraphKind::Tree: return "tree";
        case GraphKind::Cograph: return "cograph";
        case GraphKind::General: return "general";
        }
        return "general";
    }

    auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> result;
        std::vector<bool> seen(g.size(), false);
        for (Vertex start = 0; start < g.size(); ++start) {
            if (seen[start])
                continue;
            std::vector<Vertex> component{start};
            seen[start] = true;
            for (std::size_t i = 0; i < component.size(); ++i)
                for (Vertex w : g.neighbours(component[i]))
                    if (! seen[w]) {
                        seen[w] = true;
                        component.push_back(w);
                    }
            std::sort(component.begin(), component.end());
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return connected_components(g).size() <= 1;
    }

    auto is_tree(const Graph & g) -> bool
    {
        return g.size() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.size()) && is_connected(g);
    }

    auto is_path(const Graph & g) -> bool
    {
        return is_tree(g) && g.max_degree() <= 2;
    }

    auto is_dangling_path(const Graph & g, std::span<const Vertex> vs) -> bool
    {
        if (vs.empty())
            return false;

        std::set<Vertex> distinct(vs.begin(), vs.end());
        if (distinct.size() != vs.size())
            return false;
        for (Vertex v : vs)
            if (v < 0 || v >= g.size())
                return false;

        if (g.degree(vs.front()) != 1)
            return false;
        for (std::size_t i = 1; i + 1 < vs.size(); ++i)
            if (g.degree(vs[i]) != 2)
                return false;

        // induced path: consecutive vertices adjacent, no chords
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (g.adjacent(vs[i], vs[j]) != (j == i + 1))
                    return false;
        return true;
    }

    auto dangling_paths(const Graph & g, int max_length) -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> result;
        for (Vertex leaf = 0; leaf < g.size(); ++leaf) {
            if (g.degree(leaf) != 1)
                continue;
            std::vector<Vertex> path{leaf};
            while (static_cast<int>(path.size()) <= max_length) {
                result.push_back(path);
                Vertex last = path.back();
                if (path.size() > 1 && g.degree(last) != 2)
                    break;
                Vertex next = -1;
                for (Vertex w : g.neighbours(last))
                    if (path.size() == 1 || w != path[path.size() - 2])
                        next = w;
                if (next < 0 || std::find(path.begin(), path.end(), next) != path.end())
                    break;
                path.push_back(next);
            }
        }
        return result;
    }

    auto path_order(const Graph & g) -> std::vector<Vertex>
    {
        if (! is_path(g))
            throw InvalidInput("graph is not a path");

        Vertex start = 0;
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.degree(v) <= 1) {
                start = v;
                break;
            }

        std::vector<Vertex> order{start};
        Vertex previous = -1;
        while (static_cast<int>(order.size()) < g.size()) {
            Vertex current = order.back();
            for (Vertex w : g.neighbours(current))
                if (w != previous) {
                    previous = current;
                    order.push_back(w);
                    break;
                }
        }
        return order;
    }

    auto path_graph(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph(n, edges);
    }

    auto cycle_graph(int n) -> Graph
    {
        if (n < 3)
            throw InvalidInput("a cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph(n, edges);
    }

    auto complete_graph(int n) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        return Graph(n, edges);
    }

    auto empty_graph(int n) -> Graph
    {
        return Graph(n, {});
    }

    auto star_graph(int leaves) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 1; i <= leaves; ++i)
            edges.emplace_back(0, i);
        return Graph(leaves + 1, edges);
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        auto edges = a.edges();
        for (auto [u, v] : b.edges())
            edges.emplace_back(u + a.size(), v + a.size());
        return Graph(a.size() + b.size(), edges);
    }

    auto join(const Graph & a, const Graph & b) -> Graph
    {
        auto edges = disjoint_union(a, b).edges();
        for (Vertex u = 0; u < a.size(); ++u)
            for (Vertex v = 0; v < b.size(); ++v)
                edges.emplace_back(u, v + a.size());
        return Graph(a.size() + b.size(), edges);
    }

    auto decode_pruefer(std::span<const int> sequence) -> Graph
    {
        const int n = static_cast<int>(sequence.size()) + 2;
        std::vector<int> degree(n, 1);
        for (int x : sequence) {
            if (x < 0 || x >= n)
                throw InvalidInput("Pruefer entry out of range");
            ++degree[x];
        }

        std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1)
                leaves.push(v);

        std::vector<Edge> edges;
        edges.reserve(n - 1);
        for (int x : sequence) {
            int leaf = leaves.top();
            leaves.pop();
            edges.emplace_back(leaf, x);
            if (--degree[x] == 1)
                leaves.push(x);
        }
        int u = leaves.top();
        leaves.pop();
        int v = leaves.top();
        edges.emplace_back(u, v);
        return Graph(n, edges);
    }
}
