#include "support.hh"

#include <rolecol/tree_solver.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace rolecol::testing
{
    auto naive_valid(const Graph & g, const std::vector<Colour> & colours, int k) -> bool
    {
        const int n = g.size();
        std::vector<std::set<Colour>> seen(n);
        std::set<Colour> used;
        for (Vertex v = 0; v < n; ++v) {
            if (colours[v] < 1 || colours[v] > k)
                return false;
            used.insert(colours[v]);
            for (Vertex u = 0; u < n; ++u)
                if (g.adjacent(u, v))
                    seen[v].insert(colours[u]);
        }
        if (static_cast<int>(used.size()) != k)
            return false;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (colours[u] == colours[v] && seen[u] != seen[v])
                    return false;
        return true;
    }

    namespace
    {
        auto sweep(const Graph & g, int k, bool stop_at_first) -> std::uint64_t
        {
            const int n = g.size();
            std::vector<Colour> colours(n, 1);
            std::uint64_t found = 0;
            while (true) {
                if (naive_valid(g, colours, k)) {
                    ++found;
                    if (stop_at_first)
                        return found;
                }
                int i = n - 1;
                while (i >= 0 && colours[i] == k)
                    colours[i--] = 1;
                if (i < 0)
                    return found;
                ++colours[i];
            }
        }
    }

    auto naive_colourable(const Graph & g, int k) -> bool
    {
        return k >= 1 && k <= g.size() && sweep(g, k, true) > 0;
    }

    auto naive_count(const Graph & g, int k) -> std::uint64_t
    {
        if (k < 1 || k > g.size())
            return 0;
        std::uint64_t factorial = 1;
        for (int i = 2; i <= k; ++i)
            factorial *= i;
        return sweep(g, k, false) / factorial;
    }

    auto stirling_table(int n_max) -> std::vector<std::vector<std::uint64_t>>
    {
        std::vector<std::vector<std::uint64_t>> s(n_max + 1, std::vector<std::uint64_t>(n_max + 1, 0));
        s[0][0] = 1;
        for (int n = 1; n <= n_max; ++n)
            for (int k = 1; k <= n; ++k)
                s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
        return s;
    }

    auto has_induced_p4(const Graph & g) -> bool
    {
        const int n = g.size();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b)
                for (Vertex c = 0; c < n; ++c)
                    for (Vertex d = 0; d < n; ++d) {
                        std::set<Vertex> distinct{a, b, c, d};
                        if (distinct.size() < 4)
                            continue;
                        if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(c, d) && ! g.adjacent(a, c) && ! g.adjacent(b, d) && ! g.adjacent(a, d))
                            return true;
                    }
        return false;
    }

    auto trees_up_to_isomorphism(int n) -> std::vector<Graph>
    {
        std::set<std::string> codes;
        std::vector<Graph> result;
        for_each_labelled_tree(n, [&](const Graph & t) {
            if (codes.insert(canonical_tree_code(t)).second)
                result.push_back(t);
        });
        return result;
    }

    auto graph_from_mask(int n, std::uint64_t mask) -> Graph
    {
        std::vector<Edge> edges;
        int bit = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1)
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    namespace
    {
        auto build_random(std::vector<Vertex> vs, std::mt19937_64 & rng, std::vector<Edge> & edges) -> void
        {
            if (vs.size() == 1)
                return;
            std::uniform_int_distribution<std::size_t> cut(1, vs.size() - 1);
            std::shuffle(vs.begin(), vs.end(), rng);
            std::size_t at = cut(rng);
            std::vector<Vertex> left(vs.begin(), vs.begin() + at), right(vs.begin() + at, vs.end());
            if (std::bernoulli_distribution(0.5)(rng))
                for (Vertex u : left)
                    for (Vertex v : right)
                        edges.emplace_back(u, v);
            build_random(left, rng, edges);
            build_random(right, rng, edges);
        }
    }

    auto random_cograph(int n, std::mt19937_64 & rng) -> Graph
    {
        std::vector<Vertex> vs(n);
        std::iota(vs.begin(), vs.end(), 0);
        std::vector<Edge> edges;
        build_random(vs, rng, edges);
        return Graph(n, edges);
    }

    auto random_graph(int n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto tree_path(const Graph & t, Vertex u, Vertex v) -> std::vector<Vertex>
    {
        std::vector<Vertex> parent(t.size(), -1), queue{v};
        parent[v] = v;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : t.neighbours(queue[i]))
                if (parent[w] < 0) {
                    parent[w] = queue[i];
                    queue.push_back(w);
                }
        std::vector<Vertex> path{u};
        while (path.back() != v)
            path.push_back(parent[path.back()]);
        return path;
    }

    auto half_path_violations(const Graph & t, const RoleColouring & rc) -> int
    {
        int violations = 0;
        for (Vertex u = 0; u < t.size(); ++u)
            for (Vertex v = u + 1; v < t.size(); ++v) {
                if (rc.colours[u] != rc.colours[v])
                    continue;
                auto path = tree_path(t, u, v);
                std::set<Colour> colours;
                for (Vertex w : path)
                    colours.insert(rc.colours[w]);
                if (colours.size() > (path.size() + 1) / 2)
                    ++violations;
            }
        return violations;
    }

    auto dangling_rainbow_violations(const Graph & g, const RoleColouring & rc) -> int
    {
        int violations = 0;
        for (auto & path : dangling_paths(g, rc.k)) {
            std::set<Colour> colours;
            for (Vertex v : path)
                colours.insert(rc.colours[v]);
            if (colours.size() != path.size())
                ++violations;
        }
        return violations;
    }
}
