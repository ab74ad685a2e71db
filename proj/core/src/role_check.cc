#include <rolecol/error.hh>
#include <rolecol/role_check.hh>

#include <algorithm>
#include <string>

namespace rolecol
{
    auto rainbow_colouring(int n) -> RoleColouring
    {
        RoleColouring rc{n, std::vector<Colour>(n)};
        for (int v = 0; v < n; ++v)
            rc.colours[v] = v + 1;
        return rc;
    }

    auto monochromatic_colouring(int n) -> RoleColouring
    {
        return RoleColouring{1, std::vector<Colour>(n, 1)};
    }

    auto canonical_colouring(std::span<const Colour> colours) -> RoleColouring
    {
        std::vector<std::pair<Colour, Colour>> renumber;
        RoleColouring result;
        result.colours.reserve(colours.size());
        for (Colour c : colours) {
            auto it = std::find_if(renumber.begin(), renumber.end(), [&](auto & p) { return p.first == c; });
            if (it == renumber.end()) {
                renumber.emplace_back(c, static_cast<Colour>(renumber.size()) + 1);
                result.colours.push_back(renumber.back().second);
            }
            else
                result.colours.push_back(it->second);
        }
        result.k = static_cast<int>(renumber.size());
        return result;
    }

    namespace
    {
        auto check_shape(const Graph & g, const RoleColouring & rc) -> void
        {
            if (static_cast<int>(rc.colours.size()) != g.size())
                throw InvalidInput("colouring has " + std::to_string(rc.colours.size()) + " entries for a graph on " + std::to_string(g.size()) + " vertices");
            if (rc.k < 1)
                throw InvalidInput("colour count must be positive");
            for (Colour c : rc.colours)
                if (c < 1 || c > rc.k)
                    throw InvalidInput("colour " + std::to_string(c) + " outside 1.." + std::to_string(rc.k));
        }
    }

    auto neighbourhood_colour_sets(const Graph & g, const RoleColouring & rc) -> std::vector<std::vector<Colour>>
    {
        check_shape(g, rc);
        std::vector<std::vector<Colour>> result(g.size());
        for (Vertex v = 0; v < g.size(); ++v) {
            auto & set = result[v];
            for (Vertex w : g.neighbours(v))
                set.push_back(rc.colours[w]);
            std::sort(set.begin(), set.end());
            set.erase(std::unique(set.begin(), set.end()), set.end());
        }
        return result;
    }

    auto validate(const Graph & g, const RoleColouring & rc) -> bool
    {
        auto sets = neighbourhood_colour_sets(g, rc);

        std::vector<Vertex> representative(rc.k + 1, -1);
        for (Vertex v = 0; v < g.size(); ++v) {
            Colour c = rc.colours[v];
            if (representative[c] < 0)
                representative[c] = v;
            else if (sets[representative[c]] != sets[v])
                return false;
        }

        return std::none_of(representative.begin() + 1, representative.end(), [](Vertex v) { return v < 0; });
    }

    auto role_graph(const Graph & g, const RoleColouring & rc) -> RoleGraph
    {
        if (! validate(g, rc))
            throw InvalidInput("not a valid role colouring");

        RoleGraph r;
        r.k = rc.k;
        for (auto [u, v] : g.edges()) {
            Colour c = rc.colours[u], d = rc.colours[v];
            if (c == d)
                r.loops.insert(c);
            else
                r.edges.emplace(std::min(c, d), std::max(c, d));
        }
        return r;
    }

    auto RoleGraph::neighbourhood(Colour c) const -> std::vector<Colour>
    {
        std::vector<Colour> result;
        for (auto [a, b] : edges) {
            if (a == c)
                result.push_back(b);
            else if (b == c)
                result.push_back(a);
        }
        if (loops.contains(c))
            result.push_back(c);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto RoleGraph::degree(Colour c) const -> int
    {
        return static_cast<int>(neighbourhood(c).size());
    }

    auto RoleGraph::is_connected() const -> bool
    {
        if (k <= 1)
            return true;
        std::vector<bool> seen(k + 1, false);
        std::vector<Colour> stack{1};
        seen[1] = true;
        int reached = 1;
        while (! stack.empty()) {
            Colour c = stack.back();
            stack.pop_back();
            for (Colour d : neighbourhood(c))
                if (! seen[d]) {
                    seen[d] = true;
                    ++reached;
                    stack.push_back(d);
                }
        }
        return reached == k;
    }

    auto RoleGraph::is_tree_with_at_most_one_loop() const -> bool
    {
        return static_cast<int>(edges.size()) == k - 1 && is_connected() && loops.size() <= 1;
    }

    auto role_graph_bounds_ok(const Graph & g, const RoleGraph & r) -> bool
    {
        int max_r = 0, min_r = r.k > 0 ? r.degree(1) : 0;
        for (Colour c = 1; c <= r.k; ++c) {
            max_r = std::max(max_r, r.degree(c));
            min_r = std::min(min_r, r.degree(c));
        }
        if (max_r > g.max_degree() || min_r > g.min_degree())
            return false;
        if (is_connected(g) && ! r.is_connected())
            return false;
        return true;
    }
}
