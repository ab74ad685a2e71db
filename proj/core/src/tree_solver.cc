#include <rolecol/error.hh>
#include <rolecol/tree_solver.hh>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace rolecol
{
    auto RoleTree::neighbourhoods() const -> std::vector<std::vector<Colour>>
    {
        std::vector<std::vector<Colour>> result(k + 1);
        for (auto [c, d] : edges) {
            result[c].push_back(d);
            result[d].push_back(c);
        }
        if (loop)
            result[*loop].push_back(*loop);
        for (auto & ns : result)
            std::sort(ns.begin(), ns.end());
        return result;
    }

    auto RoleTree::as_role_graph() const -> RoleGraph
    {
        RoleGraph r;
        r.k = k;
        for (auto [c, d] : edges)
            r.edges.emplace(std::min(c, d), std::max(c, d));
        if (loop)
            r.loops.insert(*loop);
        return r;
    }

    namespace
    {
        auto role_tree_from(const Graph & shape) -> RoleTree
        {
            RoleTree r;
            r.k = shape.size();
            for (auto [u, v] : shape.edges())
                r.edges.emplace_back(u + 1, v + 1);
            return r;
        }

        // none first, then a loop on each colour
        auto visit_with_loops(RoleTree r, const std::function<bool(const RoleTree &)> & visit) -> bool
        {
            r.loop.reset();
            if (! visit(r))
                return false;
            for (Colour c = 1; c <= r.k; ++c) {
                r.loop = c;
                if (! visit(r))
                    return false;
            }
            return true;
        }

        auto check_tree(const Graph & t) -> void
        {
            if (! is_tree(t))
                throw InvalidInput("input graph is not a tree");
        }

        auto check_k(const Graph & t, int k) -> void
        {
            if (k < 1 || k > t.size())
                throw InvalidInput("need 1 <= k <= n, got n = " + std::to_string(t.size()) + ", k = " + std::to_string(k));
        }

        struct RootedTree
        {
            std::vector<Vertex> order; // BFS from the root
            std::vector<Vertex> parent;
            std::vector<std::vector<Vertex>> children;
        };

        auto root_at(const Graph & t, Vertex root) -> RootedTree
        {
            RootedTree rt;
            rt.parent.assign(t.size(), -1);
            rt.children.resize(t.size());
            rt.order.push_back(root);
            std::vector<bool> seen(t.size(), false);
            seen[root] = true;
            for (std::size_t i = 0; i < rt.order.size(); ++i) {
                Vertex v = rt.order[i];
                for (Vertex w : t.neighbours(v))
                    if (! seen[w]) {
                        seen[w] = true;
                        rt.parent[w] = v;
                        rt.children[v].push_back(w);
                        rt.order.push_back(w);
                    }
            }
            return rt;
        }

        auto subtree_sizes(const RootedTree & rt) -> std::vector<int>
        {
            std::vector<int> size(rt.parent.size(), 1);
            for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it)
                if (rt.parent[*it] >= 0)
                    size[rt.parent[*it]] += size[*it];
            return size;
        }

        auto centres(const Graph & t) -> std::vector<Vertex>
        {
            const int n = t.size();
            if (n <= 2) {
                std::vector<Vertex> all(n);
                std::iota(all.begin(), all.end(), 0);
                return all;
            }
            std::vector<int> degree(n);
            std::vector<Vertex> layer;
            for (Vertex v = 0; v < n; ++v) {
                degree[v] = t.degree(v);
                if (degree[v] <= 1)
                    layer.push_back(v);
            }
            int remaining = n;
            while (remaining > 2) {
                remaining -= static_cast<int>(layer.size());
                std::vector<Vertex> next;
                for (Vertex v : layer)
                    for (Vertex w : t.neighbours(v))
                        if (--degree[w] == 1)
                            next.push_back(w);
                layer = std::move(next);
            }
            std::sort(layer.begin(), layer.end());
            return layer;
        }

        auto rooted_code(const Graph & t, Vertex root) -> std::string
        {
            auto rt = root_at(t, root);
            std::vector<std::string> code(t.size());
            for (auto it = rt.order.rbegin(); it != rt.order.rend(); ++it) {
                std::vector<std::string> parts;
                for (Vertex c : rt.children[*it])
                    parts.push_back(std::move(code[c]));
                std::sort(parts.begin(), parts.end());
                std::string s = "(";
                for (auto & p : parts)
                    s += p;
                s += ")";
                code[*it] = std::move(s);
            }
            return code[root];
        }
    }

    auto canonical_tree_code(const Graph & t) -> std::string
    {
        check_tree(t);
        std::string best;
        for (Vertex c : centres(t)) {
            auto code = rooted_code(t, c);
            if (best.empty() || code < best)
                best = std::move(code);
        }
        return best;
    }

    auto nonisomorphic_trees(int n) -> std::vector<Graph>
    {
        if (n < 1)
            return {};
        std::vector<Graph> current{Graph(1, {})};
        for (int m = 2; m <= n; ++m) {
            std::vector<Graph> next;
            std::set<std::string> seen;
            for (auto & tree : current) {
                auto base = tree.edges();
                for (Vertex v = 0; v < tree.size(); ++v) {
                    auto edges = base;
                    edges.emplace_back(v, m - 1);
                    Graph grown(m, edges);
                    if (seen.insert(canonical_tree_code(grown)).second)
                        next.push_back(std::move(grown));
                }
            }
            current = std::move(next);
        }
        return current;
    }

    auto for_each_role_tree(int k, const std::function<bool(const RoleTree &)> & visit) -> void
    {
        if (k < 1)
            throw InvalidInput("role trees need k >= 1");
        if (k <= 2) {
            visit_with_loops(role_tree_from(path_graph(k)), visit);
            return;
        }

        std::vector<int> sequence(k - 2, 0);
        while (true) {
            if (! visit_with_loops(role_tree_from(decode_pruefer(sequence)), visit))
                return;
            int i = k - 3;
            while (i >= 0 && sequence[i] == k - 1)
                sequence[i--] = 0;
            if (i < 0)
                return;
            ++sequence[i];
        }
    }

    auto enumerate_role_trees(int k) -> std::vector<RoleTree>
    {
        std::vector<RoleTree> result;
        for_each_role_tree(k, [&](const RoleTree & r) {
            result.push_back(r);
            return true;
        });
        return result;
    }

    namespace
    {
        constexpr int max_role_degree = 20;

        // Feasibility tables for one (tree, role tree) pair. For vertex v
        // coloured c, the children must pick colours from N(c) so that
        // together with the parent's colour they cover N(c) exactly.
        class HomomorphismDp
        {
        public:
            HomomorphismDp(const Graph & t, const RoleTree & r) :
                _t(t),
                _k(r.k),
                _nbhd(r.neighbourhoods()),
                _rooted(root_at(t, 0))
            {
                _index.assign(_k + 1, std::vector<int>(_k + 1, -1));
                for (Colour c = 1; c <= _k; ++c) {
                    if (static_cast<int>(_nbhd[c].size()) > max_role_degree)
                        throw BudgetExceeded("role graph degree too large for the subset DP");
                    for (int j = 0; j < static_cast<int>(_nbhd[c].size()); ++j)
                        _index[c][_nbhd[c][j]] = j;
                }

                // _feasible[v][c] is a bitmask over parent slots: bit j for parent
                // colour N(c)[j], bit |N(c)| for "no parent".
                _feasible.assign(t.size(), std::vector<std::uint32_t>(_k + 1, 0));
                for (auto it = _rooted.order.rbegin(); it != _rooted.order.rend(); ++it)
                    for (Colour c = 1; c <= _k; ++c)
                        _feasible[*it][c] = parent_slots(*it, c);
            }

            auto solve() -> std::optional<RoleColouring>
            {
                Vertex root = _rooted.order.front();
                for (Colour c = 1; c <= _k; ++c)
                    if (_feasible[root][c] >> _nbhd[c].size() & 1) {
                        RoleColouring rc{_k, std::vector<Colour>(_t.size(), 0)};
                        rc.colours[root] = c;
                        for (Vertex v : _rooted.order)
                            assign_children(v, rc);
                        return rc;
                    }
                return std::nullopt;
            }

        private:
            const Graph & _t;
            int _k;
            std::vector<std::vector<Colour>> _nbhd;
            RootedTree _rooted;
            std::vector<std::vector<int>> _index;
            std::vector<std::vector<std::uint32_t>> _feasible;

            // Which slots of N(c) child u may take when its parent has colour c.
            auto child_options(Vertex u, Colour c) const -> std::uint32_t
            {
                std::uint32_t options = 0;
                for (int j = 0; j < static_cast<int>(_nbhd[c].size()); ++j) {
                    Colour d = _nbhd[c][j];
                    if (_feasible[u][d] >> _index[d][c] & 1)
                        options |= std::uint32_t{1} << j;
                }
                return options;
            }

            // reach[i] = masks of N(c) coverable by the first i children
            auto reach_layers(Vertex v, Colour c) const -> std::vector<std::vector<char>>
            {
                const std::size_t masks = std::size_t{1} << _nbhd[c].size();
                std::vector<std::vector<char>> layers;
                layers.emplace_back(masks, 0);
                layers.back()[0] = 1;
                for (Vertex u : _rooted.children[v]) {
                    auto options = child_options(u, c);
                    std::vector<char> next(masks, 0);
                    auto & prev = layers.back();
                    for (std::size_t m = 0; m < masks; ++m)
                        if (prev[m])
                            for (std::uint32_t o = options; o != 0; o &= o - 1)
                                next[m | (o & (~o + 1))] = 1;
                    layers.push_back(std::move(next));
                }
                return layers;
            }

            auto parent_slots(Vertex v, Colour c) const -> std::uint32_t
            {
                const int width = static_cast<int>(_nbhd[c].size());
                const std::uint32_t full = (std::uint32_t{1} << width) - 1;
                auto layers = reach_layers(v, c);
                auto & last = layers.back();

                std::uint32_t result = 0;
                for (int slot = 0; slot <= width; ++slot) {
                    if (slot < width && _rooted.parent[v] < 0)
                        continue;
                    if (slot == width && _rooted.parent[v] >= 0)
                        continue;
                    std::uint32_t required = slot < width ? full & ~(std::uint32_t{1} << slot) : full;
                    for (std::uint32_t m = 0; m <= full; ++m)
                        if (last[m] && (m & required) == required) {
                            result |= std::uint32_t{1} << slot;
                            break;
                        }
                }
                return result;
            }

            auto assign_children(Vertex v, RoleColouring & rc) const -> void
            {
                auto & kids = _rooted.children[v];
                if (kids.empty())
                    return;

                Colour c = rc.colours[v];
                const int width = static_cast<int>(_nbhd[c].size());
                const std::uint32_t full = (std::uint32_t{1} << width) - 1;
                Vertex p = _rooted.parent[v];
                std::uint32_t required = p >= 0 ? full & ~(std::uint32_t{1} << _index[c][rc.colours[p]]) : full;

                auto layers = reach_layers(v, c);
                std::uint32_t mask = 0;
                while (! (layers.back()[mask] && (mask & required) == required))
                    ++mask;

                for (std::size_t i = kids.size(); i-- > 0;) {
                    auto options = child_options(kids[i], c);
                    bool placed = false;
                    for (int j = 0; j < width && ! placed; ++j) {
                        std::uint32_t bit = std::uint32_t{1} << j;
                        if (! (options & bit) || ! (mask & bit))
                            continue;
                        for (std::uint32_t prev : {mask, mask & ~bit})
                            if (layers[i][prev]) {
                                rc.colours[kids[i]] = _nbhd[c][j];
                                mask = prev;
                                placed = true;
                                break;
                            }
                    }
                    if (! placed)
                        throw InternalError("homomorphism reconstruction lost its way");
                }
            }
        };

        // Necessary condition: each colour c needs a vertex of degree at
        // least |N(c)|, and distinct colours need distinct vertices.
        auto degrees_admit(const std::vector<int> & tree_degrees_desc, const RoleTree & r) -> bool
        {
            auto nbhd = r.neighbourhoods();
            std::vector<int> needs;
            for (Colour c = 1; c <= r.k; ++c)
                needs.push_back(static_cast<int>(nbhd[c].size()));
            std::sort(needs.rbegin(), needs.rend());
            for (std::size_t i = 0; i < needs.size(); ++i)
                if (i >= tree_degrees_desc.size() || tree_degrees_desc[i] < needs[i])
                    return false;
            return true;
        }
    }

    auto locally_surjective_hom(const Graph & t, const RoleTree & r) -> std::optional<RoleColouring>
    {
        check_tree(t);
        if (r.k < 1)
            throw InvalidInput("role tree needs at least one colour");
        HomomorphismDp dp{t, r};
        return dp.solve();
    }

    auto solve_tree_constant_k(const Graph & t, int k, RoleTreeFamily family) -> std::optional<RoleColouring>
    {
        check_tree(t);
        check_k(t, k);

        std::vector<int> degrees;
        for (Vertex v = 0; v < t.size(); ++v)
            degrees.push_back(t.degree(v));
        std::sort(degrees.rbegin(), degrees.rend());

        std::optional<RoleColouring> result;
        auto attempt = [&](const RoleTree & r) {
            if (degrees_admit(degrees, r))
                result = locally_surjective_hom(t, r);
            return ! result;
        };

        if (family == RoleTreeFamily::Labelled)
            for_each_role_tree(k, attempt);
        else
            for (auto & shape : nonisomorphic_trees(k))
                if (! visit_with_loops(role_tree_from(shape), attempt))
                    break;
        return result;
    }

    auto hub_gadget_decomposition(const Graph & t, int surplus) -> HubGadgetDecomposition
    {
        check_tree(t);
        if (surplus < 1)
            throw InvalidInput("gadget decomposition needs a surplus of at least 1");

        const int n = t.size();
        const int limit = 2 * surplus + 1;
        HubGadgetDecomposition result;
        result.surplus = surplus;

        if (n <= limit) {
            std::vector<Vertex> all(n);
            std::iota(all.begin(), all.end(), 0);
            result.gadgets.push_back(std::move(all));
            result.hub_of.push_back(-1);
            return result;
        }

        // root at the centroid
        auto provisional = root_at(t, 0);
        auto size = subtree_sizes(provisional);
        Vertex centroid = -1;
        int best = n + 1;
        for (Vertex v = 0; v < n; ++v) {
            int heaviest = n - size[v];
            for (Vertex c : provisional.children[v])
                heaviest = std::max(heaviest, size[c]);
            if (heaviest < best) {
                best = heaviest;
                centroid = v;
            }
        }

        auto rooted = root_at(t, centroid);
        size = subtree_sizes(rooted);

        std::vector<bool> in_gadget(n, false);
        std::set<Vertex> hubs;
        for (Vertex v : rooted.order) {
            Vertex p = rooted.parent[v];
            if (p < 0 || in_gadget[v] || size[v] > limit)
                continue;
            // maximal: the parent's side is too big or the parent is the root
            std::vector<Vertex> gadget;
            std::vector<Vertex> stack{v};
            while (! stack.empty()) {
                Vertex x = stack.back();
                stack.pop_back();
                in_gadget[x] = true;
                gadget.push_back(x);
                for (Vertex c : rooted.children[x])
                    stack.push_back(c);
            }
            std::sort(gadget.begin(), gadget.end());
            result.gadgets.push_back(std::move(gadget));
            result.hub_of.push_back(p);
            hubs.insert(p);
        }

        // order gadgets by smallest vertex for determinism
        std::vector<std::size_t> perm(result.gadgets.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return result.gadgets[a].front() < result.gadgets[b].front(); });
        HubGadgetDecomposition sorted;
        sorted.surplus = surplus;
        for (auto i : perm) {
            sorted.gadgets.push_back(std::move(result.gadgets[i]));
            sorted.hub_of.push_back(result.hub_of[i]);
        }
        sorted.hubs.assign(hubs.begin(), hubs.end());
        for (Vertex v = 0; v < n; ++v)
            if (! in_gadget[v] && ! hubs.contains(v))
                sorted.free_vertices.push_back(v);
        return sorted;
    }

    namespace
    {
        // A set of disjoint colour classes (each of size >= 2) inside one
        // zone; every vertex outside the classes keeps a colour of its own.
        using Classes = std::vector<std::vector<Vertex>>;

        auto classes_valid(const Graph & t, const Classes & classes, std::vector<int> & token) -> bool
        {
            const int n = t.size();
            for (std::size_t i = 0; i < classes.size(); ++i)
                for (Vertex v : classes[i])
                    token[v] = static_cast<int>(i);

            auto seen_from = [&](Vertex v) {
                std::vector<int> s;
                for (Vertex w : t.neighbours(v))
                    s.push_back(token[w] >= 0 ? token[w] : n + w);
                std::sort(s.begin(), s.end());
                s.erase(std::unique(s.begin(), s.end()), s.end());
                return s;
            };

            bool ok = true;
            for (auto & cls : classes) {
                auto first = seen_from(cls.front());
                for (std::size_t i = 1; i < cls.size() && ok; ++i)
                    ok = seen_from(cls[i]) == first;
                if (! ok)
                    break;
            }

            for (auto & cls : classes)
                for (Vertex v : cls)
                    token[v] = -1;
            return ok;
        }

        // Visits every family of classes inside `pool` whose excess
        // (sum of |class| - 1) is between 1 and `budget`.
        class ClassEnumerator
        {
        public:
            ClassEnumerator(const std::vector<Vertex> & pool, int budget,
                const std::function<bool(const Classes &, int)> & visit) :
                _pool(pool),
                _budget(budget),
                _visit(visit),
                _used(pool.size(), false)
            {
            }

            auto run() -> void { next_class(0, 0); }

        private:
            const std::vector<Vertex> & _pool;
            int _budget;
            const std::function<bool(const Classes &, int)> & _visit;
            std::vector<bool> _used;
            Classes _classes;
            bool _stopped = false;

            // classes are opened in increasing order of their first member
            auto next_class(std::size_t first_from, int excess) -> void
            {
                if (excess == _budget)
                    return;
                for (std::size_t a = first_from; a < _pool.size() && ! _stopped; ++a) {
                    if (_used[a])
                        continue;
                    _used[a] = true;
                    _classes.push_back({_pool[a]});
                    extend(a, a + 1, excess);
                    _classes.pop_back();
                    _used[a] = false;
                }
            }

            auto extend(std::size_t opener, std::size_t from, int excess) -> void
            {
                for (std::size_t b = from; b < _pool.size() && ! _stopped; ++b) {
                    if (_used[b])
                        continue;
                    _used[b] = true;
                    _classes.back().push_back(_pool[b]);
                    int now = excess + 1;
                    if (! _visit(_classes, now))
                        _stopped = true;
                    else {
                        if (now < _budget) {
                            extend(opener, b + 1, now);
                            next_class(opener + 1, now);
                        }
                    }
                    _classes.back().pop_back();
                    _used[b] = false;
                }
            }
        };
    }

    auto solve_tree_constant_surplus(const Graph & t, int k) -> std::optional<RoleColouring>
    {
        check_tree(t);
        check_k(t, k);

        const int n = t.size();
        const int surplus = n - k;
        if (surplus == 0)
            return rainbow_colouring(n);

        auto decomposition = hub_gadget_decomposition(t, surplus);

        // zones: the gadgets hanging off one hub, pooled together
        std::vector<std::vector<Vertex>> zones;
        std::vector<Vertex> zone_hub;
        for (std::size_t g = 0; g < decomposition.gadgets.size(); ++g) {
            Vertex hub = decomposition.hub_of[g];
            auto it = std::find(zone_hub.begin(), zone_hub.end(), hub);
            if (it == zone_hub.end()) {
                zone_hub.push_back(hub);
                zones.emplace_back();
                it = zone_hub.end() - 1;
            }
            auto & zone = zones[it - zone_hub.begin()];
            zone.insert(zone.end(), decomposition.gadgets[g].begin(), decomposition.gadgets[g].end());
        }
        for (auto & zone : zones)
            std::sort(zone.begin(), zone.end());

        // per zone, one witness for each achievable number of duplicates
        std::vector<int> token(n, -1);
        std::vector<std::vector<std::optional<Classes>>> witness(zones.size());
        for (std::size_t z = 0; z < zones.size(); ++z) {
            witness[z].assign(surplus + 1, std::nullopt);
            witness[z][0] = Classes{};
            int missing = surplus;
            std::function<bool(const Classes &, int)> record = [&](const Classes & classes, int excess) {
                if (! witness[z][excess] && classes_valid(t, classes, token)) {
                    witness[z][excess] = classes;
                    --missing;
                }
                return missing > 0;
            };
            ClassEnumerator{zones[z], surplus, record}.run();
        }

        // combine zones so the duplicates add up to exactly the surplus
        std::vector<std::vector<int>> choice(zones.size() + 1, std::vector<int>(surplus + 1, -1));
        choice[0][0] = 0;
        for (std::size_t z = 0; z < zones.size(); ++z)
            for (int total = 0; total <= surplus; ++total) {
                if (choice[z][total] < 0)
                    continue;
                for (int d = 0; total + d <= surplus; ++d)
                    if (witness[z][d] && choice[z + 1][total + d] < 0)
                        choice[z + 1][total + d] = d;
            }
        if (choice[zones.size()][surplus] < 0)
            return std::nullopt;

        std::vector<Colour> colours(n);
        std::iota(colours.begin(), colours.end(), 1);
        int total = surplus;
        int next_colour = n + 1;
        for (std::size_t z = zones.size(); z-- > 0;) {
            int d = choice[z + 1][total];
            for (auto & cls : *witness[z][d]) {
                for (Vertex v : cls)
                    colours[v] = next_colour;
                ++next_colour;
            }
            total -= d;
        }

        auto rc = canonical_colouring(colours);
        if (rc.k != k || ! validate(t, rc))
            throw InternalError("combined gadget colouring failed validation");
        return rc;
    }

    auto solve_tree(const Graph & t, int k) -> std::optional<RoleColouring>
    {
        check_tree(t);
        check_k(t, k);
        if (k <= t.size() - k)
            return solve_tree_constant_k(t, k);
        return solve_tree_constant_surplus(t, k);
    }
}
