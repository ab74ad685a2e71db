#include <rolecol/cograph_solver.hh>
#include <rolecol/error.hh>

#include <algorithm>
#include <numeric>
#include <string>

namespace rolecol
{
    auto CoTree::leaves() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        std::vector<const CoTree *> stack{this};
        while (! stack.empty()) {
            auto node = stack.back();
            stack.pop_back();
            if (node->kind == CoTreeKind::Leaf)
                result.push_back(node->vertex);
            else
                for (auto & c : node->children)
                    stack.push_back(&c);
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    auto CoTree::leaf_count() const -> int
    {
        if (kind == CoTreeKind::Leaf)
            return 1;
        int total = 0;
        for (auto & c : children)
            total += c.leaf_count();
        return total;
    }

    namespace
    {
        auto build(const Graph & g, const std::vector<Vertex> & vertices) -> std::optional<CoTree>
        {
            if (vertices.size() == 1)
                return CoTree{CoTreeKind::Leaf, vertices.front(), {}};

            auto sub = g.induced(vertices);
            auto parts = connected_components(sub);
            CoTreeKind kind = CoTreeKind::Union;
            if (parts.size() == 1) {
                parts = connected_components(sub.complement());
                kind = CoTreeKind::Join;
                if (parts.size() == 1)
                    return std::nullopt;
            }

            CoTree node{kind, -1, {}};
            for (auto & part : parts) {
                std::vector<Vertex> originals;
                for (Vertex v : part)
                    originals.push_back(vertices[v]);
                auto child = build(g, originals);
                if (! child)
                    return std::nullopt;
                node.children.push_back(std::move(*child));
            }
            return node;
        }

        auto add_edges(const CoTree & t, std::vector<Edge> & edges) -> void
        {
            if (t.kind == CoTreeKind::Leaf)
                return;
            for (auto & c : t.children)
                add_edges(c, edges);
            if (t.kind == CoTreeKind::Join) {
                std::vector<std::vector<Vertex>> sides;
                for (auto & c : t.children)
                    sides.push_back(c.leaves());
                for (std::size_t i = 0; i < sides.size(); ++i)
                    for (std::size_t j = i + 1; j < sides.size(); ++j)
                        for (Vertex u : sides[i])
                            for (Vertex v : sides[j])
                                edges.emplace_back(u, v);
            }
        }
    }

    auto build_cotree(const Graph & g) -> std::optional<CoTree>
    {
        if (g.size() < 1)
            return std::nullopt;
        std::vector<Vertex> all(g.size());
        std::iota(all.begin(), all.end(), 0);
        return build(g, all);
    }

    auto evaluate_cotree(const CoTree & t, int n) -> Graph
    {
        std::vector<Edge> edges;
        add_edges(t, edges);
        return Graph(n, edges);
    }

    auto is_cograph(const Graph & g) -> bool
    {
        return build_cotree(g).has_value();
    }

    auto is_one_role_colourable(const Graph & g) -> bool
    {
        bool isolated = false, edged = false;
        for (Vertex v = 0; v < g.size(); ++v)
            (g.degree(v) == 0 ? isolated : edged) = true;
        return ! (isolated && edged);
    }

    namespace
    {
        constexpr Colour red = 1, blue = 2;

        // A sub-cograph: a single leaf, or the union/join of >= 2 cotree
        // nodes of the opposite kind (or leaves).
        struct Piece
        {
            CoTreeKind kind = CoTreeKind::Leaf;
            std::vector<const CoTree *> parts;

            static auto of(const CoTree & node) -> Piece
            {
                if (node.kind == CoTreeKind::Leaf)
                    return Piece{CoTreeKind::Leaf, {&node}};
                Piece p{node.kind, {}};
                for (auto & c : node.children)
                    p.parts.push_back(&c);
                return p;
            }

            static auto of(CoTreeKind kind, std::vector<const CoTree *> parts) -> Piece
            {
                if (parts.size() == 1)
                    return of(*parts.front());
                return Piece{kind, std::move(parts)};
            }

            auto vertices() const -> std::vector<Vertex>
            {
                std::vector<Vertex> result;
                for (auto p : parts) {
                    auto ls = p->leaves();
                    result.insert(result.end(), ls.begin(), ls.end());
                }
                std::sort(result.begin(), result.end());
                return result;
            }

            auto size() const -> int
            {
                int total = 0;
                for (auto p : parts)
                    total += p->leaf_count();
                return total;
            }

            // every component trivial, or none
            auto one_role_colourable() const -> bool
            {
                if (kind != CoTreeKind::Union)
                    return true;
                auto trivial = [](const CoTree * p) { return p->kind == CoTreeKind::Leaf; };
                return std::all_of(parts.begin(), parts.end(), trivial) || std::none_of(parts.begin(), parts.end(), trivial);
            }

            auto has_isolated_and_edges() const -> bool { return ! one_role_colourable(); }
        };

        class CographColourer
        {
        public:
            CographColourer(const Graph & g) :
                _g(g),
                _colours(g.size(), 0)
            {
            }

            auto colours() const -> const std::vector<Colour> & { return _colours; }

            auto paint(const std::vector<Vertex> & vs, Colour c) -> void
            {
                for (Vertex v : vs)
                    _colours[v] = c;
            }

            auto paint(const CoTree * node, Colour c) -> void { paint(node->leaves(), c); }

            // Blue on a maximal independent set of the component, red elsewhere:
            // blue vertices then see only red inside it and every red vertex has a
            // blue neighbour.
            auto split_component(const CoTree * component, Colour independent, Colour rest) -> void
            {
                auto vs = component->leaves();
                std::vector<Vertex> chosen;
                for (Vertex v : vs) {
                    bool free = std::none_of(chosen.begin(), chosen.end(), [&](Vertex u) { return _g.adjacent(u, v); });
                    if (free)
                        chosen.push_back(v);
                    _colours[v] = free ? independent : rest;
                }
            }

            auto two_colour(const Piece & piece) -> void
            {
                if (piece.kind == CoTreeKind::Leaf)
                    throw InternalError("cannot 2-role-colour a single vertex");

                if (piece.kind == CoTreeKind::Union) {
                    std::vector<const CoTree *> isolated, big;
                    for (auto p : piece.parts)
                        (p->kind == CoTreeKind::Leaf ? isolated : big).push_back(p);
                    if (! isolated.empty() && ! big.empty()) {
                        for (auto p : isolated)
                            paint(p, red);
                        for (auto p : big)
                            paint(p, blue);
                    }
                    else
                        for (std::size_t i = 0; i < piece.parts.size(); ++i)
                            paint(piece.parts[i], i == 0 ? red : blue);
                    return;
                }

                // join
                auto single = std::find_if(piece.parts.begin(), piece.parts.end(), [](auto p) { return p->kind == CoTreeKind::Leaf; });
                if (single == piece.parts.end()) {
                    // both sides have at least two vertices: each sees red and blue across
                    two_colour(Piece::of(*piece.parts.front()));
                    two_colour(Piece::of(CoTreeKind::Join, {piece.parts.begin() + 1, piece.parts.end()}));
                    return;
                }

                std::vector<const CoTree *> rest;
                for (auto p : piece.parts)
                    if (p != *single)
                        rest.push_back(p);
                auto other = Piece::of(CoTreeKind::Join, rest);

                paint(*single, red);
                if (other.one_role_colourable()) {
                    paint(other.vertices(), blue);
                    return;
                }

                // apex plus a disconnected remainder with isolated vertices and edges
                for (auto p : other.parts) {
                    if (p->kind == CoTreeKind::Leaf)
                        paint(p, blue);
                    else
                        split_component(p, blue, red);
                }
            }

            auto k_colour(const Piece & piece, int k, Colour offset) -> void
            {
                const int n = piece.size();
                if (k < 1 || k > n)
                    throw InternalError("colour budget outside 1..n in cograph recursion");

                if (k == 1) {
                    if (! piece.one_role_colourable())
                        throw InternalError("monochromatic block is not 1-role-colourable");
                    paint(piece.vertices(), offset + 1);
                    return;
                }
                if (k == n) {
                    auto vs = piece.vertices();
                    for (int i = 0; i < n; ++i)
                        _colours[vs[i]] = offset + 1 + i;
                    return;
                }
                if (k == 2) {
                    two_colour(piece);
                    for (Vertex v : piece.vertices())
                        _colours[v] += offset;
                    return;
                }

                if (piece.kind == CoTreeKind::Union)
                    colour_union(piece, k, offset);
                else
                    colour_join(piece, k, offset);
            }

        private:
            const Graph & _g;
            std::vector<Colour> _colours;

            auto colour_union(const Piece & piece, int k, Colour offset) -> void
            {
                const int m = static_cast<int>(piece.parts.size());
                if (k > m) {
                    // every component (connected) takes 1..n_i colours of its own
                    std::vector<int> share(m, 1);
                    int spare = k - m;
                    for (int i = 0; i < m && spare > 0; ++i) {
                        int extra = std::min(spare, piece.parts[i]->leaf_count() - 1);
                        share[i] += extra;
                        spare -= extra;
                    }
                    Colour next = offset;
                    for (int i = 0; i < m; ++i) {
                        k_colour(Piece::of(*piece.parts[i]), share[i], next);
                        next += share[i];
                    }
                    return;
                }

                // fewer colours than components: mono-colour components, never
                // mixing isolated vertices with larger components in one class
                std::vector<const CoTree *> isolated, big;
                for (auto p : piece.parts)
                    (p->kind == CoTreeKind::Leaf ? isolated : big).push_back(p);

                auto spread = [&](const std::vector<const CoTree *> & group, int colours, Colour first) {
                    for (std::size_t i = 0; i < group.size(); ++i)
                        paint(group[i], first + std::min<int>(static_cast<int>(i), colours - 1));
                };

                if (isolated.empty() || big.empty())
                    spread(piece.parts, k, offset + 1);
                else {
                    int for_isolated = std::max(1, k - static_cast<int>(big.size()));
                    spread(isolated, for_isolated, offset + 1);
                    spread(big, k - for_isolated, offset + 1 + for_isolated);
                }
            }

            auto colour_join(const Piece & piece, int k, Colour offset) -> void
            {
                const auto & parts = piece.parts;

                // one side a single part, the other side the join of the rest;
                // prefer a part that may take a single colour
                std::size_t pick = 0;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    if (Piece::of(*parts[i]).one_role_colourable()) {
                        pick = i;
                        break;
                    }

                std::vector<const CoTree *> rest;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    if (i != pick)
                        rest.push_back(parts[i]);

                auto a = Piece::of(*parts[pick]);
                auto b = Piece::of(CoTreeKind::Join, rest);
                int low_a = a.one_role_colourable() ? 1 : 2, low_b = b.one_role_colourable() ? 1 : 2;
                int from = std::max(low_a, k - b.size()), to = std::min(a.size(), k - low_b);

                if (from <= to) {
                    k_colour(a, from, offset);
                    k_colour(b, k - from, offset + from);
                    return;
                }

                if (k != 3 || ! a.has_isolated_and_edges() || ! b.has_isolated_and_edges())
                    throw InternalError("no admissible colour split for a join");

                // k = 3 over two disconnected sides that both mix isolated vertices
                // and edges: share one colour across the join
                Colour shared = offset + 1;
                Colour side[2] = {offset + 2, offset + 3};
                const Piece * sides[2] = {&a, &b};
                for (int s = 0; s < 2; ++s)
                    for (auto p : sides[s]->parts) {
                        if (p->kind == CoTreeKind::Leaf)
                            paint(p, side[s]);
                        else
                            split_component(p, side[s], shared);
                    }
            }
        };

        auto require_cotree(const Graph & g) -> CoTree
        {
            auto tree = build_cotree(g);
            if (! tree)
                throw InvalidInput("graph is not a cograph (it has an induced P4)");
            return std::move(*tree);
        }
    }

    auto two_role_colour(const Graph & g) -> RoleColouring
    {
        if (g.size() < 2)
            throw InvalidInput("2-role-colouring needs at least 2 vertices");
        auto tree = require_cotree(g);
        CographColourer colourer{g};
        colourer.two_colour(Piece::of(tree));

        RoleColouring rc{2, colourer.colours()};
        if (! validate(g, rc))
            throw InternalError("cograph 2-role-colouring failed validation");
        return rc;
    }

    auto k_role_colour(const Graph & g, int k) -> RoleColouring
    {
        if (k < 1 || k > g.size())
            throw InvalidInput("need 1 <= k <= n, got n = " + std::to_string(g.size()) + ", k = " + std::to_string(k));
        auto tree = require_cotree(g);
        if (k == 1 && ! is_one_role_colourable(g))
            throw InvalidInput("graph mixes isolated vertices and edges, so it has no 1-role-colouring");
        if (k == 2)
            return two_role_colour(g);

        CographColourer colourer{g};
        colourer.k_colour(Piece::of(tree), k, 0);

        RoleColouring rc{k, colourer.colours()};
        if (! validate(g, rc))
            throw InternalError("cograph " + std::to_string(k) + "-role-colouring failed validation");
        return rc;
    }

    auto cograph_k_colourable(const Graph & g, int k) -> bool
    {
        if (! is_cograph(g))
            throw InvalidInput("graph is not a cograph (it has an induced P4)");
        if (k < 1 || k > g.size())
            return false;
        return k > 1 || is_one_role_colourable(g);
    }
}
