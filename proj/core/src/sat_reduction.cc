#include <rolecol/error.hh>
#include <rolecol/oracle.hh>
#include <rolecol/sat_reduction.hh>

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <set>

namespace rolecol
{
    auto formula_graph(const CnfFormula & f) -> Graph
    {
        check_well_formed(f);
        const int m = static_cast<int>(f.clauses.size());
        std::vector<Edge> edges;
        for (int j = 0; j < m; ++j)
            for (Literal l : f.clauses[j])
                edges.emplace_back(j, m + std::abs(l) - 1);
        return Graph(m + f.num_vars, edges);
    }

    auto tovey_transform_traced(const CnfFormula & f, const ToveyOptions & options) -> ToveyResult
    {
        check_well_formed(f);

        ToveyResult result{f, {}};
        for (int v = 1; v <= f.num_vars; ++v)
            result.origin.push_back(v);

        // (clause, position) of every occurrence, grouped by variable
        std::vector<std::vector<std::pair<int, int>>> occurrences(f.num_vars);
        for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j)
            for (int p = 0; p < static_cast<int>(f.clauses[j].size()); ++p)
                occurrences[std::abs(f.clauses[j][p]) - 1].emplace_back(j, p);

        auto & out = result.formula;
        for (int v = 1; v <= f.num_vars; ++v) {
            auto order = occurrences[v - 1];
            if (order.size() <= 3)
                continue;

            if (options.planar)
                if (auto it = options.rotation.find(v); it != options.rotation.end()) {
                    std::vector<int> wanted = it->second, have;
                    for (auto [j, p] : order)
                        have.push_back(j);
                    auto sorted_wanted = wanted;
                    std::sort(sorted_wanted.begin(), sorted_wanted.end());
                    if (sorted_wanted != have)
                        throw InvalidInput("rotation for variable " + std::to_string(v) + " is not a permutation of its clauses");
                    std::vector<std::pair<int, int>> reordered;
                    for (int j : wanted)
                        reordered.push_back(*std::find_if(order.begin(), order.end(), [&](auto & o) { return o.first == j; }));
                    order = std::move(reordered);
                }

            // copy ids follow clause order, the first occurrence keeping v
            auto & by_clause = occurrences[v - 1];
            std::vector<int> copy_of(by_clause.size(), v);
            for (std::size_t i = 1; i < by_clause.size(); ++i) {
                copy_of[i] = ++out.num_vars;
                result.origin.push_back(v);
            }
            std::vector<int> copies;
            for (auto & o : order)
                copies.push_back(copy_of[std::find(by_clause.begin(), by_clause.end(), o) - by_clause.begin()]);

            for (std::size_t i = 0; i < order.size(); ++i) {
                auto [j, p] = order[i];
                auto & lit = out.clauses[j][p];
                lit = lit > 0 ? copies[i] : -copies[i];
            }
            for (std::size_t i = 0; i < copies.size(); ++i)
                out.clauses.push_back({copies[i], -copies[(i + 1) % copies.size()]});
        }
        return result;
    }

    auto tovey_transform(const CnfFormula & f, const ToveyOptions & options) -> CnfFormula
    {
        return tovey_transform_traced(f, options).formula;
    }

    auto project_assignment(const ToveyResult & t, const Assignment & a, int original_vars) -> Assignment
    {
        if (static_cast<int>(a.size()) != t.formula.num_vars)
            throw InvalidInput("assignment length does not match the transformed formula");
        return Assignment(a.begin(), a.begin() + original_vars);
    }

    auto ReductionGraph::vertex(const std::string & label) const -> Vertex
    {
        auto it = std::find(labels.begin(), labels.end(), label);
        if (it == labels.end())
            throw InvalidInput("no vertex labelled '" + label + "'");
        return static_cast<Vertex>(it - labels.begin());
    }

    auto ReductionGraph::label_census() const -> std::map<std::string, int>
    {
        std::map<std::string, int> census;
        for (auto & label : labels)
            ++census[label.substr(0, label.find('_'))];
        return census;
    }

    namespace
    {
        struct Builder
        {
            ReductionGraph rg;
            std::vector<Edge> edges;

            auto add(std::string label) -> Vertex
            {
                rg.labels.push_back(std::move(label));
                return static_cast<Vertex>(rg.labels.size() - 1);
            }

            auto chain(const std::vector<Vertex> & vs) -> void
            {
                for (std::size_t i = 1; i < vs.size(); ++i)
                    edges.emplace_back(vs[i - 1], vs[i]);
            }

            // Per clause (k >= 3) or per variable (k = 2) the vertex that may
            // link its formula-graph component to the next one.
            std::vector<Vertex> clause_link, variable_link;

            auto finish() -> ReductionGraph
            {
                auto & f = rg.formula;
                const int m = static_cast<int>(f.clauses.size());
                for (int j = 0; j < m; ++j)
                    for (Literal l : f.clauses[j])
                        edges.emplace_back(l > 0 ? rg.positive_literal[l - 1] : rg.negative_literal[-l - 1], rg.clause_vertex[j]);

                // Components of the clause/variable graph are chained by one
                // edge between same-coloured vertices of the canonical colouring.
                Vertex previous = -1;
                for (auto & component : connected_components(formula_graph(f))) {
                    if (component.front() >= m)
                        continue;
                    Vertex link = -1;
                    if (! clause_link.empty())
                        link = clause_link[component.front()];
                    else
                        for (Vertex w : component)
                            if (w >= m) {
                                link = variable_link[w - m];
                                break;
                            }
                    if (previous >= 0)
                        edges.emplace_back(previous, link);
                    previous = link;
                }
                rg.graph = Graph(static_cast<int>(rg.labels.size()), edges);
                return std::move(rg);
            }
        };

        auto start(const CnfFormula & f, int k) -> Builder
        {
            check_well_formed(f);
            if (f.clauses.empty())
                throw InvalidInput("the formula needs at least one clause");
            if (! is_three_three_form(f))
                throw InvalidInput("the formula is not in 3,3-form (clauses of at most 3 literals, variables occurring at most 3 times)");
            Builder b;
            b.rg.k = k;
            b.rg.formula = f;
            b.rg.positive_literal.assign(f.num_vars, -1);
            b.rg.negative_literal.assign(f.num_vars, -1);
            return b;
        }

        auto index(const char * stem, int i) -> std::string
        {
            return std::string(stem) + "_" + std::to_string(i);
        }

        auto index(const char * stem, int i, int t) -> std::string
        {
            return index(stem, i) + "_" + std::to_string(t);
        }
    }

    auto build_reduction_k2(const CnfFormula & f) -> ReductionGraph
    {
        auto b = start(f, 2);
        for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
            auto a = b.add(index("a", j)), bj = b.add(index("b", j)), c = b.add(index("C", j));
            b.chain({a, bj, c});
            b.rg.clause_vertex.push_back(c);
            if (j == 1)
                b.rg.anchor = a;
        }

        auto counts = occurrence_counts(f);
        for (int i = 1; i <= f.num_vars; ++i) {
            if (counts[i - 1] == 0)
                continue;
            auto x = b.add(index("x", i)), xbar = b.add(index("xbar", i)), y = b.add(index("y", i));
            b.chain({x, xbar, y, x});
            b.rg.positive_literal[i - 1] = x;
            b.rg.negative_literal[i - 1] = xbar;
            b.variable_link.resize(f.num_vars, -1);
            b.variable_link[i - 1] = y;
        }
        return b.finish();
    }

    auto build_reduction_k(const CnfFormula & f, int k) -> ReductionGraph
    {
        if (k < 3)
            throw InvalidInput("the dangling-path construction needs k >= 3");
        auto b = start(f, k);
        for (int j = 1; j <= static_cast<int>(f.clauses.size()); ++j) {
            std::vector<Vertex> path;
            for (int t = 1; t <= k; ++t)
                path.push_back(b.add(index("v", j, t)));
            auto u1 = b.add(index("u", j, 1)), u2 = b.add(index("u", j, 2)), c = b.add(index("C", j));
            path.push_back(c);
            b.chain(path);
            Vertex top = path[k - 1];
            b.chain({u1, top});
            b.chain({u1, c});
            b.chain({u2, top});
            b.chain({u2, c});
            b.rg.clause_vertex.push_back(c);
            b.clause_link.push_back(u1);
            if (j == 1)
                b.rg.anchor = path.front();
        }

        auto counts = occurrence_counts(f);
        for (int i = 1; i <= f.num_vars; ++i) {
            if (counts[i - 1] == 0)
                continue;
            std::vector<Vertex> literal_path{b.add(index("x", i))};
            for (int t = 1; t <= 2 * k - 4; ++t)
                literal_path.push_back(b.add(index("z", i, t)));
            literal_path.push_back(b.add(index("xbar", i)));
            b.chain(literal_path);

            std::vector<Vertex> tail;
            for (int t = 1; t <= k - 1; ++t)
                tail.push_back(b.add(index("y", i, t)));
            b.chain(tail);
            b.chain({literal_path.front(), tail.back(), literal_path.back()});

            b.rg.positive_literal[i - 1] = literal_path.front();
            b.rg.negative_literal[i - 1] = literal_path.back();
        }
        return b.finish();
    }

    auto build_reduction(const CnfFormula & f, int k) -> ReductionGraph
    {
        return k == 2 ? build_reduction_k2(f) : build_reduction_k(f, k);
    }

    auto assignment_to_colouring(const ReductionGraph & rg, const Assignment & a) -> RoleColouring
    {
        if (! evaluate(rg.formula, a))
            throw InvalidInput("the assignment does not satisfy the formula");

        const int k = rg.k;
        RoleColouring rc{k, std::vector<Colour>(rg.graph.size(), 0)};
        auto & colour = rc.colours;

        if (k == 2) {
            constexpr Colour red = 1, blue = 2;
            for (Vertex v = 0; v < rg.graph.size(); ++v)
                colour[v] = rg.labels[v].starts_with("a_") ? red : blue;
            for (int i = 0; i < rg.formula.num_vars; ++i)
                if (rg.positive_literal[i] >= 0)
                    colour[a[i] ? rg.positive_literal[i] : rg.negative_literal[i]] = red;
            return rc;
        }

        for (Vertex v = 0; v < rg.graph.size(); ++v) {
            auto & label = rg.labels[v];
            auto last = std::stoi(label.substr(label.rfind('_') + 1));
            if (label.starts_with("v_") || label.starts_with("y_"))
                colour[v] = last;
            else if (label.starts_with("u_"))
                colour[v] = k;
            else if (label.starts_with("C_"))
                colour[v] = k - 1;
        }

        // literal path x, z_1 .. z_{2k-4}, xbar when x is true
        std::vector<Colour> sequence;
        for (Colour c = k - 2; c >= 1; --c)
            sequence.push_back(c);
        for (Colour c = 2; c <= k; ++c)
            sequence.push_back(c);
        sequence.push_back(k);

        for (int i = 0; i < rg.formula.num_vars; ++i) {
            if (rg.positive_literal[i] < 0)
                continue;
            std::vector<Vertex> path{rg.positive_literal[i]};
            for (int t = 1; t <= 2 * k - 4; ++t)
                path.push_back(rg.vertex(index("z", i + 1, t)));
            path.push_back(rg.negative_literal[i]);
            if (! a[i])
                std::reverse(path.begin(), path.end());
            for (std::size_t p = 0; p < path.size(); ++p)
                colour[path[p]] = sequence[p];
        }
        return rc;
    }

    auto colouring_to_assignment(const ReductionGraph & rg, const RoleColouring & rc) -> Assignment
    {
        if (rc.k != rg.k)
            throw InvalidInput("colouring uses " + std::to_string(rc.k) + " colours, the reduction was built for " + std::to_string(rg.k));
        if (! validate(rg.graph, rc))
            throw InvalidInput("not a valid role colouring of the reduction graph");

        Colour marker = rg.k == 2 ? rc.colours[rg.anchor] : rc.colours[rg.vertex(index("v", 1, rg.k - 2))];
        Assignment a(rg.formula.num_vars, false);
        for (int i = 0; i < rg.formula.num_vars; ++i)
            if (rg.positive_literal[i] >= 0)
                a[i] = rc.colours[rg.positive_literal[i]] == marker;

        if (! evaluate(rg.formula, a))
            throw InternalError("extracted assignment does not satisfy the formula");
        return a;
    }

    auto reduction_labels_json(const ReductionGraph & rg) -> std::string
    {
        nlohmann::ordered_json j;
        j["k"] = rg.k;
        j["vertex_labels"] = nlohmann::ordered_json::object();
        for (std::size_t v = 0; v < rg.labels.size(); ++v)
            j["vertex_labels"][std::to_string(v + 1)] = rg.labels[v];
        return j.dump();
    }

    auto check_reduction_small(const CnfFormula & f, int k, std::uint64_t max_partitions) -> ReductionCheck
    {
        auto rg = build_reduction(f, k);
        const int n = rg.graph.size();
        if (n > oracle_max_vertices || stirling2(n, k) > max_partitions)
            throw BudgetExceeded("reduction graph on " + std::to_string(n) + " vertices is beyond the oracle budget for k = " + std::to_string(k));

        ReductionCheck check;
        check.vertices = n;
        check.formula_satisfiable = solve_by_truth_table(f).has_value();
        check.graph_colourable = solve_exact(rg.graph, k).has_value();
        return check;
    }

    auto verify_reduction_small(const CnfFormula & f, int k, std::uint64_t max_partitions) -> bool
    {
        return check_reduction_small(f, k, max_partitions).agrees();
    }
}
