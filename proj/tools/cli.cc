#include "cli.hh"

#include <rolecol/cograph_solver.hh>
#include <rolecol/error.hh>
#include <rolecol/graph_io.hh>
#include <rolecol/oracle.hh>
#include <rolecol/path_solver.hh>
#include <rolecol/sat_reduction.hh>
#include <rolecol/tree_solver.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace rolecol::cli
{
    namespace
    {
        constexpr int default_oracle_limit = 13;

        auto write_file(const std::string & path, const std::string & contents) -> void
        {
            std::ofstream file{path, std::ios::binary};
            if (! (file << contents))
                throw InvalidInput("cannot write '" + path + "'");
        }

        auto require(bool condition, const std::string & message) -> void
        {
            if (! condition)
                throw InvalidInput(message);
        }

        auto brute_force(const Graph & g, int k, std::ostream & err) -> std::optional<RoleColouring>
        {
            if (g.size() > oracle_max_vertices)
                throw BudgetExceeded("exhaustive search handles at most " + std::to_string(oracle_max_vertices) + " vertices");
            if (g.size() > oracle_limit())
                err << "warning: exhaustive search on " << g.size() << " vertices may take very long\n";
            return solve_exact(g, k);
        }

        auto choose_method(const GraphClass & cls, int n) -> std::string
        {
            if (cls.is_path)
                return "path";
            if (cls.is_tree)
                return "tree";
            if (cls.is_cograph)
                return "cograph";
            if (n > oracle_limit())
                throw BudgetExceeded("no structured solver applies and n = " + std::to_string(n) + " exceeds the brute-force limit of "
                    + std::to_string(oracle_limit()) + "; use --method brute or raise ROLECOL_ORACLE_LIMIT");
            return "brute";
        }

        auto solve(const Graph & g, int k, const std::string & requested, std::ostream & out, std::ostream & err) -> int
        {
            const int n = g.size();
            require(k >= 1, "--k must be at least 1");
            if (k > n) {
                err << "no " << k << "-role-colouring: the graph has only " << n << " vertices\n";
                return negative;
            }

            auto cls = classify(g);
            auto method = requested == "auto" ? choose_method(cls, n) : requested;
            err << "method: " << method << '\n';

            std::optional<RoleColouring> rc;
            if (method == "path") {
                require(cls.is_path, "--method path needs a path graph, got " + std::string(to_string(cls.kind)));
                if (auto witness = colour_path(n, k)) {
                    auto order = path_order(g);
                    RoleColouring mapped{k, std::vector<Colour>(n)};
                    for (int i = 0; i < n; ++i)
                        mapped.colours[order[i]] = witness->colouring.colours[i];
                    rc = std::move(mapped);
                }
            }
            else if (method == "tree") {
                require(cls.is_tree, "--method tree needs a tree, got " + std::string(to_string(cls.kind)));
                rc = solve_tree(g, k);
            }
            else if (method == "cograph") {
                require(cls.is_cograph, "--method cograph needs a cograph, got " + std::string(to_string(cls.kind)));
                if (cograph_k_colourable(g, k))
                    rc = k_role_colour(g, k);
            }
            else
                rc = brute_force(g, k, err);

            if (! rc) {
                err << "no " << k << "-role-colouring\n";
                return negative;
            }
            if (! validate(g, *rc))
                throw InternalError("solver returned an invalid colouring");
            out << colouring_to_json(*rc) << '\n';
            return success;
        }

        // first reason a colouring fails, empty if valid
        auto explain(const Graph & g, const RoleColouring & rc) -> std::string
        {
            if (validate(g, rc))
                return {};
            std::vector<Vertex> first(rc.k + 1, -1);
            for (Vertex v = 0; v < g.size(); ++v)
                if (first[rc.colours[v]] < 0)
                    first[rc.colours[v]] = v;
            for (Colour c = 1; c <= rc.k; ++c)
                if (first[c] < 0)
                    return "colour " + std::to_string(c) + " is unused";
            auto sets = neighbourhood_colour_sets(g, rc);
            for (Vertex v = 0; v < g.size(); ++v) {
                Vertex u = first[rc.colours[v]];
                if (sets[u] != sets[v])
                    return "vertices " + std::to_string(u + 1) + " and " + std::to_string(v + 1) + " share colour " + std::to_string(rc.colours[v])
                        + " but see different colour sets";
            }
            return "invalid";
        }

        auto load_colouring(const std::string & path, const Graph & g) -> RoleColouring
        {
            auto rc = read_colouring_file(path);
            require(static_cast<int>(rc.colours.size()) == g.size(),
                "colouring has " + std::to_string(rc.colours.size()) + " entries for " + std::to_string(g.size()) + " vertices");
            return rc;
        }

        struct Prepared
        {
            CnfFormula original;
            ToveyResult transformed;
            bool applied = false;
        };

        auto prepare_formula(const std::string & path, bool planar) -> Prepared
        {
            Prepared p;
            p.original = read_dimacs_cnf_file(path);
            check_well_formed(p.original);
            p.transformed = ToveyResult{p.original, {}};
            for (int v = 1; v <= p.original.num_vars; ++v)
                p.transformed.origin.push_back(v);
            if (! is_three_three_form(p.original)) {
                p.transformed = tovey_transform_traced(p.original, ToveyOptions{planar, {}});
                p.applied = true;
            }
            require(is_three_three_form(p.transformed.formula), "every clause must have at most 3 literals");
            return p;
        }

        auto selftest(std::ostream & out, std::ostream & err) -> int
        {
            int checks = 0, failures = 0;
            auto check = [&](bool ok, const std::string & what) {
                ++checks;
                if (! ok) {
                    ++failures;
                    err << "selftest failed: " << what << '\n';
                }
            };

            for (int n = 1; n <= 8; ++n)
                for (int k = 1; k <= n; ++k)
                    check(path_k_colourable(n, k) == solve_exact(path_graph(n), k).has_value(), "path n=" + std::to_string(n) + " k=" + std::to_string(k));

            auto c4 = cycle_graph(4);
            for (int k = 1; k <= 4; ++k)
                check(validate(c4, k_role_colour(c4, k)), "cograph C4 k=" + std::to_string(k));

            CnfFormula f{2, {{1, 2}, {-2}}};
            auto rg = build_reduction_k2(f);
            auto rc = assignment_to_colouring(rg, {true, false});
            check(rg.graph.size() == 12 && validate(rg.graph, rc), "reduction of (x1 or x2) and not x2");
            check(colouring_to_assignment(rg, rc) == Assignment{true, false}, "assignment round trip");

            auto p4 = path_graph(4);
            check(solve_tree(p4, 2).has_value() && ! solve_tree(p4, 3).has_value(), "tree solver on the path with 4 vertices");

            out << "selftest: " << checks - failures << "/" << checks << " checks passed\n";
            return failures == 0 ? success : negative;
        }
    }

    auto oracle_limit() -> int
    {
        if (auto text = std::getenv("ROLECOL_ORACLE_LIMIT")) {
            int value = 0;
            std::string_view view{text};
            auto [end, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
            if (ec == std::errc{} && end == view.data() + view.size() && value >= 1)
                return value;
        }
        return default_oracle_limit;
    }

    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Role colouring solvers, exhaustive oracle and SAT reductions", "rolecol"};
        app.require_subcommand(1);

        int k = 0;
        std::string input, colouring, method = "auto", cnf, out_path, graph_path;
        bool dot = false, all_k = false, planar = false;
        std::optional<int> oracle_k;

        auto solve_cmd = app.add_subcommand("solve", "Find a k-role-colouring");
        solve_cmd->add_option("--k", k, "number of colours")->required();
        solve_cmd->add_option("--input", input, "DIMACS graph file")->required();
        solve_cmd->add_option("--method", method, "solver")->check(CLI::IsMember({"auto", "brute", "path", "tree", "cograph"}));

        auto verify_cmd = app.add_subcommand("verify", "Check a colouring against a graph");
        verify_cmd->add_option("--input", input, "DIMACS graph file")->required();
        verify_cmd->add_option("--colouring", colouring, "colouring JSON")->required();

        auto rolegraph_cmd = app.add_subcommand("rolegraph", "Print the role graph of a valid colouring");
        rolegraph_cmd->add_option("--input", input, "DIMACS graph file")->required();
        rolegraph_cmd->add_option("--colouring", colouring, "colouring JSON")->required();
        rolegraph_cmd->add_flag("--dot", dot, "emit DOT instead of JSON");

        auto oracle_cmd = app.add_subcommand("oracle", "Exhaustive search");
        oracle_cmd->add_option("--input", input, "DIMACS graph file")->required();
        auto k_opt = oracle_cmd->add_option("--k", oracle_k, "number of colours");
        oracle_cmd->add_flag("--all-k", all_k, "list every k with a k-role-colouring")->excludes(k_opt);

        auto reduce_cmd = app.add_subcommand("reduce", "Build the reduction graph of a CNF formula");
        reduce_cmd->add_option("--cnf", cnf, "DIMACS CNF file")->required();
        reduce_cmd->add_option("--k", k, "number of colours")->required()->check(CLI::Range(2, 64));
        reduce_cmd->add_option("--out", out_path, "output graph file")->required();
        reduce_cmd->add_flag("--planar-tovey", planar, "split variables around a cycle when more than 3 occurrences");

        auto extract_cmd = app.add_subcommand("extract", "Read a satisfying assignment off a colouring of a reduction graph");
        extract_cmd->add_option("--cnf", cnf, "DIMACS CNF file")->required();
        extract_cmd->add_option("--k", k, "number of colours")->required()->check(CLI::Range(2, 64));
        extract_cmd->add_option("--graph", graph_path, "reduction graph file")->required();
        extract_cmd->add_option("--colouring", colouring, "colouring JSON")->required();
        extract_cmd->add_flag("--planar-tovey", planar, "as given to reduce");

        auto selftest_cmd = app.add_subcommand("selftest", "Run built-in sanity checks");

        std::vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::ParseError & e) {
            return app.exit(e, out, err) == 0 ? success : usage;
        }

        try {
            if (solve_cmd->parsed())
                return solve(read_dimacs_graph_file(input), k, method, out, err);

            if (verify_cmd->parsed()) {
                auto g = read_dimacs_graph_file(input);
                auto reason = explain(g, load_colouring(colouring, g));
                out << (reason.empty() ? "valid" : "invalid: " + reason) << '\n';
                return reason.empty() ? success : negative;
            }

            if (rolegraph_cmd->parsed()) {
                auto g = read_dimacs_graph_file(input);
                auto rc = load_colouring(colouring, g);
                if (auto reason = explain(g, rc); ! reason.empty()) {
                    err << "invalid colouring: " << reason << '\n';
                    return negative;
                }
                auto r = role_graph(g, rc);
                out << (dot ? write_dot(r) : role_graph_to_json(r) + "\n");
                return success;
            }

            if (oracle_cmd->parsed()) {
                auto g = read_dimacs_graph_file(input);
                if (oracle_k) {
                    require(*oracle_k >= 1, "--k must be at least 1");
                    auto rc = *oracle_k <= g.size() ? brute_force(g, *oracle_k, err) : std::nullopt;
                    if (! rc) {
                        err << "no " << *oracle_k << "-role-colouring\n";
                        return negative;
                    }
                    out << colouring_to_json(*rc) << '\n';
                    return success;
                }
                if (g.size() > oracle_max_vertices)
                    throw BudgetExceeded("exhaustive search handles at most " + std::to_string(oracle_max_vertices) + " vertices");
                if (g.size() > oracle_limit())
                    err << "warning: exhaustive search on " << g.size() << " vertices may take very long\n";
                nlohmann::ordered_json j;
                j["k_values"] = solvable_k_set(g);
                out << j.dump() << '\n';
                return success;
            }

            if (reduce_cmd->parsed()) {
                auto p = prepare_formula(cnf, planar);
                auto rg = build_reduction(p.transformed.formula, k);
                write_file(out_path, write_dimacs_graph(rg.graph));
                write_file(out_path + ".labels.json", reduction_labels_json(rg) + "\n");
                nlohmann::ordered_json j;
                j["k"] = k;
                j["vertices"] = rg.graph.size();
                j["edges"] = rg.graph.edge_count();
                j["tovey"] = p.applied;
                out << j.dump() << '\n';
                return success;
            }

            if (extract_cmd->parsed()) {
                auto p = prepare_formula(cnf, planar);
                auto rg = build_reduction(p.transformed.formula, k);
                auto g = read_dimacs_graph_file(graph_path);
                require(g == rg.graph, "graph is not the reduction graph of this formula for k = " + std::to_string(k));
                auto rc = load_colouring(colouring, g);
                if (auto reason = explain(g, rc); ! reason.empty()) {
                    err << "invalid colouring: " << reason << '\n';
                    return negative;
                }
                auto a = project_assignment(p.transformed, colouring_to_assignment(rg, rc), p.original.num_vars);
                nlohmann::ordered_json values = nlohmann::ordered_json::object();
                for (int v = 1; v <= p.original.num_vars; ++v)
                    values["x" + std::to_string(v)] = static_cast<bool>(a[v - 1]);
                nlohmann::ordered_json j;
                j["assignment"] = values;
                out << j.dump() << '\n';
                return success;
            }

            if (selftest_cmd->parsed())
                return selftest(out, err);
        }
        catch (const ParseError & e) {
            err << "parse error: " << e.what() << '\n';
            return usage;
        }
        catch (const InvalidInput & e) {
            err << "error: " << e.what() << '\n';
            return usage;
        }
        catch (const BudgetExceeded & e) {
            err << "refused: " << e.what() << '\n';
            return usage;
        }
        catch (const InternalError & e) {
            err << "internal error: " << e.what() << '\n';
            return usage;
        }
        return usage;
    }
}
