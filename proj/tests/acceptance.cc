#include "support.hh"

#include <rolecol/cnf.hh>
#include <rolecol/cograph_solver.hh>
#include <rolecol/error.hh>
#include <rolecol/oracle.hh>
#include <rolecol/path_solver.hh>
#include <rolecol/sat_reduction.hh>
#include <rolecol/tree_solver.hh>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace rolecol;
using namespace rolecol::testing;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::string detail;
        std::vector<std::string> failures;

        auto fail(const std::string & why) -> void
        {
            pass = false;
            if (failures.size() < 10)
                failures.push_back(why);
        }
    };

    // Forcing-property tallies gathered while criteria 2-6 run.
    struct Forcing
    {
        std::uint64_t colourings = 0, tree_colourings = 0;
        int dangling_repeats = 0, half_path_excesses = 0;

        auto observe(const Graph & g, const RoleColouring & rc) -> void
        {
            if (! is_connected(g))
                return;
            ++colourings;
            dangling_repeats += dangling_rainbow_violations(g, rc);
            if (is_tree(g)) {
                ++tree_colourings;
                half_path_excesses += half_path_violations(g, rc);
            }
        }
    } forcing;

    using Clock = std::chrono::steady_clock;

    auto seconds_since(Clock::time_point start) -> double
    {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }

    auto describe(const Graph & g) -> std::string
    {
        std::ostringstream out;
        out << "n=" << g.size() << " E={";
        for (auto [u, v] : g.edges())
            out << u << "-" << v << " ";
        out << "}";
        return out.str();
    }

    auto oracle_self_consistency() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        auto table = stirling_table(12);
        int count_checks = 0;
        for (int n = 1; n <= 12; ++n)
            for (int k = 1; k <= n; ++k) {
                std::uint64_t count = 0;
                PartitionIterator it{n, k};
                do
                    ++count;
                while (it.next());
                ++count_checks;
                if (count != table[n][k] || stirling2(n, k) != table[n][k])
                    o.fail("partition count n=" + std::to_string(n) + " k=" + std::to_string(k));
            }

        std::mt19937_64 rng{20240611};
        std::vector<Graph> corpus;
        for (int n = 1; n <= 5; ++n)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
                corpus.push_back(graph_from_mask(n, mask));
        for (int i = 0; i < 300; ++i) {
            std::uniform_int_distribution<int> size(6, 12);
            std::uniform_real_distribution<double> density(0.15, 0.7);
            corpus.push_back(random_graph(size(rng), density(rng), rng));
        }

        int returned = 0, compared = 0;
        for (auto & g : corpus)
            for (int k = 1; k <= g.size(); ++k) {
                auto rc = solve_exact(g, k);
                if (rc) {
                    ++returned;
                    if (! naive_valid(g, rc->colours, k) || ! validate(g, *rc))
                        o.fail("invalid colouring returned for " + describe(g) + " k=" + std::to_string(k));
                }
                if (g.size() <= 6) {
                    ++compared;
                    if (rc.has_value() != naive_colourable(g, k))
                        o.fail("decision differs from k^n sweep for " + describe(g) + " k=" + std::to_string(k));
                }
            }

        double elapsed = seconds_since(start);
        if (elapsed >= 60)
            o.fail("took " + std::to_string(elapsed) + " s");
        std::ostringstream d;
        d << count_checks << " partition counts, " << returned << " returned colourings validated, " << compared << " decisions cross-checked, "
          << elapsed << " s";
        o.detail = d.str();
        return o;
    }

    auto path_family_equivalence() -> Outcome
    {
        Outcome o;
        int cases = 0, mismatches = 0;
        for (int n = 1; n <= 12; ++n) {
            auto p = path_graph(n);
            for (int k = 1; k <= n; ++k) {
                ++cases;
                bool formula = path_k_colourable(n, k);
                bool exact = solve_exact(p, k).has_value();
                if (formula != exact) {
                    ++mismatches;
                    o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
                auto witness = colour_path(n, k);
                if (witness.has_value() != formula || (witness && ! validate(p, witness->colouring)))
                    o.fail("witness n=" + std::to_string(n) + " k=" + std::to_string(k));
                for_each_valid_colouring(p, k, [&](const RoleColouring & rc) {
                    forcing.observe(p, rc);
                    return true;
                });
            }
        }
        for (int k = 1; k <= 6; ++k)
            if (! path_k_colourable(k, k) || ! path_k_colourable(2 * k, k))
                o.fail("s = 0 boundary at k=" + std::to_string(k));
        o.detail = std::to_string(cases) + " cases, " + std::to_string(mismatches) + " mismatches";
        return o;
    }

    struct TreeCase
    {
        Graph tree;
        int k;
    };
    std::vector<TreeCase> tree_cases_seen;

    auto tree_solver_equivalence() -> Outcome
    {
        Outcome o;
        auto start = Clock::now();
        constexpr int expected_classes[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47};
        int trees = 0, labelled = 0, constant_k = 0, constant_surplus = 0;
        auto compare = [&](const Graph & t) {
            const int n = t.size();
            for (int k = 1; k <= n; ++k) {
                bool exact = solve_exact(t, k).has_value();
                auto by_k = solve_tree_constant_k(t, k);
                ++constant_k;
                if (by_k.has_value() != exact || (by_k && ! validate(t, *by_k)))
                    o.fail("constant k: " + describe(t) + " k=" + std::to_string(k));
                if (n - k <= 3) {
                    auto by_surplus = solve_tree_constant_surplus(t, k);
                    ++constant_surplus;
                    if (by_surplus.has_value() != exact || (by_surplus && ! validate(t, *by_surplus)))
                        o.fail("constant surplus: " + describe(t) + " k=" + std::to_string(k));
                }
            }
        };

        // every labelled tree while that stays cheap, one per isomorphism class beyond
        constexpr int labelled_up_to = 7;
        constexpr int sampled_per_size = 20000;
        int sampled = 0;
        for (int n = 1; n <= 9; ++n) {
            auto classes = trees_up_to_isomorphism(n);
            if (static_cast<int>(classes.size()) != expected_classes[n])
                o.fail("tree classes on " + std::to_string(n) + " vertices: " + std::to_string(classes.size()));
            if (n <= labelled_up_to)
                for_each_labelled_tree(n, [&](const Graph & t) {
                    ++labelled;
                    compare(t);
                });
            else {
                for (auto & t : classes)
                    compare(t);
                // plus seeded random labellings so vertex ids vary at this size too
                std::mt19937_64 rng{static_cast<std::uint64_t>(n)};
                std::uniform_int_distribution<int> entry(0, n - 1);
                std::vector<int> sequence(n - 2);
                for (int i = 0; i < sampled_per_size; ++i) {
                    for (auto & x : sequence)
                        x = entry(rng);
                    ++sampled;
                    compare(decode_pruefer(sequence));
                }
            }
            for (auto & t : classes) {
                ++trees;
                for (int k = 1; k <= n; ++k)
                    tree_cases_seen.push_back({t, k});
            }
        }
        double elapsed = seconds_since(start);
        if (elapsed >= 600)
            o.fail("took " + std::to_string(elapsed) + " s");
        std::ostringstream d;
        d << trees << " trees up to isomorphism, " << labelled << " labelled trees on at most " << labelled_up_to << " vertices, " << sampled << " random labelled trees beyond, " << constant_k << " constant-k and " << constant_surplus << " constant-surplus decisions, " << elapsed << " s";
        o.detail = d.str();
        return o;
    }

    auto role_graph_structure() -> Outcome
    {
        Outcome o;
        std::uint64_t colourings = 0;
        int violations = 0;
        for (auto & [t, k] : tree_cases_seen)
            for_each_valid_colouring(t, k, [&](const RoleColouring & rc) {
                ++colourings;
                forcing.observe(t, rc);
                auto r = role_graph(t, rc);
                if (! r.is_tree_with_at_most_one_loop() || ! role_graph_bounds_ok(t, r)) {
                    ++violations;
                    o.fail(describe(t) + " k=" + std::to_string(k));
                }
                return true;
            });
        o.detail = std::to_string(colourings) + " tree colourings, " + std::to_string(violations) + " violations";
        return o;
    }

    auto cograph_totality() -> Outcome
    {
        Outcome o;
        int cographs = 0, colourings = 0;
        auto check = [&](const Graph & g) {
            ++cographs;
            for (int k = 2; k <= g.size(); ++k) {
                try {
                    auto rc = k_role_colour(g, k);
                    ++colourings;
                    if (rc.k != k || ! naive_valid(g, rc.colours, k))
                        o.fail("invalid: " + describe(g) + " k=" + std::to_string(k));
                    else
                        forcing.observe(g, rc);
                }
                catch (const std::exception & e) {
                    o.fail(describe(g) + " k=" + std::to_string(k) + ": " + e.what());
                }
            }
        };

        for (int n = 1; n <= 7; ++n)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
                auto g = graph_from_mask(n, mask);
                if (is_cograph(g))
                    check(g);
            }

        std::mt19937_64 rng{7};
        std::uniform_int_distribution<int> size(2, 30);
        for (int i = 0; i < 200; ++i)
            check(random_cograph(size(rng), rng));

        o.detail = std::to_string(cographs) + " cographs, " + std::to_string(colourings) + " colourings validated";
        return o;
    }

    auto all_small_formulas() -> std::vector<CnfFormula>
    {
        std::vector<std::vector<Literal>> clauses;
        for (int a : {-1, 0, 1})
            for (int b : {-2, 0, 2}) {
                std::vector<Literal> c;
                if (a)
                    c.push_back(a);
                if (b)
                    c.push_back(b);
                if (! c.empty())
                    clauses.push_back(c);
            }

        std::vector<CnfFormula> result;
        const int m = static_cast<int>(clauses.size());
        for (int i = 0; i < m; ++i) {
            result.push_back({2, {clauses[i]}});
            for (int j = i; j < m; ++j) {
                result.push_back({2, {clauses[i], clauses[j]}});
                for (int l = j; l < m; ++l)
                    result.push_back({2, {clauses[i], clauses[j], clauses[l]}});
            }
        }
        result.push_back({1, {{1}}});
        result.push_back({1, {{1}, {-1}}});
        return result;
    }

    // Every valid colouring of G'_phi must decode to a satisfying assignment.
    auto extract_all(const ReductionGraph & rg, Outcome & o) -> std::uint64_t
    {
        return for_each_valid_colouring(rg.graph, rg.k, [&](const RoleColouring & rc) {
            forcing.observe(rg.graph, rc);
            try {
                if (! evaluate(rg.formula, colouring_to_assignment(rg, rc)))
                    o.fail("extraction at k=" + std::to_string(rg.k) + " on " + write_dimacs_cnf(rg.formula));
            }
            catch (const std::exception & e) {
                o.fail("extraction at k=" + std::to_string(rg.k) + " on " + write_dimacs_cnf(rg.formula) + ": " + e.what());
            }
            return true;
        });
    }

    auto reduction_fidelity() -> Outcome
    {
        Outcome o;
        CnfFormula worked{2, {{1, 2}, {-2}}};
        auto rg = build_reduction_k2(worked);
        if (rg.graph.size() != 12)
            o.fail("worked example graph has " + std::to_string(rg.graph.size()) + " vertices");

        // drawn edges and white vertices of the worked example
        std::vector<std::pair<std::string, std::string>> drawn{{"a_1", "b_1"}, {"b_1", "C_1"}, {"a_2", "b_2"}, {"b_2", "C_2"}, {"x_1", "xbar_1"},
            {"x_1", "y_1"}, {"xbar_1", "y_1"}, {"x_2", "xbar_2"}, {"x_2", "y_2"}, {"xbar_2", "y_2"}, {"C_1", "x_1"}, {"C_1", "x_2"}, {"C_2", "xbar_2"}};
        std::vector<Edge> edges;
        for (auto & [a, b] : drawn)
            edges.emplace_back(rg.vertex(a), rg.vertex(b));
        if (Graph(12, edges) != rg.graph)
            o.fail("worked example edge set differs");

        std::set<std::string> white{"a_1", "a_2", "x_1", "xbar_2"};
        RoleColouring depicted{2, {}};
        for (auto & label : rg.labels)
            depicted.colours.push_back(white.contains(label) ? 1 : 2);
        if (! validate(rg.graph, depicted))
            o.fail("worked example colouring does not validate");
        else if (colouring_to_assignment(rg, depicted) != Assignment{true, false})
            o.fail("worked example extraction");
        else
            forcing.observe(rg.graph, depicted);

        std::uint64_t extracted = 0;
        int k2 = 0, satisfiable = 0;
        for (auto & f : all_small_formulas()) {
            if (! is_three_three_form(f))
                continue;
            ++k2;
            auto check = check_reduction_small(f, 2);
            satisfiable += check.formula_satisfiable;
            if (! check.agrees())
                o.fail("k=2 disagreement on " + write_dimacs_cnf(f));
            extracted += extract_all(build_reduction_k2(f), o);
        }

        int k3_checked = 0, k3_skipped = 0;
        std::vector<CnfFormula> k3_instances{{1, {{1}}}, {1, {{-1}}}, {1, {{1}, {-1}}}, {2, {{1, 2}}}, {2, {{1, 2}, {-2}}}};
        for (auto & f : k3_instances) {
            try {
                auto check = check_reduction_small(f, 3);
                ++k3_checked;
                if (! check.agrees())
                    o.fail("k=3 disagreement on " + write_dimacs_cnf(f));
                extracted += extract_all(build_reduction_k(f, 3), o);
            }
            catch (const BudgetExceeded &) {
                ++k3_skipped;
            }
        }
        if (k3_checked == 0)
            o.fail("no k=3 instance within the oracle budget");

        std::ostringstream d;
        d << "worked example ok, " << k2 << " formulas at k=2 (" << satisfiable << " satisfiable), " << k3_checked << " at k=3, " << extracted
          << " colourings read back";
        if (k3_skipped)
            d << " (" << k3_skipped << " over budget)";
        o.detail = d.str();
        return o;
    }

    auto forcing_properties() -> Outcome
    {
        Outcome o;
        if (forcing.dangling_repeats)
            o.fail(std::to_string(forcing.dangling_repeats) + " dangling paths repeat a colour");
        if (forcing.half_path_excesses)
            o.fail(std::to_string(forcing.half_path_excesses) + " same-colour tree paths exceed ceil(t/2) colours");
        if (forcing.colourings == 0)
            o.fail("no colourings observed");
        std::ostringstream d;
        d << forcing.colourings << " colourings of connected graphs (" << forcing.tree_colourings << " of trees), "
          << forcing.dangling_repeats + forcing.half_path_excesses << " violations";
        o.detail = d.str();
        return o;
    }
}

auto main() -> int
{
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"oracle self-consistency", oracle_self_consistency},
        {"path family equivalence", path_family_equivalence},
        {"tree solver equivalence", tree_solver_equivalence},
        {"role-graph structure", role_graph_structure},
        {"cograph totality", cograph_totality},
        {"reduction fidelity", reduction_fidelity},
        {"forcing properties", forcing_properties},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto & [name, run] = criteria[i];
        Outcome o;
        try {
            o = run();
        }
        catch (const std::exception & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << ": " << name << " (" << o.detail << ")" << std::endl;
        for (auto & f : o.failures)
            std::cout << "    " << f << std::endl;
        failed += ! o.pass;
    }
    return failed == 0 ? 0 : 1;
}
