#pragma once

#include <rolecol/cnf.hh>
#include <rolecol/graph.hh>
#include <rolecol/role_check.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rolecol
{
    /// Bipartite clause/variable incidence graph. Clause j is vertex j,
    /// variable v is vertex num_clauses + v - 1.
    auto formula_graph(const CnfFormula & f) -> Graph;

    struct ToveyOptions
    {
        /// Route each split variable's copies around a cycle whose order is
        /// taken from `rotation` (clause indices in clockwise order) instead
        /// of the order of occurrence.
        bool planar = false;
        std::map<int, std::vector<int>> rotation;
    };

    struct ToveyResult
    {
        CnfFormula formula;
        /// origin[v - 1] is the input variable that output variable v copies.
        std::vector<int> origin;
    };

    /// Each variable occurring j > 3 times is split into j copies, one per
    /// occurrence (the first copy keeps the original id), chained by the
    /// clauses (x_i or not x_{i+1}) and (x_j or not x_1).
    auto tovey_transform_traced(const CnfFormula & f, const ToveyOptions & options = {}) -> ToveyResult;
    auto tovey_transform(const CnfFormula & f, const ToveyOptions & options = {}) -> CnfFormula;

    /// Maps an assignment of the transformed formula back to the input's
    /// variables (the value of each variable's first copy).
    auto project_assignment(const ToveyResult & t, const Assignment & a, int original_vars) -> Assignment;

    /// Graph G'_phi for one formula and colour count, plus the vertex roles.
    struct ReductionGraph
    {
        Graph graph;
        int k = 0;
        CnfFormula formula;
        std::vector<std::string> labels;          // per vertex
        std::vector<Vertex> positive_literal;     // per variable, -1 if unused
        std::vector<Vertex> negative_literal;     // per variable, -1 if unused
        std::vector<Vertex> clause_vertex;        // per clause
        /// a_1 for k = 2, v_{1,1} for k >= 3.
        Vertex anchor = -1;

        auto vertex(const std::string & label) const -> Vertex;
        auto label_census() const -> std::map<std::string, int>;
    };

    /// Per clause the pendant path a_j - b_j - C_j; per occurring variable
    /// the triangle x_i, xbar_i, y_i; literal vertices adjacent to the
    /// clauses that contain them. When the clause/variable graph of f is
    /// disconnected, consecutive components (ordered by smallest clause) are
    /// joined by an edge between the y vertices of their first variables, so
    /// G'_phi is always connected. Throws InvalidInput unless f is in
    /// 3,3-form with at least one clause.
    auto build_reduction_k2(const CnfFormula & f) -> ReductionGraph;

    /// Per clause C_j a dangling path v_{j,1..k} ending at C_j and two
    /// vertices u_{j,1}, u_{j,2} each in a triangle with v_{j,k}, C_j. Per
    /// occurring variable x_i and xbar_i joined by a path through
    /// z_{i,1..2k-4}, and an apex y_{i,k-1} adjacent to both literals
    /// carrying the dangling path y_{i,1..k-1}. Components of the
    /// clause/variable graph are chained through u_{j,1} of their first
    /// clauses.
    auto build_reduction_k(const CnfFormula & f, int k) -> ReductionGraph;

    auto build_reduction(const CnfFormula & f, int k) -> ReductionGraph;

    /// The canonical colouring of G'_phi for a satisfying assignment.
    /// Throws InvalidInput if the assignment does not satisfy the formula.
    auto assignment_to_colouring(const ReductionGraph & rg, const Assignment & a) -> RoleColouring;

    /// Reads a truth assignment off a valid k-role-colouring. For k = 2 the
    /// colour of a_1 plays "red"; for k >= 3 the colour of v_{1,k-2} marks
    /// true literals. Throws InvalidInput on an invalid colouring and
    /// InternalError if the extracted assignment fails to satisfy phi.
    auto colouring_to_assignment(const ReductionGraph & rg, const RoleColouring & rc) -> Assignment;

    /// Sidecar: {"k": K, "vertex_labels": {"1": "a_1", ...}} (1-based ids).
    auto reduction_labels_json(const ReductionGraph & rg) -> std::string;

    struct ReductionCheck
    {
        bool formula_satisfiable = false;
        bool graph_colourable = false;
        int vertices = 0;

        auto agrees() const -> bool { return formula_satisfiable == graph_colourable; }
    };

    /// Truth table versus oracle on G'_phi. Throws BudgetExceeded when the
    /// oracle's search space S(n, k) exceeds `max_partitions`.
    auto check_reduction_small(const CnfFormula & f, int k, std::uint64_t max_partitions = 200'000'000) -> ReductionCheck;
    auto verify_reduction_small(const CnfFormula & f, int k, std::uint64_t max_partitions = 200'000'000) -> bool;
}
