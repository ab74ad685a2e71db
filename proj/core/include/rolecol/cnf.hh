#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rolecol
{
    /// DIMACS-style literal: +v or -v for variable v in 1..num_vars.
    using Literal = int;

    /// values[v - 1] is the value of variable v.
    using Assignment = std::vector<bool>;

    struct CnfFormula
    {
        int num_vars = 0;
        std::vector<std::vector<Literal>> clauses;

        friend auto operator==(const CnfFormula &, const CnfFormula &) -> bool = default;
    };

    /// Throws InvalidInput on an empty clause, a literal outside
    /// +-1..num_vars, a repeated literal, or a clause holding x and -x.
    auto check_well_formed(const CnfFormula & f) -> void;

    /// occurrences[v - 1] counts clauses mentioning v with either sign.
    auto occurrence_counts(const CnfFormula & f) -> std::vector<int>;

    /// At most three literals per clause, at most three occurrences per
    /// variable. Unit clauses are allowed.
    auto is_three_three_form(const CnfFormula & f) -> bool;

    /// As above, but every clause has two or three literals.
    auto is_strict_three_three_form(const CnfFormula & f) -> bool;

    auto literal_true(const Assignment & a, Literal l) -> bool;
    auto evaluate(const CnfFormula & f, const Assignment & a) -> bool;

    /// First satisfying assignment in binary counting order (variable 1 is
    /// the low bit), or nothing. Throws BudgetExceeded above `max_vars`.
    auto solve_by_truth_table(const CnfFormula & f, int max_vars = 24) -> std::optional<Assignment>;

    /// `p cnf <vars> <clauses>` then 0-terminated clause lines; `c` lines
    /// are comments and a `%` line ends the input. Throws ParseError naming
    /// the offending line.
    auto parse_dimacs_cnf(std::istream & in) -> CnfFormula;
    auto parse_dimacs_cnf(std::string_view text) -> CnfFormula;
    auto read_dimacs_cnf_file(const std::string & path) -> CnfFormula;
    auto write_dimacs_cnf(const CnfFormula & f) -> std::string;
}
