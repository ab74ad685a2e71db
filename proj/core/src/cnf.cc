#include <rolecol/cnf.hh>
#include <rolecol/error.hh>
#include <rolecol/graph_io.hh>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <sstream>

namespace rolecol
{
    auto check_well_formed(const CnfFormula & f) -> void
    {
        if (f.num_vars < 0)
            throw InvalidInput("negative variable count");
        for (std::size_t j = 0; j < f.clauses.size(); ++j) {
            auto & clause = f.clauses[j];
            auto where = " in clause " + std::to_string(j + 1);
            if (clause.empty())
                throw InvalidInput("empty clause" + where);
            for (std::size_t i = 0; i < clause.size(); ++i) {
                Literal l = clause[i];
                if (l == 0 || std::abs(l) > f.num_vars)
                    throw InvalidInput("literal " + std::to_string(l) + " outside +-1.." + std::to_string(f.num_vars) + where);
                for (std::size_t p = 0; p < i; ++p) {
                    if (clause[p] == l)
                        throw InvalidInput("repeated literal " + std::to_string(l) + where);
                    if (clause[p] == -l)
                        throw InvalidInput("complementary literals on variable " + std::to_string(std::abs(l)) + where);
                }
            }
        }
    }

    auto occurrence_counts(const CnfFormula & f) -> std::vector<int>
    {
        std::vector<int> counts(f.num_vars, 0);
        for (auto & clause : f.clauses)
            for (Literal l : clause)
                ++counts[std::abs(l) - 1];
        return counts;
    }

    namespace
    {
        auto three_three(const CnfFormula & f, std::size_t smallest) -> bool
        {
            for (auto & clause : f.clauses)
                if (clause.size() < smallest || clause.size() > 3)
                    return false;
            auto counts = occurrence_counts(f);
            return std::all_of(counts.begin(), counts.end(), [](int c) { return c <= 3; });
        }
    }

    auto is_three_three_form(const CnfFormula & f) -> bool
    {
        return three_three(f, 1);
    }

    auto is_strict_three_three_form(const CnfFormula & f) -> bool
    {
        return three_three(f, 2);
    }

    auto literal_true(const Assignment & a, Literal l) -> bool
    {
        bool value = a.at(std::abs(l) - 1);
        return l > 0 ? value : ! value;
    }

    auto evaluate(const CnfFormula & f, const Assignment & a) -> bool
    {
        if (static_cast<int>(a.size()) != f.num_vars)
            throw InvalidInput("assignment has " + std::to_string(a.size()) + " values for " + std::to_string(f.num_vars) + " variables");
        return std::all_of(f.clauses.begin(), f.clauses.end(), [&](auto & clause) {
            return std::any_of(clause.begin(), clause.end(), [&](Literal l) { return literal_true(a, l); });
        });
    }

    auto solve_by_truth_table(const CnfFormula & f, int max_vars) -> std::optional<Assignment>
    {
        if (f.num_vars > max_vars)
            throw BudgetExceeded("truth table over " + std::to_string(f.num_vars) + " variables exceeds the limit of " + std::to_string(max_vars));

        Assignment a(f.num_vars);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.num_vars); ++bits) {
            for (int v = 0; v < f.num_vars; ++v)
                a[v] = (bits >> v) & 1;
            if (evaluate(f, a))
                return a;
        }
        return std::nullopt;
    }

    auto parse_dimacs_cnf(std::istream & in) -> CnfFormula
    {
        CnfFormula f;
        long long declared_clauses = -1;
        int header_line = 0, line_number = 0;
        std::vector<Literal> open;
        std::string text;

        while (std::getline(in, text)) {
            ++line_number;
            std::istringstream fields{text};
            std::string token;
            if (! (fields >> token) || token == "c")
                continue;
            if (token == "%")
                break;

            if (token == "p") {
                if (declared_clauses >= 0)
                    throw ParseError(line_number, "second 'p' header");
                std::string format;
                long long vars, clauses;
                if (! (fields >> format) || format != "cnf" || ! (fields >> vars >> clauses))
                    throw ParseError(line_number, "expected 'p cnf <vars> <clauses>'");
                if (std::string extra; fields >> extra)
                    throw ParseError(line_number, "unexpected trailing token '" + extra + "'");
                if (vars < 0 || clauses < 0)
                    throw ParseError(line_number, "negative count in header");
                f.num_vars = static_cast<int>(vars);
                declared_clauses = clauses;
                header_line = line_number;
                continue;
            }

            if (declared_clauses < 0)
                throw ParseError(line_number, "clause before 'p cnf' header");

            do {
                long long l;
                std::istringstream number{token};
                if (! (number >> l) || ! number.eof())
                    throw ParseError(line_number, "expected a literal, got '" + token + "'");
                if (l == 0) {
                    if (open.empty())
                        throw ParseError(line_number, "empty clause");
                    f.clauses.push_back(std::move(open));
                    open.clear();
                    continue;
                }
                if (std::llabs(l) > f.num_vars)
                    throw ParseError(line_number, "literal " + std::to_string(l) + " outside +-1.." + std::to_string(f.num_vars));
                if (std::find(open.begin(), open.end(), -l) != open.end())
                    throw ParseError(line_number, "clause holds both " + std::to_string(std::llabs(l)) + " and its negation");
                if (std::find(open.begin(), open.end(), l) == open.end())
                    open.push_back(static_cast<Literal>(l));
            } while (fields >> token);
        }

        if (declared_clauses < 0)
            throw ParseError(line_number + 1, "missing 'p cnf <vars> <clauses>' header");
        if (! open.empty())
            throw ParseError(line_number, "last clause is not terminated by 0");
        if (static_cast<long long>(f.clauses.size()) != declared_clauses)
            throw ParseError(header_line, "header declares " + std::to_string(declared_clauses) + " clauses, found " + std::to_string(f.clauses.size()));
        return f;
    }

    auto parse_dimacs_cnf(std::string_view text) -> CnfFormula
    {
        std::istringstream in{std::string(text)};
        return parse_dimacs_cnf(in);
    }

    auto read_dimacs_cnf_file(const std::string & path) -> CnfFormula
    {
        return parse_dimacs_cnf(std::string_view{read_text_file(path)});
    }

    auto write_dimacs_cnf(const CnfFormula & f) -> std::string
    {
        std::ostringstream out;
        out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
        for (auto & clause : f.clauses) {
            for (Literal l : clause)
                out << l << ' ';
            out << "0\n";
        }
        return out.str();
    }
}
