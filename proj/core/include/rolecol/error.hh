#pragma once

#include <stdexcept>
#include <string>

namespace rolecol
{
    /// Malformed arguments to a library call: out-of-range vertices, colours
    /// outside 1..k, a non-tree handed to a tree solver, and so on.
    class InvalidInput : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Text input that could not be parsed. Carries the 1-based line number.
    class ParseError : public std::runtime_error
    {
    public:
        ParseError(int line, const std::string & message) :
            std::runtime_error("line " + std::to_string(line) + ": " + message),
            _line(line)
        {
        }

        auto line() const -> int { return _line; }

    private:
        int _line;
    };

    /// A problem too big for an exhaustive routine's configured budget.
    class BudgetExceeded : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// An invariant the algorithms rely on turned out false at run time.
    class InternalError : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };
}
