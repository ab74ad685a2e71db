#pragma once

#include <rolecol/graph.hh>
#include <rolecol/role_check.hh>

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace rolecol
{
    /// DIMACS-col: `c` comment lines, one `p edge <n> <m>` header, then m
    /// `e <u> <v>` lines with 1-based endpoints. n must be at least 1.
    /// Throws ParseError naming the offending line.
    auto parse_dimacs_graph(std::istream & in) -> Graph;
    auto parse_dimacs_graph(std::string_view text) -> Graph;
    auto read_dimacs_graph_file(const std::string & path) -> Graph;

    /// Header plus one `e` line per edge in Graph::edges() order.
    auto write_dimacs_graph(const Graph & g) -> std::string;

    struct DotStyle
    {
        const RoleColouring * colouring = nullptr;
        const std::map<Vertex, std::string> * labels = nullptr;
    };

    auto write_dot(const Graph & g, const DotStyle & style = {}) -> std::string;
    auto write_dot(const RoleGraph & r) -> std::string;

    /// {"k": K, "colours": [c1, ..., cn]}
    auto colouring_to_json(const RoleColouring & rc) -> std::string;
    auto parse_colouring_json(std::string_view text) -> RoleColouring;
    auto read_colouring_file(const std::string & path) -> RoleColouring;

    /// {"k": K, "edges": [[c, d], ...], "loops": [c, ...]}
    auto role_graph_to_json(const RoleGraph & r) -> std::string;

    auto read_text_file(const std::string & path) -> std::string;
}
