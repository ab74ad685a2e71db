#include <rolecol/error.hh>
#include <rolecol/graph_io.hh>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace rolecol
{
    namespace
    {
        using Json = nlohmann::ordered_json;

        auto parse_int(std::istringstream & fields, int line, const char * what) -> long long
        {
            long long value;
            if (! (fields >> value))
                throw ParseError(line, std::string("expected ") + what);
            return value;
        }

        auto expect_end(std::istringstream & fields, int line) -> void
        {
            std::string extra;
            if (fields >> extra)
                throw ParseError(line, "unexpected trailing token '" + extra + "'");
        }
    }

    auto parse_dimacs_graph(std::istream & in) -> Graph
    {
        std::string text;
        int line_number = 0;
        long long n = -1, m = -1;
        int header_line = 0;
        std::vector<Edge> edges;

        while (std::getline(in, text)) {
            ++line_number;
            std::istringstream fields{text};
            std::string tag;
            if (! (fields >> tag) || tag == "c")
                continue;

            if (tag == "p") {
                if (n >= 0)
                    throw ParseError(line_number, "second 'p' header");
                std::string format;
                if (! (fields >> format) || (format != "edge" && format != "col"))
                    throw ParseError(line_number, "expected 'p edge <n> <m>'");
                n = parse_int(fields, line_number, "vertex count");
                m = parse_int(fields, line_number, "edge count");
                expect_end(fields, line_number);
                if (n < 1)
                    throw ParseError(line_number, "vertex count must be at least 1");
                if (m < 0)
                    throw ParseError(line_number, "edge count must be non-negative");
                header_line = line_number;
            }
            else if (tag == "e") {
                if (n < 0)
                    throw ParseError(line_number, "edge before 'p' header");
                long long u = parse_int(fields, line_number, "edge endpoint");
                long long v = parse_int(fields, line_number, "edge endpoint");
                expect_end(fields, line_number);
                if (u < 1 || u > n || v < 1 || v > n)
                    throw ParseError(line_number, "endpoint outside 1.." + std::to_string(n));
                if (u == v)
                    throw ParseError(line_number, "self-loop on vertex " + std::to_string(u));
                edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            }
            else
                throw ParseError(line_number, "unknown line type '" + tag + "'");
        }

        if (n < 0)
            throw ParseError(line_number + 1, "missing 'p edge <n> <m>' header");
        if (static_cast<long long>(edges.size()) != m)
            throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
        return Graph(static_cast<int>(n), edges);
    }

    auto parse_dimacs_graph(std::string_view text) -> Graph
    {
        std::istringstream in{std::string(text)};
        return parse_dimacs_graph(in);
    }

    auto read_dimacs_graph_file(const std::string & path) -> Graph
    {
        std::ifstream in{path};
        if (! in)
            throw InvalidInput("cannot open graph file '" + path + "'");
        return parse_dimacs_graph(in);
    }

    auto write_dimacs_graph(const Graph & g) -> std::string
    {
        std::ostringstream out;
        auto edges = g.edges();
        out << "p edge " << g.size() << ' ' << edges.size() << '\n';
        for (auto [u, v] : edges)
            out << "e " << u + 1 << ' ' << v + 1 << '\n';
        return out.str();
    }

    namespace
    {
        // fixed palette cycled by colour number
        constexpr const char * palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33", "#a65628", "#f781bf", "#999999",
            "#66c2a5", "#fc8d62", "#8da0cb"};

        auto fill(Colour c) -> const char *
        {
            return palette[(c - 1) % std::size(palette)];
        }
    }

    auto write_dot(const Graph & g, const DotStyle & style) -> std::string
    {
        if (style.colouring && static_cast<int>(style.colouring->colours.size()) != g.size())
            throw InvalidInput("colouring length does not match the graph");

        std::ostringstream out;
        out << "graph G {\n";
        out << "  node [shape=circle, style=filled, fillcolor=white];\n";
        for (Vertex v = 0; v < g.size(); ++v) {
            std::string label = std::to_string(v + 1);
            if (style.labels)
                if (auto it = style.labels->find(v); it != style.labels->end())
                    label = it->second;
            out << "  " << v + 1 << " [label=\"" << label;
            if (style.colouring) {
                Colour c = style.colouring->colours[v];
                out << "\\n" << c << "\", fillcolor=\"" << fill(c) << "\"";
            }
            else
                out << "\"";
            out << "];\n";
        }
        for (auto [u, v] : g.edges())
            out << "  " << u + 1 << " -- " << v + 1 << ";\n";
        out << "}\n";
        return out.str();
    }

    auto write_dot(const RoleGraph & r) -> std::string
    {
        std::ostringstream out;
        out << "graph R {\n";
        out << "  node [shape=circle, style=filled];\n";
        for (Colour c = 1; c <= r.k; ++c)
            out << "  " << c << " [fillcolor=\"" << fill(c) << "\"];\n";
        for (auto [c, d] : r.edges)
            out << "  " << c << " -- " << d << ";\n";
        for (Colour c : r.loops)
            out << "  " << c << " -- " << c << ";\n";
        out << "}\n";
        return out.str();
    }

    auto colouring_to_json(const RoleColouring & rc) -> std::string
    {
        Json j;
        j["k"] = rc.k;
        j["colours"] = rc.colours;
        return j.dump();
    }

    auto parse_colouring_json(std::string_view text) -> RoleColouring
    {
        Json j;
        try {
            j = Json::parse(text);
        }
        catch (const Json::parse_error & e) {
            // byte offsets are mapped back to a line number
            auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
            int line = 1 + static_cast<int>(std::count(upto.begin(), upto.end(), '\n'));
            throw ParseError(line, "malformed colouring JSON");
        }

        if (! j.is_object() || ! j.contains("colours") || ! j["colours"].is_array())
            throw ParseError(1, "colouring JSON needs a \"colours\" array");

        RoleColouring rc;
        for (auto & c : j["colours"]) {
            if (! c.is_number_integer())
                throw ParseError(1, "colours must be integers");
            rc.colours.push_back(c.get<int>());
        }

        if (j.contains("k")) {
            if (! j["k"].is_number_integer())
                throw ParseError(1, "\"k\" must be an integer");
            rc.k = j["k"].get<int>();
        }
        else {
            std::set<Colour> distinct(rc.colours.begin(), rc.colours.end());
            rc.k = static_cast<int>(distinct.size());
        }
        return rc;
    }

    auto read_colouring_file(const std::string & path) -> RoleColouring
    {
        return parse_colouring_json(read_text_file(path));
    }

    auto role_graph_to_json(const RoleGraph & r) -> std::string
    {
        Json j;
        j["k"] = r.k;
        j["edges"] = Json::array();
        for (auto [c, d] : r.edges)
            j["edges"].push_back({c, d});
        j["loops"] = Json::array();
        for (Colour c : r.loops)
            j["loops"].push_back(c);
        return j.dump();
    }

    auto read_text_file(const std::string & path) -> std::string
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw InvalidInput("cannot open file '" + path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }
}
