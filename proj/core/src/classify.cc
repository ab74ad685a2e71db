#include <rolecol/cograph_solver.hh>
#include <rolecol/graph.hh>

namespace rolecol
{
    auto classify(const Graph & g) -> GraphClass
    {
        GraphClass result;
        result.connected = is_connected(g);
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.degree(v) == 0)
                result.has_isolated_vertex = true;

        result.is_tree = g.size() >= 1 && result.connected && g.edge_count() + 1 == static_cast<std::size_t>(g.size());
        result.is_path = result.is_tree && g.max_degree() <= 2;
        result.is_cograph = g.size() >= 1 && is_cograph(g);

        if (result.is_path)
            result.kind = GraphKind::Path;
        else if (result.is_tree)
            result.kind = GraphKind::Tree;
        else if (result.is_cograph)
            result.kind = GraphKind::Cograph;
        else
            result.kind = GraphKind::General;
        return result;
    }
}
