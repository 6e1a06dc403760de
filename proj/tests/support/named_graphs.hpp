#pragma once

// Graphs that appear as worked examples, built by explicit edge lists so tests
// can refer to vertices by their printed names.

#include <string>
#include <vector>

#include "cwl/graph.hpp"
#include "cwl/graph_io.hpp"

namespace cwl::testing {

inline Graph from_edges(const std::vector<std::string>& order,
                        const std::vector<std::pair<std::string, std::string>>& edges) {
    std::string text;
    for (const auto& l : order)
        text += l + "\n";
    for (const auto& [a, b] : edges)
        text += a + " " + b + "\n";
    return parse_edge_list(text);
}

// Seven vertices; x2, x4, x6 is a shedding order and B_G is not vertex decomposable.
inline Graph shedding_example() {
    return from_edges({"x1", "x2", "x3", "x4", "x5", "x6", "x7"},
                      {{"x1", "x2"}, {"x2", "x3"}, {"x2", "x4"}, {"x3", "x4"},
                       {"x4", "x5"}, {"x4", "x7"}, {"x5", "x6"}, {"x6", "x7"}});
}

// Diamond with a pendant path x1-x5-x6 and a whisker on x6.
inline Graph whiskered_example() {
    return from_edges({"x1", "x2", "x3", "x4", "x5", "x6", "z_x6"},
                      {{"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}, {"x2", "x4"}, {"x3", "x4"},
                       {"x1", "x5"}, {"x5", "x6"}, {"x6", "z_x6"}});
}

inline Graph whiskered_example_base() {
    return from_edges({"x1", "x2", "x3", "x4", "x5", "x6"},
                      {{"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}, {"x2", "x4"}, {"x3", "x4"},
                       {"x1", "x5"}, {"x5", "x6"}});
}

inline Graph diamond() {
    return from_edges({"x1", "x2", "x3", "x4"},
                      {{"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}, {"x2", "x4"}, {"x3", "x4"}});
}

// Chordal graph on eight vertices whose B_G is vertex decomposable while
// B of G \ N[x2] is not.
inline Graph chordal_remark_graph() {
    return from_edges({"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8"},
                      {{"x1", "x2"}, {"x2", "x3"}, {"x2", "x4"}, {"x3", "x4"}, {"x3", "x5"},
                       {"x4", "x6"}, {"x5", "x6"}, {"x4", "x5"}, {"x3", "x6"}, {"x6", "x7"},
                       {"x5", "x7"}, {"x7", "x8"}, {"x6", "x8"}});
}

// Bipartite figure graph with shedding order y1, x3, x2 and i-order x1, y2, y3, y4.
inline Graph bipartite_example() {
    return from_edges({"x1", "x2", "x3", "y1", "y2", "y3", "y4"},
                      {{"x1", "y1"}, {"x2", "y1"}, {"x2", "y2"}, {"x2", "y3"},
                       {"x3", "y2"}, {"x3", "y3"}, {"x3", "y4"}});
}

inline Graph path_graph(std::size_t n) {
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::with_default_labels(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph::with_default_labels(n, edges);
}

inline Graph complete_graph(std::size_t n) {
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::with_default_labels(n, edges);
}

inline Graph edgeless_graph(std::size_t n) { return Graph::with_default_labels(n, {}); }

inline std::vector<Vertex> vertices_of(const Graph& g, const std::vector<std::string>& labels) {
    std::vector<Vertex> out;
    for (const auto& l : labels)
        out.push_back(g.at(l));
    return out;
}

} // namespace cwl::testing
