#include "cwl/graph.hpp"

#include <algorithm>
#include <unordered_set>

namespace cwl {

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) {
        if (v >= kMaxVertices)
            throw Error(ErrorCode::InvalidVertex, "vertex index " + std::to_string(v) + " out of range");
        mask_ |= bit(v);
    }
}

VertexSet VertexSet::from_vector(const std::vector<Vertex>& members) {
    VertexMask m = 0;
    for (Vertex v : members) {
        if (v >= kMaxVertices)
            throw Error(ErrorCode::InvalidVertex, "vertex index " + std::to_string(v) + " out of range");
        m |= bit(v);
    }
    return VertexSet(m);
}

std::vector<Vertex> VertexSet::to_vector() const {
    return std::vector<Vertex>(begin(), end());
}

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)), adj_(labels_.size(), 0) {
    if (labels_.size() > kMaxVertices)
        throw Error(ErrorCode::TooLarge, "graphs are limited to 64 vertices");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty())
            throw Error(ErrorCode::InvalidArgument, "empty vertex label");
        if (!seen.insert(l).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate vertex label '" + l + "'");
    }
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges) : Graph(std::move(labels)) {
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw Error(ErrorCode::InvalidArgument, "self-loop at '" + labels_[u] + "'");
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
}

Graph Graph::with_default_labels(std::size_t n, const std::vector<Edge>& edges) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("x" + std::to_string(i + 1));
    return Graph(std::move(labels), edges);
}

const std::string& Graph::label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
}

std::optional<Vertex> Graph::find(std::string_view label) const {
    for (Vertex v = 0; v < labels_.size(); ++v)
        if (labels_[v] == label)
            return v;
    return std::nullopt;
}

Vertex Graph::at(std::string_view label) const {
    if (auto v = find(label))
        return *v;
    throw Error(ErrorCode::InvalidVertex, "no vertex labelled '" + std::string(label) + "'");
}

VertexSet Graph::set_of(std::initializer_list<std::string_view> labels) const {
    VertexMask m = 0;
    for (auto l : labels)
        m |= bit(at(l));
    return VertexSet(m);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & bit(v)) != 0;
}

std::vector<Graph::Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < size(); ++u)
        for (Vertex v : VertexSet(adj_[u] & ~low_mask(u + 1)))
            out.emplace_back(u, v);
    return out;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (auto m : adj_)
        total += static_cast<std::size_t>(std::popcount(m));
    return total / 2;
}

bool Graph::has_edges() const {
    return std::any_of(adj_.begin(), adj_.end(), [](VertexMask m) { return m != 0; });
}

std::vector<std::pair<std::string, std::string>> Graph::labeled_edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto [u, v] : edges())
        out.emplace_back(labels_[u], labels_[v]);
    return out;
}

void Graph::check_vertex(Vertex v) const {
    if (v >= size())
        throw Error(ErrorCode::InvalidVertex,
                    "vertex index " + std::to_string(v) + " out of range for graph on " +
                        std::to_string(size()) + " vertices");
}

void Graph::check_set(VertexSet s) const {
    if (!s.subset_of(vertices()))
        throw Error(ErrorCode::InvalidVertex,
                    "vertex set is not contained in a graph on " + std::to_string(size()) + " vertices");
}

VertexMask closed_neighbors_mask(const Graph& g, VertexMask s) {
    VertexMask out = s;
    for (Vertex v : VertexSet(s))
        out |= g.neighbor_mask(v);
    return out;
}

bool mask_has_edges(const Graph& g, VertexMask within) {
    for (Vertex v : VertexSet(within))
        if (g.neighbor_mask(v) & within)
            return true;
    return false;
}

bool mask_is_independent(const Graph& g, VertexMask s) { return !mask_has_edges(g, s); }

bool mask_is_clique(const Graph& g, VertexMask s) {
    for (Vertex v : VertexSet(s))
        if ((s & ~(g.neighbor_mask(v) | bit(v))) != 0)
            return false;
    return true;
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
    g.check_set(s);
    VertexMask out = 0;
    for (Vertex v : s)
        out |= g.neighbor_mask(v);
    return VertexSet(out);
}

VertexSet neighbors_closed(const Graph& g, VertexSet s) {
    g.check_set(s);
    return VertexSet(closed_neighbors_mask(g, s.mask()));
}

bool is_independent(const Graph& g, VertexSet s) {
    g.check_set(s);
    return mask_is_independent(g, s.mask());
}

bool is_clique(const Graph& g, VertexSet s) {
    g.check_set(s);
    return mask_is_clique(g, s.mask());
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
    g.check_set(keep);
    std::vector<Vertex> index(g.size(), 0);
    std::vector<std::string> labels;
    Vertex next = 0;
    for (Vertex v : keep) {
        index[v] = next++;
        labels.push_back(g.label(v));
    }
    std::vector<Graph::Edge> edges;
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v))
            edges.emplace_back(index[u], index[v]);
    return Graph(std::move(labels), edges);
}

Graph delete_vertices(const Graph& g, VertexSet remove) {
    g.check_set(remove);
    return induced_subgraph(g, g.vertices() - remove);
}

Graph delete_closed_neighborhood(const Graph& g, VertexSet s) {
    g.check_set(s);
    if (!mask_is_independent(g, s.mask()))
        throw Error(ErrorCode::NotIndependent, "vertex set is not independent");
    return delete_vertices(g, neighbors_closed(g, s));
}

bool is_simplicial_vertex(const Graph& g, Vertex v) {
    g.check_vertex(v);
    return mask_is_clique(g, g.neighbor_mask(v));
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexMask out = 0;
    for (Vertex v = 0; v < g.size(); ++v)
        if (mask_is_clique(g, g.neighbor_mask(v)))
            out |= bit(v);
    return VertexSet(out);
}

std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g) {
    const std::size_t n = g.size();
    // Maximum cardinality search; the reverse visiting order is a perfect
    // elimination ordering iff the graph is chordal.
    std::vector<std::size_t> weight(n, 0);
    std::vector<Vertex> visit;
    VertexMask unvisited = low_mask(n);
    while (unvisited) {
        Vertex best = static_cast<Vertex>(std::countr_zero(unvisited));
        for (Vertex v : VertexSet(unvisited))
            if (weight[v] > weight[best])
                best = v;
        visit.push_back(best);
        unvisited &= ~bit(best);
        for (Vertex w : VertexSet(g.neighbor_mask(best) & unvisited))
            ++weight[w];
    }
    std::vector<Vertex> order(visit.rbegin(), visit.rend());
    // Verify: each vertex's later neighbours form a clique.
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[order[i]] = i;
    for (std::size_t i = 0; i < n; ++i) {
        VertexMask later = 0;
        for (Vertex w : g.neighbors(order[i]))
            if (position[w] > i)
                later |= bit(w);
        if (!mask_is_clique(g, later))
            return std::nullopt;
    }
    return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<int> color(n, -1);
    VertexMask side[2] = {0, 0};
    for (Vertex root = 0; root < n; ++root) {
        if (color[root] != -1)
            continue;
        color[root] = 0;
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            side[color[v]] |= bit(v);
            for (Vertex w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return std::make_pair(VertexSet(side[0]), VertexSet(side[1]));
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexMask rest = low_mask(g.size());
    while (rest) {
        VertexMask comp = bit(static_cast<Vertex>(std::countr_zero(rest)));
        VertexMask frontier = comp;
        while (frontier) {
            VertexMask next = 0;
            for (Vertex v : VertexSet(frontier))
                next |= g.neighbor_mask(v);
            frontier = next & ~comp;
            comp |= next;
        }
        out.emplace_back(comp);
        rest &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) { return g.edge_count() + connected_components(g).size() == g.size(); }

Graph add_whiskers(const Graph& g, VertexSet s) {
    g.check_set(s);
    if (g.size() + s.size() > kMaxVertices)
        throw Error(ErrorCode::TooLarge, "whiskered graph exceeds 64 vertices");
    auto labels = g.labels();
    auto edges = g.edges();
    for (Vertex v : s) {
        edges.emplace_back(v, labels.size());
        labels.push_back("z_" + g.label(v));
    }
    return Graph(std::move(labels), edges);
}

} // namespace cwl
