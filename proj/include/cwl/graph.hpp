#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cwl/error.hpp"

namespace cwl {

using Vertex = std::size_t;
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxVertices = 64;

constexpr VertexMask bit(Vertex v) noexcept { return VertexMask{1} << v; }

constexpr VertexMask low_mask(std::size_t n) noexcept {
    return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// A subset of the vertex indices of some graph, stored as a 64-bit mask.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(VertexMask rest) : rest_(rest) {}
        Vertex operator*() const { return static_cast<Vertex>(std::countr_zero(rest_)); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const iterator&) const = default;

    private:
        VertexMask rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(VertexMask mask) : mask_(mask) {}
    VertexSet(std::initializer_list<Vertex> members);

    static VertexSet from_vector(const std::vector<Vertex>& members);

    constexpr VertexMask mask() const noexcept { return mask_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool empty() const noexcept { return mask_ == 0; }
    bool contains(Vertex v) const noexcept { return v < 64 && (mask_ & bit(v)) != 0; }
    bool subset_of(VertexSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }

    iterator begin() const { return iterator(mask_); }
    iterator end() const { return iterator(0); }
    std::vector<Vertex> to_vector() const;

    VertexSet operator|(VertexSet o) const noexcept { return VertexSet(mask_ | o.mask_); }
    VertexSet operator&(VertexSet o) const noexcept { return VertexSet(mask_ & o.mask_); }
    VertexSet operator-(VertexSet o) const noexcept { return VertexSet(mask_ & ~o.mask_); }
    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    VertexMask mask_ = 0;
};

/// Simple undirected graph on dense vertex indices 0..n-1 with a label per vertex.
/// Immutable after construction; every derived graph is a new value.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph() = default;
    explicit Graph(std::vector<std::string> labels);
    Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

    /// Graph on labels x1..xn (1-based names) with the given 0-based edges.
    static Graph with_default_labels(std::size_t n, const std::vector<Edge>& edges);

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }
    VertexSet vertices() const noexcept { return VertexSet(low_mask(size())); }

    const std::string& label(Vertex v) const;
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    std::optional<Vertex> find(std::string_view label) const;
    Vertex at(std::string_view label) const;
    VertexSet set_of(std::initializer_list<std::string_view> labels) const;

    bool adjacent(Vertex u, Vertex v) const;
    VertexMask neighbor_mask(Vertex v) const { return adj_.at(v); }
    VertexSet neighbors(Vertex v) const { return VertexSet(adj_.at(v)); }
    std::size_t degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(adj_.at(v))); }

    std::vector<Edge> edges() const;
    std::size_t edge_count() const;
    bool has_edges() const;

    /// Edges as label pairs, each pair ordered by vertex index.
    std::vector<std::pair<std::string, std::string>> labeled_edges() const;

    void check_vertex(Vertex v) const;
    void check_set(VertexSet s) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<VertexMask> adj_;
};

// Mask-level helpers shared by the algorithms that recurse over induced subgraphs
// of one fixed graph.
VertexMask closed_neighbors_mask(const Graph& g, VertexMask s);
bool mask_has_edges(const Graph& g, VertexMask within);
bool mask_is_independent(const Graph& g, VertexMask s);
bool mask_is_clique(const Graph& g, VertexMask s);

VertexSet open_neighborhood(const Graph& g, VertexSet s);

/// N_G[s]; returns s itself when no member of s has a neighbor.
VertexSet neighbors_closed(const Graph& g, VertexSet s);

bool is_independent(const Graph& g, VertexSet s);
bool is_clique(const Graph& g, VertexSet s);

/// Induced subgraph on `keep`, vertices in increasing parent index, labels carried over.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph delete_vertices(const Graph& g, VertexSet remove);

/// G \ N_G[s] for an independent set s.
Graph delete_closed_neighborhood(const Graph& g, VertexSet s);

bool is_simplicial_vertex(const Graph& g, Vertex v);
VertexSet simplicial_vertices(const Graph& g);

/// Perfect elimination ordering if one exists (maximum cardinality search, reversed).
std::optional<std::vector<Vertex>> perfect_elimination_ordering(const Graph& g);
bool is_chordal(const Graph& g);

/// Deterministic 2-coloring: the lowest index of each component goes to the first side.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

/// G ∪ W(S): a pendant vertex labelled "z_<label>" attached to each member of s.
/// New vertices are appended in increasing order of the vertex they hang from.
Graph add_whiskers(const Graph& g, VertexSet s);

} // namespace cwl
