#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cwl/graph.hpp"

namespace cwl {

/// Maximal independent sets of the subgraph induced on `within`, as masks,
/// sorted ascending. Bron–Kerbosch with pivoting on the complement.
std::vector<VertexMask> maximal_independent_sets(const Graph& g, VertexMask within);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

/// Vertex decomposability of induced subgraphs of one fixed graph, memoized
/// by vertex mask. Not thread-safe; use one instance per worker.
class VdOracle {
public:
    explicit VdOracle(const Graph& g);

    const Graph& graph() const { return g_; }

    /// Is x a shedding vertex of G[within]? (x must lie in within.)
    bool is_shedding(VertexMask within, Vertex x) const;
    bool is_vd(VertexMask within);
    bool is_vd() { return is_vd(g_.vertices().mask()); }

    std::size_t memo_size() const { return memo_.size(); }

private:
    bool is_vd_connected(VertexMask within);

    const Graph& g_;
    std::unordered_map<VertexMask, bool> memo_;
};

bool is_shedding_vertex(const Graph& g, Vertex v);
bool is_vertex_decomposable(const Graph& g);

/// A shedding order together with its i-order. Vertex indices refer to the
/// graph the decomposition was computed for.
struct SheddingDecomposition {
    std::vector<Vertex> shedding_order;
    std::vector<Vertex> i_order;

    VertexSet shedding_set() const { return VertexSet::from_vector(shedding_order); }
    VertexSet i_set() const { return VertexSet::from_vector(i_order); }
    bool operator==(const SheddingDecomposition&) const = default;
};

/// Empty optional when `d` is a valid decomposition of `g`, otherwise a reason.
std::optional<std::string> decomposition_error(const Graph& g, const SheddingDecomposition& d);
bool is_valid_decomposition(const Graph& g, const SheddingDecomposition& d);

/// Deterministic decomposition: at each step, among shedding vertices whose
/// deletion stays vertex decomposable, prefer a neighbour of a simplicial
/// vertex, then the lowest index. The i-order is ascending.
std::optional<SheddingDecomposition> shedding_decomposition(const Graph& g);
std::optional<SheddingDecomposition> shedding_decomposition(const Graph& g, VdOracle& oracle);

struct DecompositionEnumeration {
    std::vector<SheddingDecomposition> decompositions;
    bool complete = true; // false when the node budget ran out
};

/// Every valid shedding decomposition, up to `node_budget` search nodes.
DecompositionEnumeration all_shedding_decompositions(const Graph& g, std::size_t node_budget = 100000);

/// The distinct shedding-order vertex sets over all decompositions. B_G only
/// depends on this set.
struct SheddingSetEnumeration {
    std::vector<VertexMask> shedding_sets;
    bool complete = true;
};
SheddingSetEnumeration all_shedding_sets(const Graph& g, std::size_t node_budget = 100000);

/// Spanning bipartite subgraph: the edges of g joining the i-order part to the
/// shedding part. Same vertices and labels as g.
Graph build_bg(const Graph& g, const SheddingDecomposition& d);
Graph bg_from_shedding_set(const Graph& g, VertexMask shedding);

struct LayeredGraph {
    Graph base;
    std::size_t k;
    Graph result;

    /// Index of x_{i,p} in result (p is 1-based).
    Vertex index(Vertex i, std::size_t p) const { return i * k + (p - 1); }
};

/// G_k: vertex x_{i,p} (label "<label>_<p>") at index i*k + p - 1; x_{i,p}x_{j,q}
/// is an edge iff x_i x_j is an edge of g and p + q <= k + 1.
LayeredGraph build_gk(const Graph& g, std::size_t k);

/// Removes N[top layer] from G_k and shifts every layer down by one; true iff
/// the result is exactly G_{k-2}. Surviving layer-1 copies of isolated base
/// vertices have nowhere to go and are only required to stay isolated.
bool layer_collapse_check(const Graph& g, std::size_t k);

/// Bipartite variant: removes N[top layer of the first side] from G_k, shifts
/// the second side down by one layer and compares with G_{k-1}.
bool bipartite_layer_collapse_check(const Graph& g, std::size_t k);

/// Independent sets A of g visited by size, then lexicographically, with the
/// remainder mask V \ N[A]. Stops early when `visit` returns false.
template <typename Visit>
void for_each_independent_set(const Graph& g, Visit&& visit);

struct WGraphResult {
    bool holds = true;
    std::optional<VertexSet> witness; // an A whose remainder has no simplicial vertex
};
WGraphResult w_graph_check(const Graph& g);
bool is_w_graph(const Graph& g);

/// Van Tuyl–Villarreal recursion; throws NotBipartite on non-bipartite input.
bool is_scm_bipartite(const Graph& g);

struct BgFamilyOptions {
    bool exhaustive = false;          // also try every shedding set per remainder
    std::size_t node_budget = 100000; // per remainder, exhaustive mode only
};

struct BgFamilyResult {
    bool holds = true;
    std::optional<VertexSet> witness; // first failing A in (size, lex) order
    std::string reason;
    std::size_t independent_sets = 0;
    std::size_t remainders = 0;
    // exhaustive mode
    bool exhaustive = false;
    bool complete = true;
    /// Independent sets whose remainder gives VD and non-VD bipartite graphs
    /// depending on the shedding order.
    std::vector<VertexSet> order_dependent;
};

/// Checks that B of G \ N[A] is vertex decomposable for every independent A
/// (including the empty set). Throws NotVertexDecomposable if g is not.
BgFamilyResult bg_family_check(const Graph& g, const BgFamilyOptions& opts = {});
bool bg_family_vd(const Graph& g);

template <typename Visit>
void for_each_independent_set(const Graph& g, Visit&& visit) {
    struct Entry {
        VertexMask a;
        VertexMask remainder;
        Vertex next; // extensions use vertices >= next
    };
    std::vector<Entry> level{{0, g.vertices().mask(), 0}};
    while (!level.empty()) {
        std::vector<Entry> following;
        for (const auto& e : level) {
            if (!visit(VertexSet(e.a), VertexSet(e.remainder)))
                return;
            for (Vertex v : VertexSet(e.remainder & ~low_mask(e.next)))
                following.push_back({e.a | bit(v), e.remainder & ~(g.neighbor_mask(v) | bit(v)), v + 1});
        }
        level = std::move(following);
    }
}

} // namespace cwl
