#include "cwl/decomp.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

namespace cwl {

namespace {

// Bron–Kerbosch on the complement graph. `emit` returns false to stop.
template <typename Emit>
bool bron_kerbosch(const Graph& g, VertexMask r, VertexMask p, VertexMask x, Emit& emit) {
    if (p == 0 && x == 0)
        return emit(r);
    // Pivot: the vertex of P ∪ X compatible with the most candidates.
    Vertex pivot = 0;
    int best = -1;
    for (Vertex u : VertexSet(p | x)) {
        int c = std::popcount(p & ~(g.neighbor_mask(u) | bit(u)));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (Vertex v : VertexSet(p & (g.neighbor_mask(pivot) | bit(pivot)))) {
        const VertexMask compat = ~(g.neighbor_mask(v) | bit(v));
        if (!bron_kerbosch(g, r | bit(v), p & compat, x & compat, emit))
            return false;
        p &= ~bit(v);
        x |= bit(v);
    }
    return true;
}

template <typename Emit>
void for_each_mis(const Graph& g, VertexMask within, Emit&& emit) {
    bron_kerbosch(g, 0, within, 0, emit);
}

VertexMask component_of(const Graph& g, VertexMask within, Vertex start) {
    VertexMask comp = bit(start);
    VertexMask frontier = comp;
    while (frontier) {
        VertexMask next = 0;
        for (Vertex v : VertexSet(frontier))
            next |= g.neighbor_mask(v);
        next &= within;
        frontier = next & ~comp;
        comp |= next;
    }
    return comp;
}

// Vertices of G[within] adjacent to a simplicial vertex of G[within].
VertexMask simplicial_neighbours(const Graph& g, VertexMask within) {
    VertexMask out = 0;
    for (Vertex s : VertexSet(within)) {
        VertexMask nb = g.neighbor_mask(s) & within;
        if (mask_is_clique(g, nb))
            out |= nb;
    }
    return out;
}

VertexMask closed_nb_within(const Graph& g, VertexMask within, Vertex x) {
    return (g.neighbor_mask(x) | bit(x)) & within;
}

} // namespace

std::vector<VertexMask> maximal_independent_sets(const Graph& g, VertexMask within) {
    g.check_set(VertexSet(within));
    std::vector<VertexMask> out;
    for_each_mis(g, within, [&](VertexMask s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for (auto m : maximal_independent_sets(g, g.vertices().mask()))
        out.emplace_back(m);
    return out;
}

VdOracle::VdOracle(const Graph& g) : g_(g) {}

bool VdOracle::is_shedding(VertexMask within, Vertex x) const {
    const VertexMask nb = g_.neighbor_mask(x) & within;
    if (nb == 0)
        return false;
    // A neighbour of a simplicial vertex always sheds.
    for (Vertex s : VertexSet(nb))
        if (mask_is_clique(g_, g_.neighbor_mask(s) & within))
            return true;
    // x sheds iff no maximal independent set of G[within] \ N[x] dominates N(x):
    // such a set would be maximal in G[within] \ x while avoiding N(x).
    bool shedding = true;
    for_each_mis(g_, within & ~(nb | bit(x)), [&](VertexMask s) {
        for (Vertex y : VertexSet(nb))
            if ((g_.neighbor_mask(y) & s) == 0)
                return true;
        shedding = false;
        return false;
    });
    return shedding;
}

bool VdOracle::is_vd(VertexMask within) {
    if (!mask_has_edges(g_, within))
        return true;
    if (auto it = memo_.find(within); it != memo_.end())
        return it->second;
    // A disjoint union is vertex decomposable iff every component is.
    bool result = true;
    VertexMask rest = within;
    while (rest) {
        VertexMask comp = component_of(g_, within, static_cast<Vertex>(std::countr_zero(rest)));
        rest &= ~comp;
        if (comp == within) {
            result = is_vd_connected(within);
            break;
        }
        if (!is_vd(comp)) {
            result = false;
            break;
        }
    }
    memo_[within] = result;
    return result;
}

bool VdOracle::is_vd_connected(VertexMask within) {
    const VertexMask preferred = simplicial_neighbours(g_, within);
    for (VertexMask group : {preferred, within & ~preferred}) {
        for (Vertex x : VertexSet(group)) {
            if (!is_shedding(within, x))
                continue;
            if (is_vd(within & ~bit(x)) && is_vd(within & ~closed_nb_within(g_, within, x)))
                return true;
        }
    }
    return false;
}

bool is_shedding_vertex(const Graph& g, Vertex v) {
    g.check_vertex(v);
    return VdOracle(g).is_shedding(g.vertices().mask(), v);
}

bool is_vertex_decomposable(const Graph& g) { return VdOracle(g).is_vd(); }

std::optional<std::string> decomposition_error(const Graph& g, const SheddingDecomposition& d) {
    VertexMask seen = 0;
    for (const auto* list : {&d.shedding_order, &d.i_order}) {
        for (Vertex v : *list) {
            if (v >= g.size())
                return "vertex index " + std::to_string(v) + " out of range";
            if (seen & bit(v))
                return "vertex " + g.label(v) + " listed twice";
            seen |= bit(v);
        }
    }
    if (seen != g.vertices().mask())
        return "shedding order and i-order do not cover every vertex";
    if (!mask_is_independent(g, d.i_set().mask()))
        return "i-order is not an independent set";
    VdOracle oracle(g);
    if (!oracle.is_vd())
        return "graph is not vertex decomposable";
    VertexMask current = g.vertices().mask();
    for (Vertex x : d.shedding_order) {
        if (!oracle.is_shedding(current, x))
            return g.label(x) + " is not a shedding vertex at its step";
        current &= ~bit(x);
        if (!oracle.is_vd(current))
            return "deleting " + g.label(x) + " leaves a graph that is not vertex decomposable";
    }
    return std::nullopt;
}

bool is_valid_decomposition(const Graph& g, const SheddingDecomposition& d) {
    return !decomposition_error(g, d).has_value();
}

std::optional<SheddingDecomposition> shedding_decomposition(const Graph& g, VdOracle& oracle) {
    if (!oracle.is_vd())
        return std::nullopt;
    SheddingDecomposition d;
    VertexMask current = g.vertices().mask();
    while (mask_has_edges(g, current)) {
        const VertexMask preferred = simplicial_neighbours(g, current);
        std::optional<Vertex> chosen;
        for (VertexMask group : {preferred, current & ~preferred}) {
            for (Vertex x : VertexSet(group)) {
                if (oracle.is_shedding(current, x) && oracle.is_vd(current & ~bit(x))) {
                    chosen = x;
                    break;
                }
            }
            if (chosen)
                break;
        }
        if (!chosen)
            throw Error(ErrorCode::InvalidArgument, "internal: vertex decomposable graph without a usable shedding vertex");
        d.shedding_order.push_back(*chosen);
        current &= ~bit(*chosen);
    }
    d.i_order = VertexSet(current).to_vector();
    return d;
}

std::optional<SheddingDecomposition> shedding_decomposition(const Graph& g) {
    VdOracle oracle(g);
    return shedding_decomposition(g, oracle);
}

DecompositionEnumeration all_shedding_decompositions(const Graph& g, std::size_t node_budget) {
    DecompositionEnumeration out;
    VdOracle oracle(g);
    if (!oracle.is_vd())
        return out;
    std::vector<Vertex> order;
    std::size_t nodes = 0;
    std::function<void(VertexMask)> walk = [&](VertexMask current) {
        if (!out.complete)
            return;
        if (++nodes > node_budget) {
            out.complete = false;
            return;
        }
        if (!mask_has_edges(g, current)) {
            out.decompositions.push_back({order, VertexSet(current).to_vector()});
            return;
        }
        for (Vertex x : VertexSet(current)) {
            if (oracle.is_shedding(current, x) && oracle.is_vd(current & ~bit(x))) {
                order.push_back(x);
                walk(current & ~bit(x));
                order.pop_back();
            }
        }
    };
    walk(g.vertices().mask());
    return out;
}

SheddingSetEnumeration all_shedding_sets(const Graph& g, std::size_t node_budget) {
    SheddingSetEnumeration out;
    VdOracle oracle(g);
    if (!oracle.is_vd())
        return out;
    const VertexMask all = g.vertices().mask();
    std::unordered_set<VertexMask> visited;
    std::vector<VertexMask> stack{all};
    visited.insert(all);
    while (!stack.empty()) {
        if (visited.size() > node_budget) {
            out.complete = false;
            break;
        }
        VertexMask current = stack.back();
        stack.pop_back();
        if (!mask_has_edges(g, current)) {
            out.shedding_sets.push_back(all & ~current);
            continue;
        }
        for (Vertex x : VertexSet(current)) {
            VertexMask next = current & ~bit(x);
            if (visited.count(next) == 0 && oracle.is_shedding(current, x) && oracle.is_vd(next)) {
                visited.insert(next);
                stack.push_back(next);
            }
        }
    }
    std::sort(out.shedding_sets.begin(), out.shedding_sets.end());
    return out;
}

Graph bg_from_shedding_set(const Graph& g, VertexMask shedding) {
    std::vector<Graph::Edge> edges;
    for (auto [u, v] : g.edges()) {
        const bool su = (shedding & bit(u)) != 0;
        const bool sv = (shedding & bit(v)) != 0;
        if (su != sv)
            edges.emplace_back(u, v);
    }
    return Graph(g.labels(), edges);
}

Graph build_bg(const Graph& g, const SheddingDecomposition& d) {
    if (auto err = decomposition_error(g, d))
        throw Error(ErrorCode::InvalidDecomposition, *err);
    return bg_from_shedding_set(g, d.shedding_set().mask());
}

LayeredGraph build_gk(const Graph& g, std::size_t k) {
    if (k < 1)
        throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    if (g.size() * k > kMaxVertices)
        throw Error(ErrorCode::TooLarge, "G_k would exceed 64 vertices");
    std::vector<std::string> labels;
    for (Vertex i = 0; i < g.size(); ++i)
        for (std::size_t p = 1; p <= k; ++p)
            labels.push_back(g.label(i) + "_" + std::to_string(p));
    std::vector<Graph::Edge> edges;
    for (auto [i, j] : g.edges())
        for (std::size_t p = 1; p <= k; ++p)
            for (std::size_t q = 1; p + q <= k + 1; ++q)
                edges.emplace_back(i * k + p - 1, j * k + q - 1);
    return LayeredGraph{g, k, Graph(std::move(labels), edges)};
}

namespace {

// Compares big \ N[top] with `small` under the vertex map `to_small`
// (kMaxVertices marks vertices that must merely stay isolated).
bool collapse_matches(const LayeredGraph& big, VertexMask top, const LayeredGraph& small,
                      const std::function<Vertex(Vertex, std::size_t)>& to_small) {
    const Graph& gb = big.result;
    const VertexMask rest = gb.vertices().mask() & ~closed_neighbors_mask(gb, top);
    std::vector<Vertex> image(gb.size(), kMaxVertices);
    VertexMask hit = 0;
    for (Vertex v : VertexSet(rest)) {
        Vertex mapped = to_small(v / big.k, v % big.k + 1);
        if (mapped == kMaxVertices) {
            if (gb.neighbor_mask(v) & rest)
                return false;
            continue;
        }
        image[v] = mapped;
        hit |= bit(mapped);
    }
    if (hit != small.result.vertices().mask())
        return false;
    for (Vertex u : VertexSet(rest))
        for (Vertex v : VertexSet(rest & ~low_mask(u + 1)))
            if (image[u] != kMaxVertices && image[v] != kMaxVertices &&
                gb.adjacent(u, v) != small.result.adjacent(image[u], image[v]))
                return false;
    return true;
}

} // namespace

bool layer_collapse_check(const Graph& g, std::size_t k) {
    if (k < 3)
        throw Error(ErrorCode::InvalidArgument, "layer collapse needs k >= 3");
    const auto big = build_gk(g, k);
    const auto small = build_gk(g, k - 2);
    VertexMask top = 0;
    for (Vertex i = 0; i < g.size(); ++i)
        top |= bit(big.index(i, k));
    return collapse_matches(big, top, small, [&](Vertex i, std::size_t p) -> Vertex {
        if (p < 2 || p > k - 1)
            return kMaxVertices;
        return small.index(i, p - 1);
    });
}

bool bipartite_layer_collapse_check(const Graph& g, std::size_t k) {
    if (k < 2)
        throw Error(ErrorCode::InvalidArgument, "bipartite layer collapse needs k >= 2");
    const auto sides = bipartition(g);
    if (!sides)
        throw Error(ErrorCode::NotBipartite, "graph is not bipartite");
    const VertexSet xs = sides->first;
    const auto big = build_gk(g, k);
    const auto small = build_gk(g, k - 1);
    VertexMask top = 0;
    for (Vertex i : xs)
        top |= bit(big.index(i, k));
    return collapse_matches(big, top, small, [&](Vertex i, std::size_t p) -> Vertex {
        if (xs.contains(i))
            return p <= k - 1 ? small.index(i, p) : kMaxVertices;
        return p >= 2 ? small.index(i, p - 1) : kMaxVertices;
    });
}

WGraphResult w_graph_check(const Graph& g) {
    WGraphResult out;
    std::unordered_set<VertexMask> seen;
    for_each_independent_set(g, [&](VertexSet a, VertexSet remainder) {
        const VertexMask r = remainder.mask();
        if (r == 0 || !seen.insert(r).second)
            return true;
        for (Vertex v : remainder)
            if (mask_is_clique(g, g.neighbor_mask(v) & r))
                return true;
        out.holds = false;
        out.witness = a;
        return false;
    });
    return out;
}

bool is_w_graph(const Graph& g) { return w_graph_check(g).holds; }

bool is_scm_bipartite(const Graph& g) {
    if (!is_bipartite(g))
        throw Error(ErrorCode::NotBipartite, "graph is not bipartite");
    std::unordered_map<VertexMask, bool> memo;
    std::function<bool(VertexMask)> scm = [&](VertexMask m) -> bool {
        if (!mask_has_edges(g, m))
            return true;
        if (auto it = memo.find(m); it != memo.end())
            return it->second;
        bool result = false;
        for (Vertex x : VertexSet(m)) {
            const VertexMask nb = g.neighbor_mask(x) & m;
            if (std::popcount(nb) != 1)
                continue;
            const Vertex y = static_cast<Vertex>(std::countr_zero(nb));
            if (scm(m & ~closed_nb_within(g, m, x)) && scm(m & ~closed_nb_within(g, m, y))) {
                result = true;
                break;
            }
        }
        memo[m] = result;
        return result;
    };
    return scm(g.vertices().mask());
}

BgFamilyResult bg_family_check(const Graph& g, const BgFamilyOptions& opts) {
    VdOracle oracle(g);
    if (!oracle.is_vd())
        throw Error(ErrorCode::NotVertexDecomposable, "graph is not vertex decomposable");
    BgFamilyResult out;
    out.exhaustive = opts.exhaustive;
    std::unordered_set<VertexMask> checked;
    for_each_independent_set(g, [&](VertexSet a, VertexSet remainder) {
        ++out.independent_sets;
        if (!checked.insert(remainder.mask()).second)
            return true;
        ++out.remainders;
        auto fail = [&](std::string reason) {
            if (out.holds) {
                out.holds = false;
                out.witness = a;
                out.reason = std::move(reason);
            }
        };
        if (!oracle.is_vd(remainder.mask())) {
            fail("G \\ N[A] is not vertex decomposable");
            return opts.exhaustive;
        }
        const Graph sub = induced_subgraph(g, remainder);
        const auto d = shedding_decomposition(sub);
        const bool default_vd = is_vertex_decomposable(build_bg(sub, *d));
        if (!default_vd)
            fail("B is not vertex decomposable");
        if (!opts.exhaustive)
            return default_vd;
        const auto sets = all_shedding_sets(sub, opts.node_budget);
        out.complete = out.complete && sets.complete;
        for (VertexMask s : sets.shedding_sets) {
            if (is_vertex_decomposable(bg_from_shedding_set(sub, s)) != default_vd) {
                out.order_dependent.push_back(a);
                break;
            }
        }
        return true;
    });
    return out;
}

bool bg_family_vd(const Graph& g) { return bg_family_check(g).holds; }

} // namespace cwl
