#pragma once

#include <cstdint>
#include <vector>

#include "cwl/graph.hpp"

namespace cwl {

inline constexpr std::size_t kMaxExhaustiveN = 8;

struct GraphFilter {
    bool connected = false;
    bool bipartite = false;

    bool accepts(const Graph& g) const;
};

/// Canonical adjacency code (upper triangle in canonical order); equal codes
/// mean isomorphic graphs. n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// The graph with default labels x1..xn whose canonical code is `code`.
Graph graph_from_code(std::size_t n, std::uint64_t code);

/// One representative per isomorphism class on n <= 8 vertices, ordered by
/// (edge count, canonical code). Computed once per n and cached.
const std::vector<Graph>& all_graphs(std::size_t n);

/// Exhaustive for n <= 8 (throws TooLarge above).
std::vector<Graph> enumerate_graphs(std::size_t n, const GraphFilter& filter = {});

/// All isomorphism classes with 1..max_n vertices passing the filter.
std::vector<Graph> enumerate_graphs_up_to(std::size_t max_n, const GraphFilter& filter = {});

/// Seeded random graphs on n vertices passing the filter: G(n, 1/2), or random
/// two-colourings with cross edges at probability 1/2 when bipartite is asked
/// for; rejection handles connectivity.
std::vector<Graph> sample_graphs(std::size_t n, std::size_t count, const GraphFilter& filter, std::uint64_t seed);

} // namespace cwl
