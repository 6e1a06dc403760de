#include "cwl/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <random>
#include <set>

namespace cwl {

namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Split cells by neighbour counts into each cell until nothing changes. Subcells
// are ordered by count, which keeps the procedure independent of labelling.
void refine(const Graph& g, Partition& part) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < part.size() && !changed; ++s) {
            VertexMask splitter = 0;
            for (Vertex v : part[s])
                splitter |= bit(v);
            for (std::size_t c = 0; c < part.size(); ++c) {
                if (part[c].size() < 2)
                    continue;
                std::map<int, Cell> by_count;
                for (Vertex v : part[c])
                    by_count[std::popcount(g.neighbor_mask(v) & splitter)].push_back(v);
                if (by_count.size() < 2)
                    continue;
                Partition pieces;
                for (auto& [count, cell] : by_count)
                    pieces.push_back(std::move(cell));
                part.erase(part.begin() + static_cast<std::ptrdiff_t>(c));
                part.insert(part.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
                changed = true;
                break;
            }
        }
    }
}

std::uint64_t code_of(const Graph& g, const Partition& discrete) {
    const std::size_t n = discrete.size();
    std::uint64_t code = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i)
            code = (code << 1) | (g.adjacent(discrete[i][0], discrete[j][0]) ? 1 : 0);
    return code;
}

void search(const Graph& g, Partition part, std::uint64_t& best, bool& found) {
    refine(g, part);
    auto target = std::find_if(part.begin(), part.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == part.end()) {
        std::uint64_t code = code_of(g, part);
        if (!found || code < best) {
            best = code;
            found = true;
        }
        return;
    }
    const std::size_t at = static_cast<std::size_t>(target - part.begin());
    for (std::size_t k = 0; k < part[at].size(); ++k) {
        Partition next = part;
        Cell rest = part[at];
        Vertex v = rest[k];
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
        next[at] = {v};
        next.insert(next.begin() + static_cast<std::ptrdiff_t>(at) + 1, rest);
        search(g, std::move(next), best, found);
    }
}

std::vector<Graph> build_all(std::size_t n) {
    if (n == 0)
        return {Graph(std::vector<std::string>{})};
    const auto& smaller = all_graphs(n - 1);
    std::set<std::uint64_t> codes;
    for (const Graph& h : smaller) {
        const auto base = h.edges();
        for (VertexMask s = 0; s < (VertexMask{1} << (n - 1)); ++s) {
            auto edges = base;
            for (Vertex v : VertexSet(s))
                edges.emplace_back(v, n - 1);
            codes.insert(canonical_code(Graph::with_default_labels(n, edges)));
        }
    }
    std::vector<std::pair<std::size_t, std::uint64_t>> keyed;
    for (auto c : codes)
        keyed.emplace_back(static_cast<std::size_t>(std::popcount(c)), c);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Graph> out;
    for (auto [e, c] : keyed)
        out.push_back(graph_from_code(n, c));
    return out;
}

} // namespace

bool GraphFilter::accepts(const Graph& g) const {
    if (connected && !is_connected(g))
        return false;
    if (bipartite && !is_bipartite(g))
        return false;
    return true;
}

std::uint64_t canonical_code(const Graph& g) {
    if (g.size() > 11)
        throw Error(ErrorCode::TooLarge, "canonical codes are limited to 11 vertices");
    if (g.size() == 0)
        return 0;
    Partition start{g.vertices().to_vector()};
    std::uint64_t best = 0;
    bool found = false;
    search(g, std::move(start), best, found);
    return best;
}

Graph graph_from_code(std::size_t n, std::uint64_t code) {
    std::vector<Graph::Edge> edges;
    std::size_t pos = n * (n - (n > 0 ? 1 : 0)) / 2;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if ((code >> --pos) & 1)
                edges.emplace_back(i, j);
    return Graph::with_default_labels(n, edges);
}

const std::vector<Graph>& all_graphs(std::size_t n) {
    if (n > kMaxExhaustiveN)
        throw Error(ErrorCode::TooLarge, "exhaustive enumeration is limited to 8 vertices");
    static std::recursive_mutex mutex;
    static std::array<std::vector<Graph>, kMaxExhaustiveN + 1> cache;
    static std::array<bool, kMaxExhaustiveN + 1> ready{};
    std::lock_guard lock(mutex);
    if (!ready[n]) {
        cache[n] = build_all(n);
        ready[n] = true;
    }
    return cache[n];
}

std::vector<Graph> enumerate_graphs(std::size_t n, const GraphFilter& filter) {
    std::vector<Graph> out;
    for (const auto& g : all_graphs(n))
        if (filter.accepts(g))
            out.push_back(g);
    return out;
}

std::vector<Graph> enumerate_graphs_up_to(std::size_t max_n, const GraphFilter& filter) {
    std::vector<Graph> out;
    for (std::size_t n = 1; n <= max_n; ++n) {
        auto part = enumerate_graphs(n, filter);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<Graph> sample_graphs(std::size_t n, std::size_t count, const GraphFilter& filter, std::uint64_t seed) {
    if (n > kMaxVertices)
        throw Error(ErrorCode::TooLarge, "graphs are limited to 64 vertices");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    std::size_t attempts = 0;
    while (out.size() < count) {
        if (++attempts > 1000 * (count + 1))
            throw Error(ErrorCode::InvalidArgument, "could not sample graphs matching the filter");
        VertexMask side = filter.bipartite ? rng() : 0;
        std::vector<Graph::Edge> edges;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = i + 1; j < n; ++j) {
                bool coin = (rng() >> 63) != 0;
                bool cross = ((side >> i) & 1) != ((side >> j) & 1);
                if (coin && (!filter.bipartite || cross))
                    edges.emplace_back(i, j);
            }
        Graph g = Graph::with_default_labels(n, edges);
        if (filter.accepts(g))
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace cwl
