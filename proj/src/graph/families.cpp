#include "cwl/families.hpp"

#include <random>
#include <sstream>

namespace cwl {

namespace {

std::vector<std::string> x_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back("x" + std::to_string(i));
    return labels;
}

// Uniform integer in [0, bound) from raw engine output. std distributions are not
// specified bit-for-bit across standard libraries, and generated graphs must be
// reproducible from the seed alone.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

double draw_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph build(const family::Path& f) {
    if (f.n == 0)
        throw Error(ErrorCode::InvalidArgument, "path needs at least one vertex");
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i + 1 < f.n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(x_labels(f.n), edges);
}

Graph build(const family::Cycle& f) {
    if (f.n < 3)
        throw Error(ErrorCode::InvalidArgument, "cycle needs at least three vertices");
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i < f.n; ++i)
        edges.emplace_back(i, (i + 1) % f.n);
    return Graph(x_labels(f.n), edges);
}

Graph build(const family::Complete& f) {
    if (f.n == 0)
        throw Error(ErrorCode::InvalidArgument, "complete graph needs at least one vertex");
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i < f.n; ++i)
        for (Vertex j = i + 1; j < f.n; ++j)
            edges.emplace_back(i, j);
    return Graph(x_labels(f.n), edges);
}

Graph build(const family::StarComplete& f) {
    if (f.core == 0)
        throw Error(ErrorCode::InvalidArgument, "star graph needs a nonempty core");
    auto labels = x_labels(f.core);
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i < f.core; ++i)
        for (Vertex j = i + 1; j < f.core; ++j)
            edges.emplace_back(i, j);
    for (std::size_t y = 0; y < f.attachments.size(); ++y) {
        const Vertex yv = labels.size();
        labels.push_back("y" + std::to_string(y + 1));
        if (f.attachments[y].empty())
            throw Error(ErrorCode::InvalidArgument, "star graph vertex y" + std::to_string(y + 1) +
                                                        " has no neighbours (graph must be connected)");
        for (std::size_t x : f.attachments[y]) {
            if (x == 0 || x > f.core)
                throw Error(ErrorCode::InvalidArgument, "attachment x" + std::to_string(x) + " is not a core vertex");
            edges.emplace_back(x - 1, yv);
        }
    }
    return Graph(std::move(labels), edges);
}

Graph build(const family::NClique& f) {
    if (f.p == 0 || f.m.empty())
        throw Error(ErrorCode::InvalidArgument, "n-clique graph needs p >= 1 and at least one clique");
    auto labels = x_labels(f.p);
    std::vector<Graph::Edge> edges;
    for (std::size_t i = 0; i < f.m.size(); ++i) {
        if (f.m[i] == 0)
            throw Error(ErrorCode::InvalidArgument, "each m_i must be positive");
        std::vector<Vertex> clique;
        for (Vertex x = 0; x < f.p; ++x)
            clique.push_back(x);
        for (std::size_t j = 1; j <= f.m[i]; ++j) {
            clique.push_back(labels.size());
            labels.push_back(nclique_label(i + 1, j));
        }
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                if (clique[a] >= f.p || clique[b] >= f.p || i == 0)
                    edges.emplace_back(clique[a], clique[b]);
    }
    if (labels.size() > kMaxVertices)
        throw Error(ErrorCode::TooLarge, "n-clique graph exceeds 64 vertices");
    return Graph(std::move(labels), edges);
}

Graph build(const family::RandomTree& f) {
    if (f.n == 0)
        throw Error(ErrorCode::InvalidArgument, "tree needs at least one vertex");
    std::vector<Graph::Edge> edges;
    if (f.n == 2)
        edges.emplace_back(0, 1);
    if (f.n > 2) {
        // Decode a uniformly drawn Prüfer sequence.
        std::mt19937_64 rng(f.seed);
        std::vector<Vertex> code(f.n - 2);
        for (auto& c : code)
            c = draw_below(rng, f.n);
        std::vector<std::size_t> degree(f.n, 1);
        for (Vertex c : code)
            ++degree[c];
        for (Vertex c : code) {
            Vertex leaf = 0;
            while (degree[leaf] != 1)
                ++leaf;
            edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
            --degree[leaf];
            --degree[c];
        }
        Vertex u = f.n, v = f.n;
        for (Vertex i = 0; i < f.n; ++i) {
            if (degree[i] == 1) {
                (u == f.n ? u : v) = i;
            }
        }
        edges.emplace_back(u, v);
    }
    return Graph(x_labels(f.n), edges);
}

Graph build(const family::RandomGraph& f) {
    if (f.p < 0.0 || f.p > 1.0)
        throw Error(ErrorCode::InvalidArgument, "edge probability must lie in [0,1]");
    std::mt19937_64 rng(f.seed);
    std::vector<Graph::Edge> edges;
    for (Vertex i = 0; i < f.n; ++i)
        for (Vertex j = i + 1; j < f.n; ++j)
            if (draw_unit(rng) < f.p)
                edges.emplace_back(i, j);
    return Graph(x_labels(f.n), edges);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!s.empty() && s.back() == sep)
        out.emplace_back();
    return out;
}

std::size_t to_size(const std::string& s) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw Error(ErrorCode::InvalidArgument, "expected a nonnegative integer, got '" + s + "'");
    return static_cast<std::size_t>(v);
}

std::vector<std::size_t> to_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& part : split(s, ','))
        out.push_back(to_size(part));
    return out;
}

} // namespace

std::string nclique_label(std::size_t i, std::size_t j) {
    if (i < 10 && j < 10)
        return "y" + std::to_string(i) + std::to_string(j);
    return "y" + std::to_string(i) + "_" + std::to_string(j);
}

Graph make_family(const FamilySpec& spec) {
    return std::visit([](const auto& f) { return build(f); }, spec);
}

FamilySpec parse_family(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.empty())
        throw Error(ErrorCode::InvalidArgument, "empty family spec");
    const auto& kind = parts[0];
    auto need = [&](std::size_t count) {
        if (parts.size() != count + 1)
            throw Error(ErrorCode::InvalidArgument,
                        "family '" + kind + "' takes " + std::to_string(count) + " parameter(s)");
    };
    if (kind == "path") {
        need(1);
        return family::Path{to_size(parts[1])};
    }
    if (kind == "cycle") {
        need(1);
        return family::Cycle{to_size(parts[1])};
    }
    if (kind == "complete") {
        need(1);
        return family::Complete{to_size(parts[1])};
    }
    if (kind == "nclique") {
        need(2);
        return family::NClique{to_size(parts[1]), to_sizes(parts[2])};
    }
    if (kind == "star") {
        need(2);
        family::StarComplete f{to_size(parts[1]), {}};
        for (const auto& group : split(parts[2], '/'))
            f.attachments.push_back(to_sizes(group));
        return f;
    }
    if (kind == "random-tree") {
        if (parts.size() != 2 && parts.size() != 3)
            throw Error(ErrorCode::InvalidArgument, "random-tree takes n and an optional seed");
        return family::RandomTree{to_size(parts[1]), parts.size() == 3 ? to_size(parts[2]) : 0};
    }
    if (kind == "random-graph") {
        if (parts.size() != 3 && parts.size() != 4)
            throw Error(ErrorCode::InvalidArgument, "random-graph takes n, p and an optional seed");
        double p = 0;
        try {
            p = std::stod(parts[2]);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "bad edge probability '" + parts[2] + "'");
        }
        return family::RandomGraph{to_size(parts[1]), p, parts.size() == 4 ? to_size(parts[3]) : 0};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + kind + "'");
}

std::string describe(const FamilySpec& spec) {
    struct Visitor {
        std::string operator()(const family::Path& f) const { return "path:" + std::to_string(f.n); }
        std::string operator()(const family::Cycle& f) const { return "cycle:" + std::to_string(f.n); }
        std::string operator()(const family::Complete& f) const { return "complete:" + std::to_string(f.n); }
        std::string operator()(const family::StarComplete& f) const {
            std::string s = "star:" + std::to_string(f.core) + ":";
            for (std::size_t y = 0; y < f.attachments.size(); ++y) {
                if (y)
                    s += '/';
                for (std::size_t k = 0; k < f.attachments[y].size(); ++k)
                    s += (k ? "," : "") + std::to_string(f.attachments[y][k]);
            }
            return s;
        }
        std::string operator()(const family::NClique& f) const {
            std::string s = "nclique:" + std::to_string(f.p) + ":";
            for (std::size_t i = 0; i < f.m.size(); ++i)
                s += (i ? "," : "") + std::to_string(f.m[i]);
            return s;
        }
        std::string operator()(const family::RandomTree& f) const {
            return "random-tree:" + std::to_string(f.n) + ":" + std::to_string(f.seed);
        }
        std::string operator()(const family::RandomGraph& f) const {
            std::ostringstream s;
            s << "random-graph:" << f.n << ':' << f.p << ':' << f.seed;
            return s.str();
        }
    };
    return std::visit(Visitor{}, spec);
}

} // namespace cwl
