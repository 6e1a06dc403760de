#include "cwl/graph_io.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace cwl {

Graph parse_edge_list(std::istream& in) {
    std::vector<std::string> labels;
    std::map<std::string, Vertex, std::less<>> index;
    std::vector<Graph::Edge> edges;

    auto intern = [&](const std::string& label, std::size_t line_no) {
        auto it = index.find(label);
        if (it != index.end())
            return it->second;
        if (labels.size() == kMaxVertices)
            throw ParseError(line_no, "more than 64 vertices");
        index.emplace(label, labels.size());
        labels.push_back(label);
        return labels.size() - 1;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream tokens(line);
        std::vector<std::string> words;
        for (std::string w; tokens >> w;)
            words.push_back(w);
        if (words.empty())
            continue;
        if (words.size() > 2)
            throw ParseError(line_no, "expected 'label1 label2', got " + std::to_string(words.size()) + " tokens");
        Vertex u = intern(words[0], line_no);
        if (words.size() == 2) {
            if (words[0] == words[1])
                throw ParseError(line_no, "self-loop at '" + words[0] + "'");
            Vertex v = intern(words[1], line_no);
            edges.emplace_back(u, v);
        }
    }
    return Graph(std::move(labels), edges);
}

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& l : g.labels())
        out << l << '\n';
    for (const auto& [a, b] : g.labeled_edges())
        out << a << ' ' << b << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' '))
        line.remove_suffix(1);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    if (line.empty())
        throw ParseError(1, "empty graph6 string");
    for (char c : line)
        if (c < 63 || c > 126)
            throw ParseError(1, "invalid graph6 character");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] != 126) {
        n = static_cast<std::size_t>(line[0] - 63);
        pos = 1;
    } else {
        if (line.size() < 4 || line[1] == 126)
            throw ParseError(1, "graph6 vertex count out of supported range");
        n = (static_cast<std::size_t>(line[1] - 63) << 12) | (static_cast<std::size_t>(line[2] - 63) << 6) |
            static_cast<std::size_t>(line[3] - 63);
        pos = 4;
    }
    if (n > kMaxVertices)
        throw ParseError(1, "graph6 graph has more than 64 vertices");

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (line.size() - pos != bytes)
        throw ParseError(1, "graph6 length does not match vertex count");

    std::vector<Graph::Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            int byte = line[pos + k / 6] - 63;
            if (byte & (1 << (5 - k % 6)))
                edges.emplace_back(i, j);
        }
    }
    return Graph::with_default_labels(n, edges);
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.size();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            std::string msg = e.what();
            throw ParseError(line_no, msg.substr(msg.find(':') + 2));
        }
    }
    return out;
}

} // namespace cwl
