#include "cwl/homology.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include <gmpxx.h>

#include "cwl/error.hpp"

namespace cwl {

std::string to_string(Field f) { return f == Field::F2 ? "f2" : "q"; }

Field parse_field(const std::string& s) {
    if (s == "f2" || s == "F2" || s == "2")
        return Field::F2;
    if (s == "q" || s == "Q" || s == "0")
        return Field::Q;
    throw Error(ErrorCode::InvalidArgument, "unknown field '" + s + "' (expected f2 or q)");
}

namespace {

std::size_t rank_f2(std::vector<SparseColumn>& columns) {
    std::vector<std::vector<std::size_t>> cols;
    cols.reserve(columns.size());
    for (auto& c : columns) {
        std::vector<std::size_t> rows;
        for (auto [r, v] : c)
            if (v % 2 != 0)
                rows.push_back(r);
        std::sort(rows.begin(), rows.end());
        // Repeated rows cancel in pairs.
        std::vector<std::size_t> reduced;
        for (std::size_t r : rows) {
            if (!reduced.empty() && reduced.back() == r)
                reduced.pop_back();
            else
                reduced.push_back(r);
        }
        cols.push_back(std::move(reduced));
    }
    std::unordered_map<std::size_t, std::size_t> pivot_of; // lowest row -> column
    std::size_t rank = 0;
    std::vector<std::size_t> scratch;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            auto it = pivot_of.find(col.back());
            if (it == pivot_of.end())
                break;
            const auto& other = cols[it->second];
            scratch.clear();
            std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
            col.swap(scratch);
        }
        if (!col.empty()) {
            pivot_of.emplace(col.back(), j);
            ++rank;
        }
    }
    return rank;
}

std::size_t rank_q(std::vector<SparseColumn>& columns) {
    using Entry = std::pair<std::size_t, mpq_class>;
    std::vector<std::vector<Entry>> cols;
    cols.reserve(columns.size());
    for (auto& c : columns) {
        std::map<std::size_t, mpq_class> acc;
        for (auto [r, v] : c)
            acc[r] += v;
        std::vector<Entry> col;
        for (auto& [r, v] : acc)
            if (v != 0)
                col.emplace_back(r, v);
        cols.push_back(std::move(col));
    }
    std::unordered_map<std::size_t, std::size_t> pivot_of;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        auto& col = cols[j];
        while (!col.empty()) {
            auto it = pivot_of.find(col.back().first);
            if (it == pivot_of.end())
                break;
            const auto& other = cols[it->second];
            const mpq_class factor = col.back().second / other.back().second;
            std::vector<Entry> merged;
            merged.reserve(col.size() + other.size());
            std::size_t a = 0;
            std::size_t b = 0;
            while (a < col.size() || b < other.size()) {
                if (b == other.size() || (a < col.size() && col[a].first < other[b].first)) {
                    merged.push_back(col[a++]);
                } else if (a == col.size() || other[b].first < col[a].first) {
                    merged.emplace_back(other[b].first, -factor * other[b].second);
                    ++b;
                } else {
                    mpq_class v = col[a].second - factor * other[b].second;
                    if (v != 0)
                        merged.emplace_back(col[a].first, v);
                    ++a;
                    ++b;
                }
            }
            col.swap(merged);
        }
        if (!col.empty()) {
            pivot_of.emplace(col.back().first, j);
            ++rank;
        }
    }
    return rank;
}

} // namespace

std::size_t column_rank(std::vector<SparseColumn> columns, Field field) {
    return field == Field::F2 ? rank_f2(columns) : rank_q(columns);
}

std::vector<std::vector<VertexMask>> faces_by_dimension(const SimplicialComplexChain& c) {
    std::vector<std::vector<VertexMask>> out;
    if (c.facets.empty())
        return out;
    std::unordered_set<VertexMask> seen;
    for (VertexMask f : c.facets) {
        if (c.nvertices < 64 && (f >> c.nvertices) != 0)
            throw Error(ErrorCode::InvalidVertex, "facet uses a vertex outside the complex");
        // Enumerate subsets of f, skipping any already recorded via a bigger face.
        for (VertexMask s = f;; s = (s - 1) & f) {
            seen.insert(s);
            if (s == 0)
                break;
        }
    }
    int top = 0;
    for (VertexMask f : seen)
        top = std::max(top, std::popcount(f));
    out.resize(static_cast<std::size_t>(top) + 1);
    for (VertexMask f : seen)
        out[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    for (auto& level : out)
        std::sort(level.begin(), level.end());
    return out;
}

std::map<int, std::size_t> reduced_homology_dims(const SimplicialComplexChain& c, Field field, std::optional<int> max_dim) {
    std::map<int, std::size_t> out;
    const auto faces = faces_by_dimension(c);
    if (faces.empty())
        return out;
    const int top = static_cast<int>(faces.size()) - 2;
    const int last = max_dim ? std::min(*max_dim, top) : top;
    // rank_of[d + 1] = rank of the boundary map from dimension d to d - 1.
    std::vector<std::size_t> rank_of(faces.size() + 1, 0);
    for (int d = 0; d <= std::min(last + 1, top); ++d) {
        const auto& lower = faces[static_cast<std::size_t>(d)];
        const auto& upper = faces[static_cast<std::size_t>(d) + 1];
        std::unordered_map<VertexMask, std::size_t> index;
        index.reserve(lower.size());
        for (std::size_t i = 0; i < lower.size(); ++i)
            index.emplace(lower[i], i);
        std::vector<SparseColumn> columns;
        columns.reserve(upper.size());
        for (VertexMask f : upper) {
            SparseColumn col;
            int sign = 1;
            for (Vertex v : VertexSet(f)) {
                col.emplace_back(index.at(f & ~bit(v)), sign);
                sign = -sign;
            }
            columns.push_back(std::move(col));
        }
        rank_of[static_cast<std::size_t>(d) + 1] = column_rank(std::move(columns), field);
    }
    for (int d = -1; d <= last; ++d) {
        const std::size_t idx = static_cast<std::size_t>(d + 1);
        const std::size_t cycles = faces[idx].size() - rank_of[idx];
        const std::size_t boundaries = idx + 1 < rank_of.size() ? rank_of[idx + 1] : 0;
        out[d] = cycles - boundaries;
    }
    return out;
}

} // namespace cwl
