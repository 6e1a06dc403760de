#include "cwl/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cwl/error.hpp"

namespace cwl {

std::size_t BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

std::size_t BettiTable::quotient_at(int i, int j) const {
    if (i == 0)
        return j == 0 ? 1 : 0;
    return at(i - 1, j);
}

std::size_t BettiTable::total(int i) const {
    std::size_t sum = 0;
    for (const auto& [key, rank] : entries)
        if (key.first == i)
            sum += rank;
    return sum;
}

int BettiTable::projective_dimension() const {
    int pd = -1;
    for (const auto& [key, rank] : entries)
        pd = std::max(pd, key.first);
    return pd;
}

int BettiTable::regularity() const {
    if (entries.empty())
        throw Error(ErrorCode::ZeroIdeal, "regularity of an empty Betti table");
    int reg = entries.begin()->first.second - entries.begin()->first.first;
    for (const auto& [key, rank] : entries)
        reg = std::max(reg, key.second - key.first);
    return reg;
}

std::string BettiTable::to_text(bool quotient) const {
    std::map<std::pair<int, int>, std::size_t> shown;
    if (quotient) {
        shown[{0, 0}] = 1;
        for (const auto& [key, rank] : entries)
            shown[{key.first + 1, key.second}] = rank;
    } else {
        shown = entries;
    }
    if (shown.empty())
        return "(zero)\n";
    int max_i = 0;
    int min_row = shown.begin()->first.second - shown.begin()->first.first;
    int max_row = min_row;
    for (const auto& [key, rank] : shown) {
        max_i = std::max(max_i, key.first);
        min_row = std::min(min_row, key.second - key.first);
        max_row = std::max(max_row, key.second - key.first);
    }
    std::vector<std::size_t> totals(static_cast<std::size_t>(max_i) + 1, 0);
    for (const auto& [key, rank] : shown)
        totals[static_cast<std::size_t>(key.first)] += rank;
    std::vector<std::size_t> width(totals.size());
    for (std::size_t i = 0; i < totals.size(); ++i)
        width[i] = std::max(std::to_string(i).size(), std::to_string(totals[i]).size());

    std::size_t label_width = std::string("total:").size();
    for (int r = min_row; r <= max_row; ++r)
        label_width = std::max(label_width, std::to_string(r).size() + 1);

    std::ostringstream out;
    auto cell = [&](std::size_t i, const std::string& s) {
        out << ' ' << std::string(width[i] - s.size(), ' ') << s;
    };
    out << std::string(label_width, ' ');
    for (std::size_t i = 0; i < totals.size(); ++i)
        cell(i, std::to_string(i));
    out << '\n' << std::string(label_width - 6, ' ') << "total:";
    for (std::size_t i = 0; i < totals.size(); ++i)
        cell(i, std::to_string(totals[i]));
    out << '\n';
    for (int r = min_row; r <= max_row; ++r) {
        const std::string label = std::to_string(r) + ":";
        out << std::string(label_width - label.size(), ' ') << label;
        for (std::size_t i = 0; i < totals.size(); ++i) {
            auto it = shown.find({static_cast<int>(i), r + static_cast<int>(i)});
            cell(i, it == shown.end() ? "." : std::to_string(it->second));
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const BettiTable& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, rank] : t.entries)
        entries.push_back({key.first, key.second, rank});
    return {{"field", to_string(t.field)}, {"module", "I"}, {"entries", entries}};
}

BettiTable betti_from_json(const nlohmann::json& j) {
    try {
        BettiTable t;
        t.field = parse_field(j.at("field").get<std::string>());
        for (const auto& e : j.at("entries")) {
            const std::size_t rank = e.at(2).get<std::size_t>();
            if (rank != 0)
                t.entries[{e.at(0).get<int>(), e.at(1).get<int>()}] = rank;
        }
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("betti table json: ") + e.what());
    }
}

namespace {

using Bytes = std::vector<std::uint8_t>;

struct Packed {
    std::size_t n = 0;
    std::size_t m = 0;
    Bytes gens; // m rows of n exponents
    Bytes top;  // lcm of all generators

    const std::uint8_t* row(std::size_t g) const { return gens.data() + g * n; }
};

Packed pack(const MonomialIdeal& ideal) {
    if (ideal.is_zero())
        throw Error(ErrorCode::ZeroIdeal, "Betti numbers of the zero ideal");
    if (ideal.nvars() > 64)
        throw Error(ErrorCode::TooLarge, "Betti computation supports at most 64 variables");
    Packed p;
    p.n = ideal.nvars();
    p.m = ideal.size();
    p.gens.reserve(p.n * p.m);
    p.top.assign(p.n, 0);
    for (const auto& g : ideal.gens()) {
        for (std::size_t v = 0; v < p.n; ++v) {
            if (g[v] > 255)
                throw Error(ErrorCode::TooLarge, "exponent above 255 in Betti computation");
            const auto e = static_cast<std::uint8_t>(g[v]);
            p.gens.push_back(e);
            p.top[v] = std::max(p.top[v], e);
        }
    }
    return p;
}

bool divides(const std::uint8_t* a, const std::uint8_t* b, std::size_t n) {
    for (std::size_t v = 0; v < n; ++v)
        if (a[v] > b[v])
            return false;
    return true;
}

std::size_t degree_of(const Bytes& b) {
    std::size_t d = 0;
    for (auto e : b)
        d += e;
    return d;
}

bool multidegree_less(const Bytes& a, const Bytes& b) {
    const auto da = degree_of(a);
    const auto db = degree_of(b);
    if (da != db)
        return da < db;
    return a < b;
}

Monomial to_monomial(const Bytes& b) {
    std::vector<Exponent> e(b.begin(), b.end());
    return Monomial(std::move(e));
}

constexpr std::size_t kDivisorLimit = std::size_t{1} << 18;
constexpr std::size_t kLatticeLimit = std::size_t{1} << 22;

// Multidegrees that may carry Betti numbers: every divisor of the overall lcm
// when there are few, otherwise the lcm lattice built by closure. Visited in
// (degree, exponent vector) order.
std::vector<Bytes> candidates(const Packed& p) {
    std::size_t count = 1;
    for (auto e : p.top) {
        count *= static_cast<std::size_t>(e) + 1;
        if (count > kDivisorLimit)
            break;
    }
    std::vector<Bytes> out;
    if (count <= kDivisorLimit) {
        out.reserve(count);
        Bytes b(p.n, 0);
        for (;;) {
            out.push_back(b);
            std::size_t v = 0;
            while (v < p.n && b[v] == p.top[v])
                b[v++] = 0;
            if (v == p.n)
                break;
            ++b[v];
        }
    } else {
        std::unordered_set<std::string> seen;
        auto key = [](const Bytes& b) { return std::string(b.begin(), b.end()); };
        for (std::size_t g = 0; g < p.m; ++g) {
            Bytes b(p.row(g), p.row(g) + p.n);
            if (seen.insert(key(b)).second)
                out.push_back(std::move(b));
        }
        for (std::size_t idx = 0; idx < out.size(); ++idx) {
            for (std::size_t g = 0; g < p.m; ++g) {
                Bytes l = out[idx];
                const auto* r = p.row(g);
                for (std::size_t v = 0; v < p.n; ++v)
                    l[v] = std::max(l[v], r[v]);
                if (seen.insert(key(l)).second) {
                    out.push_back(std::move(l));
                    if (out.size() > kLatticeLimit)
                        throw Error(ErrorCode::TooLarge, "lcm lattice too large");
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), multidegree_less);
    return out;
}

// The upper Koszul complex K^b = {F ⊆ supp b : x^(b-F) ∈ I}, or its nerve when
// that has fewer vertices. Empty when K^b is acyclic or void (b outside the
// lcm lattice).
std::optional<SimplicialComplexChain> strand_complex(const Packed& p, const Bytes& b) {
    VertexMask supp = 0;
    for (std::size_t v = 0; v < p.n; ++v)
        if (b[v] != 0)
            supp |= bit(static_cast<Vertex>(v));

    std::vector<VertexMask> tight;
    VertexMask covered = 0;
    for (std::size_t g = 0; g < p.m; ++g) {
        const auto* r = p.row(g);
        if (!divides(r, b.data(), p.n))
            continue;
        VertexMask t = 0;
        for (Vertex v : VertexSet(supp))
            if (r[v] == b[v])
                t |= bit(v);
        if (t == 0 && supp != 0)
            return std::nullopt; // K^b is the full simplex
        tight.push_back(t);
        covered |= t;
    }
    if (tight.empty() || covered != supp)
        return std::nullopt; // a vertex in every facet: a cone

    std::sort(tight.begin(), tight.end(), [](VertexMask a, VertexMask c) {
        const int pa = std::popcount(a);
        const int pc = std::popcount(c);
        return pa != pc ? pa < pc : a < c;
    });
    tight.erase(std::unique(tight.begin(), tight.end()), tight.end());
    std::vector<VertexMask> minimal;
    for (VertexMask t : tight) {
        bool dominated = false;
        for (VertexMask s : minimal)
            if ((s & t) == s) {
                dominated = true;
                break;
            }
        if (!dominated)
            minimal.push_back(t);
    }

    std::vector<Vertex> verts = VertexSet(supp).to_vector();
    SimplicialComplexChain c;
    if (minimal.size() < verts.size()) {
        c.nvertices = minimal.size();
        for (Vertex v : verts) {
            VertexMask sigma = 0;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if ((minimal[j] & bit(v)) == 0)
                    sigma |= bit(static_cast<Vertex>(j));
            c.facets.push_back(sigma);
        }
    } else {
        c.nvertices = verts.size();
        for (VertexMask t : minimal) {
            VertexMask f = 0;
            for (std::size_t k = 0; k < verts.size(); ++k)
                if ((t & bit(verts[k])) == 0)
                    f |= bit(static_cast<Vertex>(k));
            c.facets.push_back(f);
        }
    }
    return c;
}

std::vector<MultigradedBetti> lattice_betti(const Packed& p, Field field) {
    std::vector<MultigradedBetti> out;
    for (const auto& b : candidates(p)) {
        auto c = strand_complex(p, b);
        if (!c)
            continue;
        for (auto [d, rank] : reduced_homology_dims(*c, field))
            if (rank != 0)
                out.push_back({to_monomial(b), d + 1, rank});
    }
    return out;
}

// Strands of the Taylor complex: subsets σ of generators with lcm(σ) = b,
// differential keeping only faces with the same lcm.
std::vector<MultigradedBetti> taylor_betti(const Packed& p, Field field) {
    if (p.m > kTaylorMaxGenerators)
        throw Error(ErrorCode::TooLarge, "Taylor method limited to " + std::to_string(kTaylorMaxGenerators) + " generators");
    const std::size_t subsets = std::size_t{1} << p.m;
    std::vector<Bytes> lcm(subsets, Bytes(p.n, 0));
    for (std::size_t s = 1; s < subsets; ++s) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
        const auto& prev = lcm[s & (s - 1)];
        const auto* r = p.row(low);
        for (std::size_t v = 0; v < p.n; ++v)
            lcm[s][v] = std::max(prev[v], r[v]);
    }
    std::map<Bytes, std::vector<std::size_t>> strands;
    for (std::size_t s = 1; s < subsets; ++s)
        strands[lcm[s]].push_back(s);

    std::vector<MultigradedBetti> out;
    for (const auto& [b, members] : strands) {
        std::vector<std::vector<std::size_t>> by_size(p.m + 1);
        for (auto s : members)
            by_size[static_cast<std::size_t>(std::popcount(s))].push_back(s);
        std::unordered_map<std::size_t, std::size_t> index;
        for (const auto& level : by_size)
            for (std::size_t k = 0; k < level.size(); ++k)
                index[level[k]] = k;
        // rank_of[s] = rank of the map from size s to size s - 1.
        std::vector<std::size_t> rank_of(p.m + 2, 0);
        for (std::size_t size = 2; size <= p.m; ++size) {
            std::vector<SparseColumn> cols;
            for (auto s : by_size[size]) {
                SparseColumn col;
                int sign = 1;
                for (std::size_t rest = s; rest != 0; rest &= rest - 1) {
                    const std::size_t face = s & ~(rest & (~rest + 1));
                    if (lcm[face] == b)
                        col.emplace_back(index.at(face), sign);
                    sign = -sign;
                }
                cols.push_back(std::move(col));
            }
            rank_of[size] = column_rank(std::move(cols), field);
        }
        for (std::size_t size = 1; size <= p.m; ++size) {
            const std::size_t h = by_size[size].size() - rank_of[size] - rank_of[size + 1];
            if (h != 0)
                out.push_back({to_monomial(b), static_cast<int>(size) - 1, h});
        }
    }
    return out;
}

} // namespace

std::vector<MultigradedBetti> multigraded_betti(const MonomialIdeal& ideal, Field field, BettiMethod method) {
    const Packed p = pack(ideal);
    auto out = method == BettiMethod::Taylor ? taylor_betti(p, field) : lattice_betti(p, field);
    std::sort(out.begin(), out.end(), [](const MultigradedBetti& a, const MultigradedBetti& b) {
        const auto da = a.degree.degree();
        const auto db = b.degree.degree();
        if (da != db)
            return da < db;
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.i < b.i;
    });
    return out;
}

BettiTable betti_table(const MonomialIdeal& ideal, Field field, BettiMethod method) {
    BettiTable t;
    t.field = field;
    for (const auto& e : multigraded_betti(ideal, field, method))
        t.entries[{e.i, static_cast<int>(e.degree.degree())}] += e.rank;
    return t;
}

int regularity(const MonomialIdeal& ideal, Field field) { return betti_table(ideal, field).regularity(); }

std::optional<std::pair<int, int>> regularity_exceeds(const MonomialIdeal& ideal, int bound, Field field) {
    const Packed p = pack(ideal);
    for (const auto& b : candidates(p)) {
        const int deg = static_cast<int>(degree_of(b));
        // β_{i,b} = dim H̃_{i-1}(K^b) matters only when deg - i > bound.
        const int max_dim = deg - bound - 2;
        if (max_dim < -1)
            continue;
        auto c = strand_complex(p, b);
        if (!c)
            continue;
        for (auto [d, rank] : reduced_homology_dims(*c, field, max_dim))
            if (rank != 0)
                return std::make_pair(d + 1, deg);
    }
    return std::nullopt;
}

bool has_linear_resolution(const MonomialIdeal& ideal, Field field) {
    if (!ideal.is_equigenerated())
        return false;
    return !regularity_exceeds(ideal, static_cast<int>(ideal.min_degree()), field);
}

} // namespace cwl
