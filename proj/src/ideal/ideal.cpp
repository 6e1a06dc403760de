#include "cwl/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "cwl/decomp.hpp"

namespace cwl {

namespace {

void check_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.ambient() != b.ambient())
        throw Error(ErrorCode::AmbientMismatch, "ideals live in different polynomial rings");
}

void require_edges(const Graph& g) {
    if (!g.has_edges())
        throw Error(ErrorCode::EdgelessGraph, "graph has no edges");
}

} // namespace

MonomialIdeal::MonomialIdeal(std::vector<std::string> ambient, std::vector<Monomial> gens)
    : ambient_(std::move(ambient)) {
    for (const auto& m : gens)
        if (m.nvars() != ambient_.size())
            throw Error(ErrorCode::AmbientMismatch, "generator does not match the ambient ring");
    gens_ = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::zero(std::vector<std::string> ambient) { return MonomialIdeal(std::move(ambient), {}); }

MonomialIdeal MonomialIdeal::unit(std::vector<std::string> ambient) {
    const std::size_t n = ambient.size();
    return MonomialIdeal(std::move(ambient), {Monomial(n)});
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::size_t MonomialIdeal::min_degree() const {
    if (gens_.empty())
        throw Error(ErrorCode::ZeroIdeal, "the zero ideal has no generators");
    return gens_.front().degree();
}

std::size_t MonomialIdeal::max_degree() const {
    if (gens_.empty())
        throw Error(ErrorCode::ZeroIdeal, "the zero ideal has no generators");
    return gens_.back().degree();
}

MonomialIdeal MonomialIdeal::generated_up_to(std::size_t d) const {
    std::vector<Monomial> low;
    for (const auto& m : gens_)
        if (m.degree() <= d)
            low.push_back(m);
    return MonomialIdeal(ambient_, std::move(low));
}

std::vector<Exponent> MonomialIdeal::max_exponents() const {
    std::vector<Exponent> out(nvars(), 0);
    for (const auto& m : gens_)
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::max(out[i], m[i]);
    return out;
}

std::string MonomialIdeal::to_string() const {
    if (gens_.empty())
        return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            out += ", ";
        out += gens_[i].to_string(ambient_);
    }
    return out + ")";
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g) {
    std::vector<VertexSet> out;
    const VertexMask all = g.vertices().mask();
    for (VertexMask s : maximal_independent_sets(g, all))
        out.emplace_back(all & ~s);
    std::sort(out.begin(), out.end());
    return out;
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (auto [u, v] : g.edges())
        gens.push_back(Monomial::from_support(g.size(), bit(u) | bit(v)));
    return MonomialIdeal(g.labels(), std::move(gens));
}

MonomialIdeal cover_ideal(const Graph& g) {
    require_edges(g);
    std::vector<Monomial> gens;
    for (VertexSet c : minimal_vertex_covers(g))
        gens.push_back(Monomial::from_support(g.size(), c.mask()));
    return MonomialIdeal(g.labels(), std::move(gens));
}

MonomialIdeal alexander_dual(const MonomialIdeal& i) {
    if (!i.is_squarefree())
        throw Error(ErrorCode::NotSquarefree, "Alexander duality is implemented for squarefree ideals");
    const std::size_t n = i.nvars();
    // Berge's algorithm: extend the minimal transversals one hyperedge at a time.
    std::vector<VertexMask> transversals{0};
    for (const auto& g : i.gens()) {
        const VertexMask edge = g.support_mask();
        std::vector<VertexMask> next;
        for (VertexMask t : transversals) {
            if (t & edge)
                next.push_back(t);
            else
                for (Vertex v : VertexSet(edge))
                    next.push_back(t | bit(v));
        }
        std::sort(next.begin(), next.end(),
                  [](VertexMask a, VertexMask b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        transversals.clear();
        for (VertexMask t : next) {
            bool minimal = std::none_of(transversals.begin(), transversals.end(),
                                        [&](VertexMask s) { return (s & ~t) == 0; });
            if (minimal)
                transversals.push_back(t);
        }
    }
    std::vector<Monomial> gens;
    for (VertexMask t : transversals)
        gens.push_back(Monomial::from_support(n, t));
    return MonomialIdeal(i.ambient(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_ambient(a, b);
    auto gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.ambient(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_ambient(a, b);
    std::unordered_set<Monomial, MonomialHash> seen;
    for (const auto& x : a.gens())
        for (const auto& y : b.gens())
            seen.insert(x * y);
    return MonomialIdeal(a.ambient(), std::vector<Monomial>(seen.begin(), seen.end()));
}

MonomialIdeal power(const MonomialIdeal& i, std::size_t k) {
    if (k < 1)
        throw Error(ErrorCode::InvalidArgument, "power needs k >= 1");
    MonomialIdeal out = i;
    for (std::size_t step = 1; step < k; ++step)
        out = product(out, i);
    return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_ambient(a, b);
    std::unordered_set<Monomial, MonomialHash> seen;
    for (const auto& x : a.gens())
        for (const auto& y : b.gens())
            seen.insert(x.lcm(y));
    return MonomialIdeal(a.ambient(), std::vector<Monomial>(seen.begin(), seen.end()));
}

MonomialIdeal symbolic_power_bruteforce(const Graph& g, std::size_t k) {
    require_edges(g);
    if (k < 1)
        throw Error(ErrorCode::InvalidArgument, "symbolic power needs k >= 1");
    const std::size_t n = g.size();
    std::optional<MonomialIdeal> acc;
    for (auto [u, v] : g.edges()) {
        // (x_u, x_v)^k is generated by x_u^a x_v^(k-a).
        std::vector<Monomial> gens;
        for (std::size_t a = 0; a <= k; ++a) {
            Monomial m(n);
            m[u] = static_cast<Exponent>(a);
            m[v] = static_cast<Exponent>(k - a);
            gens.push_back(std::move(m));
        }
        MonomialIdeal prime_power(g.labels(), std::move(gens));
        acc = acc ? intersect(*acc, prime_power) : prime_power;
    }
    return *acc;
}

MonomialIdeal symbolic_power_via_gk(const Graph& g, std::size_t k) {
    require_edges(g);
    if (k < 1)
        throw Error(ErrorCode::InvalidArgument, "symbolic power needs k >= 1");
    const auto layered = build_gk(g, k);
    std::vector<Monomial> gens;
    for (VertexSet cover : minimal_vertex_covers(layered.result)) {
        Monomial m(g.size());
        for (Vertex v : cover)
            ++m[v / k];
        gens.push_back(std::move(m));
    }
    return MonomialIdeal(g.labels(), std::move(gens));
}

PolarizationMap::PolarizationMap(std::vector<std::size_t> layers) : layers_(std::move(layers)) {
    for (std::size_t l : layers_) {
        offset_.push_back(total_);
        total_ += l;
    }
}

std::size_t PolarizationMap::index(std::size_t i, std::size_t p) const {
    if (i >= layers_.size() || p < 1 || p > layers_[i])
        throw Error(ErrorCode::InvalidArgument, "no such polarized variable");
    return offset_[i] + p - 1;
}

std::pair<std::size_t, std::size_t> PolarizationMap::origin(std::size_t polarized) const {
    if (polarized >= total_)
        throw Error(ErrorCode::InvalidArgument, "polarized index out of range");
    auto it = std::upper_bound(offset_.begin(), offset_.end(), polarized);
    // upper_bound skips past variables with zero layers, which share an offset.
    std::size_t i = static_cast<std::size_t>(it - offset_.begin()) - 1;
    return {i, polarized - offset_[i] + 1};
}

std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& i) {
    const auto top = i.max_exponents();
    std::vector<std::size_t> layers;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < i.nvars(); ++v) {
        layers.push_back(std::max<std::size_t>(top[v], 1));
        for (std::size_t p = 1; p <= layers.back(); ++p)
            names.push_back(i.ambient()[v] + "_" + std::to_string(p));
    }
    PolarizationMap map(std::move(layers));
    std::vector<Monomial> gens;
    for (const auto& m : i.gens()) {
        Monomial out(map.polarized_vars());
        for (std::size_t v = 0; v < i.nvars(); ++v)
            for (std::size_t p = 1; p <= m[v]; ++p)
                out[map.index(v, p)] = 1;
        gens.push_back(std::move(out));
    }
    return {MonomialIdeal(std::move(names), std::move(gens)), std::move(map)};
}

MonomialIdeal depolarize(const MonomialIdeal& p, const PolarizationMap& map,
                         const std::vector<std::string>& base_ambient) {
    if (p.nvars() != map.polarized_vars() || base_ambient.size() != map.base_vars())
        throw Error(ErrorCode::AmbientMismatch, "polarization map does not fit the ideal");
    std::vector<Monomial> gens;
    for (const auto& m : p.gens()) {
        Monomial out(map.base_vars());
        for (std::size_t v = 0; v < m.nvars(); ++v)
            out[map.origin(v).first] += m[v];
        gens.push_back(std::move(out));
    }
    return MonomialIdeal(base_ambient, std::move(gens));
}

MonomialIdeal embed(const MonomialIdeal& i, std::vector<std::string> ambient, const std::vector<std::size_t>& target) {
    if (target.size() != i.nvars())
        throw Error(ErrorCode::AmbientMismatch, "variable map has the wrong length");
    std::vector<Monomial> gens;
    for (const auto& m : i.gens()) {
        Monomial out(ambient.size());
        for (std::size_t v = 0; v < m.nvars(); ++v) {
            if (target[v] >= ambient.size())
                throw Error(ErrorCode::InvalidArgument, "variable map points outside the target ring");
            out[target[v]] += m[v];
        }
        gens.push_back(std::move(out));
    }
    return MonomialIdeal(std::move(ambient), std::move(gens));
}

std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0)
            out.emplace_back(0);
        return out;
    }
    Monomial m(n);
    // Lexicographically descending: put as much as possible on early variables.
    auto fill = [&](auto&& self, std::size_t var, std::size_t left) -> void {
        if (var == n - 1) {
            m[var] = static_cast<Exponent>(left);
            out.push_back(m);
            return;
        }
        for (std::size_t e = left + 1; e-- > 0;) {
            m[var] = static_cast<Exponent>(e);
            self(self, var + 1, left - e);
        }
        m[var] = 0;
    };
    fill(fill, 0, d);
    return out;
}

MonomialIdeal truncation(const MonomialIdeal& i, std::size_t l) {
    std::unordered_set<Monomial, MonomialHash> seen;
    for (const auto& g : i.gens()) {
        const std::size_t d = g.degree();
        if (d > l)
            continue;
        for (const auto& m : monomials_of_degree(i.nvars(), l - d))
            seen.insert(g * m);
    }
    return MonomialIdeal(i.ambient(), std::vector<Monomial>(seen.begin(), seen.end()));
}

} // namespace cwl
