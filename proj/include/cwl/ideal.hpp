#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cwl/graph.hpp"
#include "cwl/monomial.hpp"

namespace cwl {

/// Monomial ideal stored by its minimal generators, sorted by generator_less.
/// The zero ideal has no generators; the unit ideal has the single generator 1.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(std::vector<std::string> ambient, std::vector<Monomial> gens);

    static MonomialIdeal zero(std::vector<std::string> ambient);
    static MonomialIdeal unit(std::vector<std::string> ambient);

    const std::vector<std::string>& ambient() const noexcept { return ambient_; }
    std::size_t nvars() const noexcept { return ambient_.size(); }
    const std::vector<Monomial>& gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const;
    bool is_squarefree() const;
    bool contains(const Monomial& m) const;
    std::size_t min_degree() const;
    std::size_t max_degree() const;
    bool is_equigenerated() const { return min_degree() == max_degree(); }
    /// Generators of degree at most d.
    MonomialIdeal generated_up_to(std::size_t d) const;
    /// Largest exponent of each variable over the generators.
    std::vector<Exponent> max_exponents() const;

    bool operator==(const MonomialIdeal&) const = default;

    /// "(x1*x3, x2*x4)"; "(0)" for the zero ideal.
    std::string to_string() const;

private:
    std::vector<std::string> ambient_;
    std::vector<Monomial> gens_;
};

/// Inclusion-minimal vertex covers (complements of maximal independent sets),
/// sorted by mask. An edgeless graph gives {∅}.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g);

MonomialIdeal edge_ideal(const Graph& g);
/// J(G); throws EdgelessGraph when g has no edges.
MonomialIdeal cover_ideal(const Graph& g);

/// Squarefree Alexander dual via minimal transversals of the generator
/// supports. (0) and (1) are exchanged. Throws NotSquarefree.
MonomialIdeal alexander_dual(const MonomialIdeal& i);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& i, std::size_t k);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// ∩ over edges of (x_i, x_j)^k, folded in edge order.
MonomialIdeal symbolic_power_bruteforce(const Graph& g, std::size_t k);
/// Minimal vertex covers of G_k, each depolarized by counting layers.
MonomialIdeal symbolic_power_via_gk(const Graph& g, std::size_t k);

/// (variable, layer) -> polarized variable index, layers ordered (i asc, p asc).
class PolarizationMap {
public:
    PolarizationMap() = default;
    explicit PolarizationMap(std::vector<std::size_t> layers);

    std::size_t base_vars() const noexcept { return layers_.size(); }
    std::size_t layers(std::size_t i) const { return layers_.at(i); }
    std::size_t index(std::size_t i, std::size_t p) const;
    std::size_t polarized_vars() const noexcept { return total_; }
    /// Base variable and layer of a polarized index.
    std::pair<std::size_t, std::size_t> origin(std::size_t polarized) const;

private:
    std::vector<std::size_t> layers_;
    std::vector<std::size_t> offset_;
    std::size_t total_ = 0;
};

/// x_i^a -> x_{i,1}...x_{i,a}; variable i gets max(largest exponent, 1) layers
/// named "<name>_<p>".
std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& i);
MonomialIdeal depolarize(const MonomialIdeal& p, const PolarizationMap& map,
                         const std::vector<std::string>& base_ambient);

/// Renames variables: variable v of i becomes variable target[v] of `ambient`.
MonomialIdeal embed(const MonomialIdeal& i, std::vector<std::string> ambient, const std::vector<std::size_t>& target);

/// I_<l>: the ideal generated by the degree-l monomials of I.
MonomialIdeal truncation(const MonomialIdeal& i, std::size_t l);

/// All monomials of degree d in n variables, in generator order.
std::vector<Monomial> monomials_of_degree(std::size_t n, std::size_t d);

} // namespace cwl
