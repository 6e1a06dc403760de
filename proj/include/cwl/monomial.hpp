#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cwl/error.hpp"
#include "cwl/graph.hpp"

namespace cwl {

using Exponent = std::uint32_t;

/// Dense exponent vector over an ambient variable list.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exponents) : e_(std::move(exponents)) {}

    static Monomial variable(std::size_t nvars, std::size_t i);
    /// Squarefree monomial on the variables in `support` (indices < nvars <= 64).
    static Monomial from_support(std::size_t nvars, VertexMask support);

    std::size_t nvars() const noexcept { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    Exponent& operator[](std::size_t i) { return e_[i]; }
    const std::vector<Exponent>& exponents() const noexcept { return e_; }

    std::size_t degree() const;
    bool is_one() const;
    bool is_squarefree() const;
    Exponent max_exponent() const;
    /// Variables with nonzero exponent as a bitmask; requires nvars <= 64.
    VertexMask support_mask() const;

    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial gcd(const Monomial& other) const;
    Monomial operator*(const Monomial& other) const;
    /// Exact quotient; throws InvalidArgument when other does not divide *this.
    Monomial operator/(const Monomial& other) const;

    bool operator==(const Monomial&) const = default;
    /// Plain lexicographic comparison of exponent vectors.
    std::strong_ordering operator<=>(const Monomial& other) const { return e_ <=> other.e_; }

    /// "x1^2*x3"; "1" for the unit monomial.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<Exponent> e_;
};

/// Generator order used everywhere: degree ascending, then the exponent vector
/// lexicographically descending (so x1 before x2).
bool generator_less(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Removes non-minimal and duplicate generators and sorts by generator_less.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

/// Parses "x1^2*x3" against the names; "1" is the unit monomial.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& names);

} // namespace cwl
