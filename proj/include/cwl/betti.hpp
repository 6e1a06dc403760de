#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cwl/homology.hpp"
#include "cwl/ideal.hpp"

namespace cwl {

/// Graded Betti numbers β_{i,j} of the module I (not R/I). Only nonzero
/// entries are stored.
struct BettiTable {
    Field field = Field::F2;
    std::map<std::pair<int, int>, std::size_t> entries;

    std::size_t at(int i, int j) const;
    /// β_{i,j}(R/I): 1 at (0,0), otherwise β_{i-1,j}(I).
    std::size_t quotient_at(int i, int j) const;
    std::size_t total(int i) const;
    int projective_dimension() const;
    /// max j - i over nonzero entries; throws ZeroIdeal on an empty table.
    int regularity() const;

    /// Equal entries; the field is not compared.
    bool same_numbers(const BettiTable& other) const { return entries == other.entries; }
    bool operator==(const BettiTable&) const = default;

    /// Macaulay-style grid: columns i, rows j - i, "." for zero.
    std::string to_text(bool quotient = false) const;
};

nlohmann::json to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);

enum class BettiMethod { LcmLattice, Taylor };

/// Largest generator count accepted by the Taylor method.
inline constexpr std::size_t kTaylorMaxGenerators = 16;

struct MultigradedBetti {
    Monomial degree;
    int i = 0;
    std::size_t rank = 0;
};

/// Nonzero β_{i,b}(I), ordered by multidegree enumeration then i.
std::vector<MultigradedBetti> multigraded_betti(const MonomialIdeal& ideal, Field field,
                                                BettiMethod method = BettiMethod::LcmLattice);

BettiTable betti_table(const MonomialIdeal& ideal, Field field, BettiMethod method = BettiMethod::LcmLattice);

int regularity(const MonomialIdeal& ideal, Field field);

/// Some (i, j) with β_{i,j}(I) != 0 and j - i > bound, or nothing when
/// reg(I) <= bound. Stops at the first such entry.
std::optional<std::pair<int, int>> regularity_exceeds(const MonomialIdeal& ideal, int bound, Field field);

bool has_linear_resolution(const MonomialIdeal& ideal, Field field);

} // namespace cwl
