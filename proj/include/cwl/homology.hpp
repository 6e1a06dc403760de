#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwl/graph.hpp"

namespace cwl {

enum class Field { F2, Q };

std::string to_string(Field f);
Field parse_field(const std::string& s);

/// A boundary matrix column: (row index, coefficient) with coefficients in {±1}.
using SparseColumn = std::vector<std::pair<std::size_t, int>>;

/// Rank of the matrix with the given columns over the field. F2 uses
/// symmetric-difference column reduction; Q uses exact rational elimination.
std::size_t column_rank(std::vector<SparseColumn> columns, Field field);

/// A simplicial complex on vertices 0..nvertices-1 given by its facets. No
/// facets means the void complex; a single empty facet is the complex {∅}.
struct SimplicialComplexChain {
    std::size_t nvertices = 0;
    std::vector<VertexMask> facets;
};

/// All faces, grouped by dimension (index 0 is dimension -1, the empty face).
std::vector<std::vector<VertexMask>> faces_by_dimension(const SimplicialComplexChain& c);

/// dim H̃_d for d = -1 .. top dimension. The void complex gives an empty map;
/// {∅} gives {-1: 1}. With max_dim set, only d <= max_dim are computed.
std::map<int, std::size_t> reduced_homology_dims(const SimplicialComplexChain& c, Field field,
                                                 std::optional<int> max_dim = std::nullopt);

} // namespace cwl
