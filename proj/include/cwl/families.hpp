#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cwl/graph.hpp"

namespace cwl {

namespace family {

struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Complete { std::size_t n; };

/// Star graph based on a complete graph: complete core x1..x_core, plus
/// independent vertices y1..ym where y_i is adjacent to the core vertices
/// listed (1-based) in attachments[i].
struct StarComplete {
    std::size_t core;
    std::vector<std::vector<std::size_t>> attachments;
};

/// n-clique graph Γ_{p,m_1,...,m_n}: cliques on {x_1..x_p, y_i1..y_im_i}.
struct NClique {
    std::size_t p;
    std::vector<std::size_t> m;
};

struct RandomTree {
    std::size_t n;
    std::uint64_t seed;
};

struct RandomGraph {
    std::size_t n;
    double p;
    std::uint64_t seed;
};

} // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Complete, family::StarComplete,
                                family::NClique, family::RandomTree, family::RandomGraph>;

Graph make_family(const FamilySpec& spec);

/// Parses "path:5", "cycle:6", "complete:4", "nclique:2:1,1", "random-tree:8:3",
/// "random-graph:8:0.4:1", "star:3:1,2/3" (core size, then '/'-separated 1-based
/// attachment lists).
FamilySpec parse_family(const std::string& text);
std::string describe(const FamilySpec& spec);

/// Label of y_ij in an n-clique graph ("y12"; "y1_12" style once an index has two digits).
std::string nclique_label(std::size_t i, std::size_t j);

} // namespace cwl
