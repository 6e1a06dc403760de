#pragma once

#include <string>
#include <vector>

#include "cwl/decomp.hpp"
#include "cwl/report.hpp"

namespace cwl {

struct SuiteInfo {
    std::string id;
    std::string summary;
    std::size_t default_max_n;
    std::size_t default_max_k;
};

/// The fixed suite catalog, in catalog order, followed by "census".
const std::vector<SuiteInfo>& suite_catalog();

/// Runs one suite; throws InvalidArgument for an unknown id.
VerificationReport run_suite(const std::string& id, const SuiteConfig& config);

/// Shedding and i-orders of a star graph built on a complete core of the given
/// size (core vertices first), following the direct construction for such graphs.
SheddingDecomposition star_decomposition(const Graph& g, std::size_t core);

/// Every star graph on a complete core with core + leaves <= max_n vertices,
/// one per isomorphism class; the second member is the core size.
std::vector<std::pair<Graph, std::size_t>> star_graphs(std::size_t max_n);

/// n-clique parameter lists (p, m_1 >= ... >= m_n) with p + sum m <= max_n.
std::vector<std::pair<std::size_t, std::vector<std::size_t>>> nclique_parameters(std::size_t max_n);

} // namespace cwl
