#pragma once

#include <string>

#include "json.hpp"

#include "cwl/componentwise.hpp"
#include "cwl/decomp.hpp"

namespace cwl {

/// Predicates and certificates of one graph: simplicial vertices, chordal,
/// bipartite, VD, W-graph, a shedding decomposition with its B_G, and the
/// B-family verdict. Keys absent when they do not apply (no decomposition for
/// a non-VD graph).
nlohmann::json analyze_graph(const Graph& g);
std::string analysis_text(const nlohmann::json& analysis);

enum class PowerPath { Symbolic, Ordinary };
PowerPath parse_power_path(const std::string& s);

struct ClCheckOptions {
    std::size_t k = 2;
    PowerPath path = PowerPath::Symbolic;
    Field field = Field::F2;
    ClOptions cl;
};

/// Verdict on J(G)^(k) or J(G)^k with its certificate: the quotient ordering
/// (as generators) or the per-degree regularity trace.
nlohmann::json check_cl(const Graph& g, const ClCheckOptions& options);
std::string check_cl_text(const nlohmann::json& result);

} // namespace cwl
