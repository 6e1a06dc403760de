#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cwl/ideal.hpp"

namespace cwl {

/// One generator per line ("x1^2*x3"), '#' comments, blank lines ignored. A
/// line "ring: x1 x2 x3" fixes the ambient variables; otherwise they are taken
/// from `ambient` or, failing that, collected in order of first appearance.
MonomialIdeal parse_ideal_text(std::istream& in, const std::optional<std::vector<std::string>>& ambient = std::nullopt);
MonomialIdeal parse_ideal_text(const std::string& text,
                               const std::optional<std::vector<std::string>>& ambient = std::nullopt);

/// Writes the "ring:" line followed by the generators.
std::string to_ideal_text(const MonomialIdeal& i);

/// {"ambient": [...], "gens": [[exponents], ...]}
nlohmann::json to_json(const MonomialIdeal& i);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

} // namespace cwl
