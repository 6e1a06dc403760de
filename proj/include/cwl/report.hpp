#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cwl/componentwise.hpp"

namespace cwl {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::size_t kDefaultGeneratorCap = 350;

/// Limits shared by every suite. Unset max_n / max_k / samples take the
/// suite's own default.
struct SuiteConfig {
    std::optional<std::size_t> max_n;
    std::optional<std::size_t> max_k;
    std::optional<std::size_t> samples;
    Field field = Field::F2;
    std::uint64_t seed = 0;
    std::size_t budget = kDefaultQuotientBudget;
    /// Largest generator count sent to the homological CL check.
    std::size_t generator_cap = kDefaultGeneratorCap;
    /// Worker threads; 0 means one per hardware thread.
    unsigned jobs = 1;
};

struct Failure {
    std::string graph;
    nlohmann::json params = nlohmann::json::object();
    std::string expected;
    std::string got;

    bool operator==(const Failure&) const = default;
};

struct Skip {
    std::string graph;
    nlohmann::json params = nlohmann::json::object();
    std::string reason;

    bool operator==(const Skip&) const = default;
};

struct VerificationReport {
    std::string suite;
    std::size_t instances_tested = 0;
    std::vector<Failure> failures;
    std::vector<Skip> skipped;
    /// Counts and observations that carry no pass/fail meaning.
    std::vector<std::string> notes;
    /// Resolved limits actually used.
    nlohmann::json config = nlohmann::json::object();
    double elapsed_seconds = 0;

    bool passed() const { return failures.empty(); }
    bool operator==(const VerificationReport&) const = default;
};

/// Timing is left out unless asked for, so reports are byte-stable.
nlohmann::json to_json(const VerificationReport& r, bool include_timing = false);
VerificationReport report_from_json(const nlohmann::json& j);

/// Human-readable summary, one line per failure or skip.
std::string to_text(const VerificationReport& r);

} // namespace cwl
