#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwl/betti.hpp"
#include "cwl/ideal.hpp"

namespace cwl {

enum class Verdict { True, False, Unknown };
std::string to_string(Verdict v);

inline constexpr std::size_t kDefaultQuotientBudget = 200000;

struct LinearQuotientsResult {
    enum class Status { Found, None, Unknown };

    Status status = Status::Unknown;
    /// Indices into ideal.gens(), in quotient order (only when found).
    std::vector<std::size_t> order;
    /// Placements tried.
    std::size_t nodes = 0;

    bool found() const { return status == Status::Found; }
};

std::string to_string(LinearQuotientsResult::Status s);

/// Depth-first search over generator orderings with full backtracking and a
/// memo of dead prefixes (a prefix's future depends only on its set). Lower
/// degree generators are tried first. Running out of budget gives Unknown.
LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal, std::size_t budget = kDefaultQuotientBudget);

/// Checks every colon ((u_1..u_{i-1}) : u_i) of the ordering directly.
bool is_linear_quotient_order(const MonomialIdeal& ideal, const std::vector<std::size_t>& order);

enum class ClMethod { Auto, Betti, Quotients };
ClMethod parse_cl_method(const std::string& s);
std::string to_string(ClMethod m);

struct ClOptions {
    ClMethod method = ClMethod::Auto;
    std::size_t budget = kDefaultQuotientBudget;
    /// Also check degrees max+1 .. max+extra_degrees (they never change the verdict).
    std::size_t extra_degrees = 0;
};

/// One truncation check: reg(I_{<=l}) <= l, which is equivalent to I_<l>
/// having a linear resolution.
struct ClStep {
    std::size_t degree = 0;
    bool linear = true;
    /// A Betti entry (i, j) with j - i > degree when not linear.
    std::optional<std::pair<int, int>> witness;
};

struct ClResult {
    Verdict verdict = Verdict::Unknown;
    /// "linear-quotients" or "betti"; empty when neither decided.
    std::string method;
    LinearQuotientsResult quotients;
    std::vector<ClStep> trace;
};

/// Auto tries linear quotients first and falls back to the truncation check.
ClResult componentwise_linear(const MonomialIdeal& ideal, Field field, const ClOptions& options = {});
bool is_componentwise_linear(const MonomialIdeal& ideal, Field field);

struct PolarizationCheck {
    bool betti_equal = false;
    LinearQuotientsResult::Status original = LinearQuotientsResult::Status::Unknown;
    LinearQuotientsResult::Status polarized = LinearQuotientsResult::Status::Unknown;

    bool quotients_agree() const {
        return original == polarized && original != LinearQuotientsResult::Status::Unknown;
    }
    bool holds() const { return betti_equal && quotients_agree(); }
};

PolarizationCheck polarization_check(const MonomialIdeal& ideal, Field field,
                                     std::size_t budget = kDefaultQuotientBudget);
bool polarization_betti_check(const MonomialIdeal& ideal, Field field);

} // namespace cwl
