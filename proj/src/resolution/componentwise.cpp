#include "cwl/componentwise.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "cwl/error.hpp"

namespace cwl {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::True:
        return "true";
    case Verdict::False:
        return "false";
    case Verdict::Unknown:
        break;
    }
    return "unknown";
}

std::string to_string(LinearQuotientsResult::Status s) {
    switch (s) {
    case LinearQuotientsResult::Status::Found:
        return "found";
    case LinearQuotientsResult::Status::None:
        return "none";
    case LinearQuotientsResult::Status::Unknown:
        break;
    }
    return "unknown";
}

ClMethod parse_cl_method(const std::string& s) {
    if (s == "auto")
        return ClMethod::Auto;
    if (s == "betti")
        return ClMethod::Betti;
    if (s == "quotients")
        return ClMethod::Quotients;
    throw Error(ErrorCode::InvalidArgument, "unknown method '" + s + "' (expected auto, betti or quotients)");
}

std::string to_string(ClMethod m) {
    switch (m) {
    case ClMethod::Auto:
        return "auto";
    case ClMethod::Betti:
        return "betti";
    case ClMethod::Quotients:
        break;
    }
    return "quotients";
}

namespace {

// Support of u / gcd(u, w) and whether it is a single variable.
struct Quotient {
    VertexMask support = 0;
    bool linear = false;
};

Quotient quotient(const Monomial& u, const Monomial& w) {
    Quotient q;
    std::size_t deg = 0;
    for (std::size_t t = 0; t < u.nvars(); ++t) {
        if (u[t] > w[t]) {
            q.support |= bit(static_cast<Vertex>(t));
            deg += u[t] - w[t];
        }
    }
    q.linear = deg == 1;
    return q;
}

class QuotientSearch {
public:
    QuotientSearch(const MonomialIdeal& ideal, std::size_t budget) : gens_(ideal.gens()), budget_(budget) {}

    LinearQuotientsResult run() {
        LinearQuotientsResult r;
        const std::size_t m = gens_.size();
        State root{std::vector<std::uint64_t>((m + 63) / 64, 0), std::vector<VertexMask>(m, 0),
                   std::vector<std::vector<VertexMask>>(m)};
        if (extend(root)) {
            r.status = LinearQuotientsResult::Status::Found;
            r.order = order_;
        } else {
            r.status = exhausted_ ? LinearQuotientsResult::Status::Unknown : LinearQuotientsResult::Status::None;
        }
        r.nodes = nodes_;
        return r;
    }

private:
    struct State {
        std::vector<std::uint64_t> placed;
        // Variables that are themselves generators of the colon so far.
        std::vector<VertexMask> vars;
        // Supports of colon generators not yet divisible by one of those variables.
        std::vector<std::vector<VertexMask>> pending;
    };

    static bool is_placed(const State& s, std::size_t i) { return (s.placed[i / 64] >> (i % 64)) & 1; }

    static std::string key(const State& s) {
        return std::string(reinterpret_cast<const char*>(s.placed.data()), s.placed.size() * sizeof(std::uint64_t));
    }

    State place(const State& s, std::size_t u) const {
        State next = s;
        next.placed[u / 64] |= std::uint64_t{1} << (u % 64);
        for (std::size_t w = 0; w < gens_.size(); ++w) {
            if (is_placed(next, w))
                continue;
            const Quotient q = quotient(gens_[u], gens_[w]);
            auto& vars = next.vars[w];
            auto& pending = next.pending[w];
            if (q.linear) {
                vars |= q.support;
                std::erase_if(pending, [&](VertexMask p) { return (p & vars) != 0; });
            } else if ((q.support & vars) == 0) {
                pending.push_back(q.support);
            }
        }
        return next;
    }

    bool extend(const State& s) {
        if (order_.size() == gens_.size())
            return true;
        const std::string k = key(s);
        if (dead_.contains(k))
            return false;
        for (std::size_t u = 0; u < gens_.size(); ++u) {
            if (is_placed(s, u) || !s.pending[u].empty())
                continue;
            if (++nodes_ > budget_) {
                exhausted_ = true;
                return false;
            }
            order_.push_back(u);
            if (extend(place(s, u)))
                return true;
            order_.pop_back();
            if (exhausted_)
                return false;
        }
        dead_.insert(k);
        return false;
    }

    const std::vector<Monomial>& gens_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
    std::vector<std::size_t> order_;
    std::unordered_set<std::string> dead_;
};

} // namespace

LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal, std::size_t budget) {
    if (ideal.is_zero())
        throw Error(ErrorCode::ZeroIdeal, "linear quotients of the zero ideal");
    if (ideal.nvars() > 64)
        throw Error(ErrorCode::TooLarge, "linear quotients support at most 64 variables");
    return QuotientSearch(ideal, budget).run();
}

bool is_linear_quotient_order(const MonomialIdeal& ideal, const std::vector<std::size_t>& order) {
    const auto& gens = ideal.gens();
    if (order.size() != gens.size())
        return false;
    std::vector<bool> seen(gens.size(), false);
    for (std::size_t i : order) {
        if (i >= gens.size() || seen[i])
            return false;
        seen[i] = true;
    }
    for (std::size_t pos = 1; pos < order.size(); ++pos) {
        const Monomial& u = gens[order[pos]];
        std::vector<Monomial> colon;
        for (std::size_t prev = 0; prev < pos; ++prev) {
            const Monomial& w = gens[order[prev]];
            colon.push_back(w / w.gcd(u));
        }
        for (const auto& g : minimalize(std::move(colon)))
            if (g.degree() != 1)
                return false;
    }
    return true;
}

ClResult componentwise_linear(const MonomialIdeal& ideal, Field field, const ClOptions& options) {
    if (ideal.is_zero())
        throw Error(ErrorCode::ZeroIdeal, "componentwise linearity of the zero ideal");
    ClResult r;
    if (options.method != ClMethod::Betti) {
        r.quotients = has_linear_quotients(ideal, options.budget);
        if (r.quotients.found()) {
            r.verdict = Verdict::True;
            r.method = "linear-quotients";
            return r;
        }
        if (options.method == ClMethod::Quotients)
            return r;
    }
    r.method = "betti";
    r.verdict = Verdict::True;
    const std::size_t lo = ideal.min_degree();
    const std::size_t hi = ideal.max_degree() + options.extra_degrees;
    std::size_t last_size = 0;
    std::optional<std::size_t> last_degree;
    for (std::size_t l = lo; l <= hi; ++l) {
        const MonomialIdeal part = ideal.generated_up_to(l);
        ClStep step;
        step.degree = l;
        if (part.size() == last_size && last_degree && l <= ideal.max_degree()) {
            // Same ideal as at the previous degree, whose regularity is already below l.
            step.linear = r.trace.back().linear;
        } else {
            step.witness = regularity_exceeds(part, static_cast<int>(l), field);
            step.linear = !step.witness;
        }
        last_size = part.size();
        last_degree = l;
        r.trace.push_back(step);
        if (!step.linear) {
            r.verdict = Verdict::False;
            break;
        }
    }
    return r;
}

bool is_componentwise_linear(const MonomialIdeal& ideal, Field field) {
    return componentwise_linear(ideal, field).verdict == Verdict::True;
}

PolarizationCheck polarization_check(const MonomialIdeal& ideal, Field field, std::size_t budget) {
    const auto [polar, map] = polarize(ideal);
    PolarizationCheck c;
    c.betti_equal = betti_table(ideal, field).same_numbers(betti_table(polar, field));
    c.original = has_linear_quotients(ideal, budget).status;
    c.polarized = has_linear_quotients(polar, budget).status;
    return c;
}

bool polarization_betti_check(const MonomialIdeal& ideal, Field field) { return polarization_check(ideal, field).holds(); }

} // namespace cwl
