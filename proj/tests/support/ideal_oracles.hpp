#pragma once

// Reference computations for ideals, driven by membership tests over a
// bounded box of exponent vectors instead of generator arithmetic.

#include <functional>
#include <set>
#include <vector>

#include "cwl/graph.hpp"

namespace cwl::oracle {

using Exps = std::vector<unsigned>;

// Minimal elements of a monomial set closed under multiplication, given by a
// membership predicate and a box bound that contains every minimal element.
inline std::set<Exps> minimal_members(std::size_t n, unsigned bound, const std::function<bool(const Exps&)>& member) {
    std::set<Exps> out;
    Exps e(n, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
        if (i == n) {
            if (!member(e))
                return;
            for (std::size_t j = 0; j < n; ++j) {
                if (e[j] == 0)
                    continue;
                --e[j];
                bool below = member(e);
                ++e[j];
                if (below)
                    return;
            }
            out.insert(e);
            return;
        }
        for (unsigned x = 0; x <= bound; ++x) {
            e[i] = x;
            walk(i + 1);
        }
        e[i] = 0;
    };
    walk(0);
    return out;
}

// J(G)^(k): exponent sum at least k on every edge.
inline std::set<Exps> symbolic_power(const Graph& g, unsigned k) {
    return minimal_members(g.size(), k, [&](const Exps& e) {
        for (auto [u, v] : g.edges())
            if (e[u] + e[v] < k)
                return false;
        return true;
    });
}

inline bool divides(const Exps& a, const Exps& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

// Membership in the product of k copies of the ideal generated by `gens`:
// some k-fold product of generators divides e.
inline bool in_power(const std::vector<Exps>& gens, unsigned k, const Exps& e) {
    if (k == 0)
        return true;
    for (const auto& g : gens) {
        if (!divides(g, e))
            continue;
        Exps rest = e;
        for (std::size_t i = 0; i < rest.size(); ++i)
            rest[i] -= g[i];
        if (in_power(gens, k - 1, rest))
            return true;
    }
    return false;
}

inline bool in_ideal(const std::vector<Exps>& gens, const Exps& e) { return in_power(gens, 1, e); }

} // namespace cwl::oracle
