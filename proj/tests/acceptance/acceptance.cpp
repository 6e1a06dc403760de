// Acceptance run: one line per criterion, "PASS" or "FAIL", with the measured
// time against its limit. Exit status is nonzero when any criterion fails.
//
//   acceptance            run all criteria
//   acceptance 5 7        run only the listed ones

#include <bit>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cwl/analyze.hpp"
#include "cwl/enumerate.hpp"
#include "cwl/families.hpp"
#include "cwl/graph_io.hpp"
#include "cwl/suites.hpp"
#include "support/graph_oracles.hpp"
#include "support/ideal_oracles.hpp"
#include "support/named_graphs.hpp"

using namespace cwl;
using namespace cwl::testing;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

// Collects failed checks; the first few are echoed in the detail line.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok) {
            if (failed_.size() < 5)
                failed_.push_back(what);
            ++failures_;
        }
    }
    std::size_t total() const { return total_; }
    bool ok() const { return failures_ == 0; }

    Outcome outcome(std::string detail) const {
        if (failures_ > 0) {
            detail += "; " + std::to_string(failures_) + " failed:";
            for (const auto& f : failed_)
                detail += " [" + f + "]";
        }
        return {ok(), detail};
    }

private:
    std::size_t total_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> failed_;
};

Outcome from_report(const VerificationReport& r, bool skips_fail) {
    std::ostringstream d;
    d << r.instances_tested << " instances, " << r.failures.size() << " failures, " << r.skipped.size() << " skipped";
    for (const auto& n : r.notes)
        if (n.find(':') != std::string::npos)
            d << "; " << n;
    for (std::size_t i = 0; i < r.failures.size() && i < 3; ++i)
        d << " [" << r.failures[i].graph << ' ' << r.failures[i].params.dump() << " expected " << r.failures[i].expected
          << " got " << r.failures[i].got << ']';
    for (const auto& s : r.skipped)
        d << " [skipped " << s.graph << ' ' << s.params.dump() << ": " << s.reason << ']';
    return {r.passed() && !(skips_fail && !r.skipped.empty()), d.str()};
}

SuiteConfig limits(std::size_t max_n, std::size_t max_k) {
    SuiteConfig c;
    c.max_n = max_n;
    c.max_k = max_k;
    return c;
}

std::vector<Graph> connected_with_edges(std::size_t max_n, bool bipartite = false) {
    std::vector<Graph> out;
    for (auto& g : enumerate_graphs_up_to(max_n, {.connected = true, .bipartite = bipartite}))
        if (g.edge_count() > 0)
            out.push_back(std::move(g));
    return out;
}

std::set<oracle::Exps> gen_set(const MonomialIdeal& i) {
    std::set<oracle::Exps> out;
    for (const auto& g : i.gens())
        out.emplace(g.exponents().begin(), g.exponents().end());
    return out;
}

std::string labels(const Graph& g, VertexSet s) {
    std::string out;
    for (Vertex v : s)
        out += (out.empty() ? "" : ",") + g.label(v);
    return "{" + out + "}";
}

ClOptions homological() {
    ClOptions o;
    o.method = ClMethod::Betti;
    return o;
}

Outcome fakhari_bridge() { return from_report(run_suite("fakhari", limits(5, 3)), true); }

Outcome polarization_invariance() { return from_report(run_suite("polar-betti", limits(4, 3)), true); }

Outcome layer_collapse() { return from_report(run_suite("layer-collapse", limits(6, 4)), true); }

Outcome not_cl_propagation() { return from_report(run_suite("not-cl-propagation", limits(5, 4)), true); }

Outcome whiskered_example_checks() {
    Checks c;
    const Graph g = whiskered_example();
    c.expect(is_vertex_decomposable(g), "G vertex decomposable");
    for (Field f : {Field::F2, Field::Q}) {
        const auto field = to_string(f);
        c.expect(componentwise_linear(cover_ideal(g), f, homological()).verdict == Verdict::True, "J(G) CL over " + field);
        const auto sq = componentwise_linear(symbolic_power_bruteforce(g, 2), f, homological());
        c.expect(sq.verdict == Verdict::False, "J(G)^(2) not CL over " + field);
    }
    const auto fam = bg_family_check(g);
    c.expect(!fam.holds, "bg_family_vd false");
    c.expect(fam.witness && *fam.witness == VertexSet{*g.find("x6")}, "witness A = {x6}");
    return c.outcome(std::to_string(c.total()) + " checks; witness " +
                     (fam.witness ? labels(g, *fam.witness) : std::string("none")));
}

Outcome diamond_and_cliques() {
    Checks c;
    const Graph d = diamond();
    const auto dec = shedding_decomposition(d);
    c.expect(dec.has_value(), "diamond vertex decomposable");
    if (dec)
        c.expect(canonical_code(build_bg(d, *dec)) == canonical_code(make_family(family::Cycle{4})), "B(diamond) = C4");
    for (Field f : {Field::F2, Field::Q})
        c.expect(componentwise_linear(symbolic_power_bruteforce(d, 2), f, homological()).verdict == Verdict::False,
                 "J(diamond)^(2) not CL over " + to_string(f));

    const Graph g211 = make_family(family::NClique{2, {1, 1}});
    c.expect(canonical_code(g211) == canonical_code(d), "Gamma(2,1,1) is the diamond");
    std::string orders;
    for (const auto& spec : {family::NClique{2, {2, 2}}, family::NClique{1, {3, 2, 1}}}) {
        const auto ideal = symbolic_power_bruteforce(make_family(spec), 2);
        const auto lq = has_linear_quotients(ideal);
        c.expect(lq.found(), describe(spec) + " linear quotients found");
        if (lq.found())
            c.expect(is_linear_quotient_order(ideal, lq.order), describe(spec) + " order passes the colon check");
        orders += "; " + describe(spec) + " order over " + std::to_string(ideal.size()) + " generators";
    }
    return c.outcome(std::to_string(c.total()) + " checks" + orders);
}

Outcome bipartite_main() {
    // VD <=> CL(J^2) by the homological check over both fields, under the
    // generator cap. A found linear-quotient order is cross-checked, not trusted.
    std::size_t graphs = 0, vd_count = 0, with_quotients = 0;
    std::vector<std::string> capped;
    Checks c;
    for (const auto& g : connected_with_edges(7, true)) {
        ++graphs;
        const bool vd = is_vertex_decomposable(g);
        vd_count += vd;
        const auto j2 = power(cover_ideal(g), 2);
        const bool lq = has_linear_quotients(j2).found();
        with_quotients += lq;
        if (j2.size() > kDefaultGeneratorCap) {
            capped.push_back(to_graph6(g) + " (" + std::to_string(j2.size()) + " generators)");
            continue;
        }
        for (Field f : {Field::F2, Field::Q}) {
            const bool cl = componentwise_linear(j2, f, homological()).verdict == Verdict::True;
            c.expect(cl == vd, to_graph6(g) + " over " + to_string(f));
            c.expect(!lq || cl, to_graph6(g) + " linear quotients without CL over " + to_string(f));
        }
    }
    const double share = graphs ? static_cast<double>(capped.size()) / static_cast<double>(graphs) : 0.0;
    c.expect(share < 0.05, "capped share " + std::to_string(share));
    std::string detail = std::to_string(graphs) + " graphs, " + std::to_string(vd_count) + " VD, " +
                         std::to_string(with_quotients) + " with linear quotients, " + std::to_string(capped.size()) +
                         " capped";
    for (const auto& s : capped)
        detail += " [capped " + s + "]";
    return c.outcome(detail);
}

Outcome regularity_formula() {
    auto f2 = limits(6, 3);
    auto q = f2;
    q.field = Field::Q;
    auto a = from_report(run_suite("reg-formula", f2), true);
    auto b = from_report(run_suite("reg-formula", q), true);
    return {a.pass && b.pass, "f2: " + a.detail + " | q: " + b.detail};
}

Outcome trees() {
    auto cfg = limits(8, 3);
    cfg.samples = 50;
    cfg.seed = 0;
    return from_report(run_suite("tree", cfg), true);
}

Outcome whisker_corollary() {
    Checks c;
    std::size_t instances = 0, with_quotients = 0;
    for (const auto& g : enumerate_graphs_up_to(5, {.connected = true})) {
        const std::size_t n = g.size();
        for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) + 3 < n)
                continue;
            const Graph w = add_whiskers(g, VertexSet(s));
            if (w.edge_count() == 0)
                continue;
            ++instances;
            const auto ideal = symbolic_power_bruteforce(w, 2);
            const bool lq = has_linear_quotients(ideal).found();
            with_quotients += lq;
            const bool cl = componentwise_linear(ideal, Field::F2, homological()).verdict == Verdict::True;
            c.expect(cl, to_graph6(g) + " S=" + labels(g, VertexSet(s)));
        }
    }
    return c.outcome(std::to_string(instances) + " (G, S) pairs checked by homology, " +
                     std::to_string(with_quotients) + " also with a linear-quotient order");
}

Outcome property_suites() {
    Checks c;
    // Symbolic power routes against each other and against the membership oracle.
    for (const auto& g : connected_with_edges(6))
        for (unsigned k = 1; k <= 3; ++k) {
            const auto brute = symbolic_power_bruteforce(g, k);
            c.expect(symbolic_power_via_gk(g, k) == brute, "routes " + to_graph6(g));
            if (g.size() <= 5)
                c.expect(gen_set(brute) == oracle::symbolic_power(g, k), "membership " + to_graph6(g));
        }
    for (const auto& g : sample_graphs(8, 30, {.connected = true}, 0))
        for (unsigned k = 2; k <= 3; ++k)
            c.expect(symbolic_power_via_gk(g, k) == symbolic_power_bruteforce(g, k), "sampled " + to_graph6(g));
    // VD against the literal recursive definition.
    for (std::size_t n = 1; n <= 6; ++n)
        for (const auto& g : all_graphs(n))
            c.expect(is_vertex_decomposable(g) == oracle::vertex_decomposable(g), "vd oracle " + to_graph6(g));
    // Alexander duality is an involution and exchanges edge and cover ideals.
    for (std::size_t n = 2; n <= 6; ++n)
        for (const auto& g : all_graphs(n)) {
            if (g.edge_count() == 0)
                continue;
            const auto e = edge_ideal(g);
            const auto j = cover_ideal(g);
            c.expect(alexander_dual(alexander_dual(e)) == e, "involution " + to_graph6(g));
            c.expect(alexander_dual(e) == j, "dual of edge ideal " + to_graph6(g));
        }
    // Closure of vertex decomposability under deleting N[A].
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& g : all_graphs(n)) {
            if (!is_vertex_decomposable(g))
                continue;
            for_each_independent_set(g, [&](VertexSet, VertexSet rest) {
                c.expect(is_vertex_decomposable(induced_subgraph(g, rest)), "closure " + to_graph6(g));
                return true;
            });
        }
    // B_G inherits vertex decomposability from bipartite G; the bipartite
    // recursion agrees with vertex decomposability.
    for (std::size_t n = 1; n <= 8; ++n)
        for (const auto& g : enumerate_graphs(n, {.bipartite = true})) {
            const bool vd = is_vertex_decomposable(g);
            c.expect(is_scm_bipartite(g) == vd, "scm recursion " + to_graph6(g));
            if (const auto d = shedding_decomposition(g))
                c.expect(is_vertex_decomposable(build_bg(g, *d)), "B_G inheritance " + to_graph6(g));
        }
    return c.outcome(std::to_string(c.total()) + " checks");
}

} // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "polarized symbolic powers are cover ideals of G_k (n<=5, k<=3)", 60, fakhari_bridge},
        {2, "Betti tables survive polarization over f2 and q (n<=4, k<=3)", 120, polarization_invariance},
        {3, "layer collapse, k in {3,4}; bipartite one-step variant, k in {2,3,4} (n<=6)", 10, layer_collapse},
        {4, "non-CL at k=2,3 persists to k=4 (n<=5, homological)", 300, not_cl_propagation},
        {5, "whiskered diamond example: VD, J CL, J^(2) not CL, witness {x6}", 30, whiskered_example_checks},
        {6, "diamond: B = C4, J^(2) not CL; Gamma(2,2,2), Gamma(1,3,2,1) linear quotients", 60, diamond_and_cliques},
        {7, "bipartite n<=7: VD iff J^2 componentwise linear", 300, bipartite_main},
        {8, "VD bipartite n<=6, k<=3: reg J^k = k deg J", 300, regularity_formula},
        {9, "50 seeded trees n<=8, k<=3: J^k has linear quotients", 120, trees},
        {10, "whiskers with |S| >= n-3, n<=5: J^(2) componentwise linear", 300, whisker_corollary},
        {11, "property suites at their stated sizes", 600, property_suites},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));

    int failed = 0;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.contains(c.id))
            continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool pass = o.pass && in_time;
        failed += !pass;
        std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
                  << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s of " << c.limit_seconds << " s" << (in_time ? "" : ", over the limit") << ")\n"
                  << "    " << o.detail << '\n';
        std::cout.unsetf(std::ios::fixed);
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
