#include "cwl/suites.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include "cwl/enumerate.hpp"
#include "cwl/error.hpp"
#include "cwl/families.hpp"
#include "cwl/graph_io.hpp"
#include "cwl/ideal.hpp"

namespace cwl {

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> catalog{
        {"fakhari", "polarized symbolic powers are cover ideals of G_k", 6, 3},
        {"polar-betti", "Betti tables and linear quotients survive polarization", 5, 3},
        {"layer-collapse", "G_k minus the closed neighbourhood of the top layer is G_(k-2)", 6, 4},
        {"not-cl-propagation", "non-CL at k=1,2 or k=2,3 persists for larger k", 6, 4},
        {"suff-cond", "a non-VD B of some G minus N[A] rules out CL symbolic powers", 7, 3},
        {"w-main", "W-graphs: B family VD iff symbolic powers CL", 7, 3},
        {"whisker", "whiskered graphs G with W(S)", 6, 2},
        {"star", "star graphs on a complete core: B_G VD iff CL", 8, 3},
        {"nclique", "n-clique graphs: CL iff at most one m_i equals 1", 10, 3},
        {"bipartite-main", "bipartite: VD iff J(G)^k CL", 7, 3},
        {"bipartite-linres", "bipartite: J(G) linear iff J(G)^k linear", 7, 3},
        {"reg-formula", "VD bipartite: reg J(G)^k = k deg J(G)", 7, 3},
        {"tree", "trees: J(G)^k has linear quotients", 8, 3},
        {"census", "evidence for the closing question (no pass/fail)", 6, 4},
    };
    return catalog;
}

SheddingDecomposition star_decomposition(const Graph& g, std::size_t core) {
    SheddingDecomposition d;
    VertexMask covered = 0;
    for (Vertex y = static_cast<Vertex>(core); y < g.size(); ++y)
        covered |= g.neighbor_mask(y);
    const VertexMask core_mask = low_mask(static_cast<Vertex>(core));
    if ((covered & core_mask) != core_mask) {
        const auto free = static_cast<Vertex>(std::countr_zero(core_mask & ~covered));
        for (Vertex x = 0; x < core; ++x)
            if (x != free)
                d.shedding_order.push_back(x);
        d.i_order.push_back(free);
        for (Vertex y = static_cast<Vertex>(core); y < g.size(); ++y)
            d.i_order.push_back(y);
        return d;
    }
    VertexMask used = 0;
    for (Vertex y = static_cast<Vertex>(core); y < g.size(); ++y) {
        for (Vertex x : VertexSet(g.neighbor_mask(y) & ~used))
            d.shedding_order.push_back(x);
        used |= g.neighbor_mask(y);
        d.i_order.push_back(y);
    }
    return d;
}

std::vector<std::pair<Graph, std::size_t>> star_graphs(std::size_t max_n) {
    std::vector<std::pair<Graph, std::size_t>> out;
    std::set<std::pair<std::size_t, std::uint64_t>> seen;
    for (std::size_t core = 1; core < max_n; ++core) {
        const std::size_t subsets = (std::size_t{1} << core) - 1;
        for (std::size_t m = 1; core + m <= max_n; ++m) {
            // Nondecreasing sequences of nonempty attachment masks.
            std::vector<std::size_t> pick(m, 1);
            for (;;) {
                family::StarComplete spec{core, {}};
                for (std::size_t mask : pick) {
                    std::vector<std::size_t> att;
                    for (std::size_t x = 0; x < core; ++x)
                        if ((mask >> x) & 1)
                            att.push_back(x + 1);
                    spec.attachments.push_back(att);
                }
                Graph g = make_family(spec);
                if (seen.insert({core, canonical_code(g)}).second)
                    out.emplace_back(std::move(g), core);
                std::size_t pos = m;
                while (pos > 0 && pick[pos - 1] == subsets)
                    --pos;
                if (pos == 0)
                    break;
                ++pick[pos - 1];
                for (std::size_t j = pos; j < m; ++j)
                    pick[j] = pick[pos - 1];
            }
        }
    }
    return out;
}

std::vector<std::pair<std::size_t, std::vector<std::size_t>>> nclique_parameters(std::size_t max_n) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> out;
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> parts =
        [&](std::size_t p, std::size_t room, std::vector<std::size_t>& m) {
            if (!m.empty())
                out.emplace_back(p, m);
            const std::size_t cap = m.empty() ? room : std::min(room, m.back());
            for (std::size_t next = cap; next >= 1; --next) {
                m.push_back(next);
                parts(p, room - next, m);
                m.pop_back();
            }
        };
    for (std::size_t p = 1; p < max_n; ++p) {
        std::vector<std::size_t> m;
        parts(p, max_n - p, m);
    }
    return out;
}

namespace {

struct Outcome {
    std::size_t tested = 0;
    std::vector<Failure> failures;
    std::vector<Skip> skipped;
    std::map<std::string, std::size_t> counts;
    std::vector<std::string> evidence;
};

template <typename Item, typename Work>
std::vector<Outcome> fan_out(const std::vector<Item>& items, unsigned jobs, Work work) {
    std::vector<Outcome> out(items.size());
    std::vector<std::exception_ptr> errors(items.size());
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (;;) {
            const std::size_t i = next++;
            if (i >= items.size())
                return;
            try {
                out[i] = work(items[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned workers = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, items.size()));
    if (workers <= 1) {
        loop();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(loop);
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

struct Limits {
    std::size_t max_n;
    std::size_t max_k;
    std::size_t samples;
};

std::vector<Graph> with_edges(std::vector<Graph> gs) {
    std::erase_if(gs, [](const Graph& g) { return g.edge_count() == 0; });
    return gs;
}

std::string labels_of(const Graph& g, VertexSet s) {
    std::string out;
    for (Vertex v : s) {
        if (!out.empty())
            out += ',';
        out += g.label(v);
    }
    return out;
}

const char* truth(bool b) { return b ? "true" : "false"; }

/// CL verdict under the suite limits. Linear quotients first (unless the
/// homological verdict is required); the homological check is refused above
/// the generator cap, which records a skip and gives no verdict.
std::optional<bool> cl_verdict(const MonomialIdeal& ideal, const SuiteConfig& cfg, bool homological, Outcome& out,
                               const std::string& graph, const nlohmann::json& params) {
    if (!homological && has_linear_quotients(ideal, cfg.budget).found())
        return true;
    if (ideal.size() > cfg.generator_cap) {
        out.skipped.push_back({graph, params,
                               std::to_string(ideal.size()) + " generators exceed the cap of " +
                                   std::to_string(cfg.generator_cap)});
        return std::nullopt;
    }
    ClOptions o;
    o.method = ClMethod::Betti;
    return componentwise_linear(ideal, cfg.field, o).verdict == Verdict::True;
}

void expect_cl(Outcome& out, const MonomialIdeal& ideal, bool expected, const SuiteConfig& cfg, bool homological,
               const std::string& graph, const nlohmann::json& params) {
    ++out.tested;
    const auto v = cl_verdict(ideal, cfg, homological, out, graph, params);
    if (v && *v != expected)
        out.failures.push_back({graph, params, expected ? "CL" : "not CL", *v ? "CL" : "not CL"});
}

Outcome fakhari(const Graph& g, const Limits& lim) {
    Outcome out;
    const std::string key = to_graph6(g);
    for (std::size_t k = 1; k <= lim.max_k; ++k) {
        const nlohmann::json params{{"k", k}};
        ++out.tested;
        const MonomialIdeal brute = symbolic_power_bruteforce(g, k);
        const MonomialIdeal via = symbolic_power_via_gk(g, k);
        if (brute != via)
            out.failures.push_back({key, {{"k", k}, {"check", "routes"}}, brute.to_string(), via.to_string()});
        const auto [polar, map] = polarize(brute);
        const Graph gk = build_gk(g, k).result;
        const MonomialIdeal cover = cover_ideal(gk);
        std::vector<std::size_t> target;
        bool missing = false;
        for (const auto& name : polar.ambient()) {
            const auto v = gk.find(name);
            if (!v) {
                missing = true;
                break;
            }
            target.push_back(*v);
        }
        if (missing) {
            out.failures.push_back({key, {{"k", k}, {"check", "layers"}}, "layer variables of G_k", "unmatched variable"});
            continue;
        }
        const MonomialIdeal mapped = embed(polar, gk.labels(), target);
        if (mapped != cover)
            out.failures.push_back({key, params, cover.to_string(), mapped.to_string()});
    }
    return out;
}

Outcome polar_betti(const Graph& g, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const std::string key = to_graph6(g);
    for (std::size_t k = 1; k <= lim.max_k; ++k) {
        const MonomialIdeal ideal = symbolic_power_bruteforce(g, k);
        for (Field f : {Field::F2, Field::Q}) {
            ++out.tested;
            const nlohmann::json params{{"k", k}, {"field", to_string(f)}};
            const auto c = polarization_check(ideal, f, cfg.budget);
            if (!c.betti_equal)
                out.failures.push_back({key, params, "equal Betti tables", "different tables"});
            if (!c.quotients_agree())
                out.failures.push_back({key, params, "same linear-quotient status",
                                        to_string(c.original) + " vs " + to_string(c.polarized)});
        }
    }
    return out;
}

Outcome layer_collapse(const Graph& g, const Limits& lim) {
    Outcome out;
    const std::string key = to_graph6(g);
    for (std::size_t k = 3; k <= lim.max_k; ++k) {
        ++out.tested;
        if (!layer_collapse_check(g, k))
            out.failures.push_back({key, {{"k", k}}, "G_k \\ N[top] = G_(k-2)", "mismatch"});
    }
    if (is_bipartite(g))
        for (std::size_t k = 2; k <= lim.max_k; ++k) {
            ++out.tested;
            if (!bipartite_layer_collapse_check(g, k))
                out.failures.push_back({key, {{"k", k}, {"variant", "bipartite"}}, "collapse to G_(k-1)", "mismatch"});
        }
    return out;
}

Outcome not_cl_propagation(const Graph& g, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const std::string key = to_graph6(g);
    std::map<std::size_t, std::optional<bool>> memo;
    Outcome scratch;
    auto verdict = [&](std::size_t k) {
        auto it = memo.find(k);
        if (it == memo.end())
            it = memo.emplace(k, cl_verdict(symbolic_power_bruteforce(g, k), cfg, true, out, key, {{"k", k}})).first;
        return it->second;
    };
    auto propagate = [&](std::size_t a, const std::string& label) {
        const auto va = verdict(a);
        const auto vb = verdict(a + 1);
        if (!va || !vb || *va || *vb)
            return;
        ++out.counts["premise held at k=" + label];
        for (std::size_t k = a + 2; k <= lim.max_k; ++k) {
            ++out.tested;
            const auto v = verdict(k);
            if (v && *v)
                out.failures.push_back({key, {{"k", k}, {"premise", label}}, "not CL", "CL"});
        }
    };
    ++out.tested;
    propagate(1, "1,2");
    propagate(2, "2,3");
    return out;
}

Outcome suff_cond(const Graph& g, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const std::string key = to_graph6(g);
    ++out.counts["vertex decomposable graphs"];
    const auto r = bg_family_check(g);
    if (r.holds)
        return out;
    ++out.counts["graphs with a non-VD B"];
    for (std::size_t k = 2; k <= lim.max_k; ++k)
        expect_cl(out, symbolic_power_bruteforce(g, k), false, cfg, false, key,
                  {{"k", k}, {"A", labels_of(g, r.witness.value_or(VertexSet()))}});
    return out;
}

Outcome w_main(const Graph& g, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const std::string key = to_graph6(g);
    const bool family = bg_family_vd(g);
    ++out.counts[family ? "B family VD" : "B family not VD"];
    expect_cl(out, cover_ideal(g), true, cfg, false, key, {{"k", 1}});
    for (std::size_t k = 2; k <= lim.max_k; ++k)
        expect_cl(out, symbolic_power_bruteforce(g, k), family, cfg, false, key, {{"k", k}, {"B_family_vd", family}});
    return out;
}

// B of every remainder of an independent set, minus the surviving members of S, is a forest.
bool whisker_forest_condition(const Graph& w, const std::set<std::string>& s_labels) {
    bool ok = true;
    for_each_independent_set(w, [&](VertexSet, VertexSet remainder) {
        const Graph h = induced_subgraph(w, remainder);
        if (h.edge_count() == 0)
            return true;
        const auto d = shedding_decomposition(h);
        if (!d) {
            ok = false;
            return false;
        }
        const Graph b = build_bg(h, *d);
        VertexMask drop = 0;
        for (Vertex v = 0; v < b.size(); ++v)
            if (s_labels.contains(b.label(v)))
                drop |= bit(v);
        if (!is_forest(delete_vertices(b, VertexSet(drop)))) {
            ok = false;
            return false;
        }
        return true;
    });
    return ok;
}

Outcome whisker(const std::pair<Graph, VertexMask>& item, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const auto& [g, s_mask] = item;
    const VertexSet s(s_mask);
    const Graph w = add_whiskers(g, s);
    if (w.edge_count() == 0)
        return out;
    const std::string key = to_graph6(g);
    const std::string s_text = labels_of(g, s);
    std::map<std::size_t, MonomialIdeal> powers;
    auto ideal_at = [&](std::size_t k) -> const MonomialIdeal& {
        auto it = powers.find(k);
        if (it == powers.end())
            it = powers.emplace(k, symbolic_power_bruteforce(w, k)).first;
        return it->second;
    };

    if (s.size() + 3 >= g.size()) {
        ++out.counts["|S| >= n-3"];
        for (std::size_t k = 2; k <= lim.max_k; ++k)
            expect_cl(out, ideal_at(k), true, cfg, false, key, {{"S", s_text}, {"k", k}, {"rule", "|S|>=n-3"}});
    }

    if (is_vertex_decomposable(w)) {
        const Graph h = delete_vertices(g, s);
        if (!is_vertex_decomposable(h)) {
            out.failures.push_back({key, {{"S", s_text}, {"rule", "G\\S VD"}}, "G \\ S vertex decomposable", "not VD"});
        } else if (h.edge_count() > 0) {
            const auto r = bg_family_check(h);
            if (!r.holds) {
                ++out.counts["non-VD B after removing S"];
                for (std::size_t k = 2; k <= lim.max_k; ++k)
                    expect_cl(out, ideal_at(k), false, cfg, false, key,
                              {{"S", s_text}, {"k", k}, {"rule", "B not VD"}});
            }
        }
    }

    if (is_w_graph(w)) {
        std::set<std::string> s_labels;
        for (Vertex v : s)
            s_labels.insert(g.label(v));
        if (whisker_forest_condition(w, s_labels)) {
            ++out.counts["forest condition held"];
            for (std::size_t k = 2; k <= lim.max_k; ++k)
                expect_cl(out, ideal_at(k), true, cfg, false, key, {{"S", s_text}, {"k", k}, {"rule", "forest"}});
        }
    }
    return out;
}

Outcome star(const std::pair<Graph, std::size_t>& item, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const auto& [g, core] = item;
    const std::string key = to_graph6(g);
    const auto d = star_decomposition(g, core);
    ++out.tested;
    if (const auto err = decomposition_error(g, d)) {
        out.failures.push_back({key, {{"core", core}}, "valid shedding decomposition", *err});
        return out;
    }
    const bool bg_vd = is_vertex_decomposable(build_bg(g, d));
    ++out.counts[bg_vd ? "B_G VD" : "B_G not VD"];
    for (std::size_t k = 2; k <= lim.max_k; ++k)
        expect_cl(out, symbolic_power_bruteforce(g, k), bg_vd, cfg, false, key,
                  {{"core", core}, {"k", k}, {"B_G_vd", bg_vd}});
    return out;
}

Outcome nclique(const std::pair<std::size_t, std::vector<std::size_t>>& item, const Limits& lim,
                const SuiteConfig& cfg) {
    Outcome out;
    const auto& [p, m] = item;
    const Graph g = make_family(family::NClique{p, m});
    const auto ones = static_cast<std::size_t>(std::count(m.begin(), m.end(), std::size_t{1}));
    const bool expected = p == 1 || ones <= 1;
    const std::string key = describe(family::NClique{p, m});
    for (std::size_t k = 2; k <= lim.max_k; ++k)
        expect_cl(out, symbolic_power_bruteforce(g, k), expected, cfg, false, key, {{"k", k}});
    return out;
}

Outcome bipartite_main(const Graph& g, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const std::string key = to_graph6(g);
    const bool vd = is_vertex_decomposable(g);
    ++out.counts[vd ? "vertex decomposable" : "not vertex decomposable"];
    const MonomialIdeal j = cover_ideal(g);
    for (std::size_t k = 1; k <= lim.max_k; ++k)
        expect_cl(out, power(j, k), vd, cfg, false, key, {{"k", k}, {"vd", vd}});
    return out;
}

Outcome bipartite_linres(const Graph& g, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const std::string key = to_graph6(g);
    const MonomialIdeal j = cover_ideal(g);
    const bool linear = has_linear_resolution(j, cfg.field);
    ++out.counts[linear ? "J(G) linear" : "J(G) not linear"];
    for (std::size_t k = 2; k <= lim.max_k; ++k) {
        ++out.tested;
        const bool got = has_linear_resolution(power(j, k), cfg.field);
        if (got != linear)
            out.failures.push_back({key, {{"k", k}}, truth(linear), truth(got)});
    }
    return out;
}

Outcome reg_formula(const Graph& g, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const std::string key = to_graph6(g);
    const MonomialIdeal j = cover_ideal(g);
    for (std::size_t k = 1; k <= lim.max_k; ++k) {
        ++out.tested;
        const auto expected = static_cast<int>(k * j.max_degree());
        const int got = regularity(power(j, k), cfg.field);
        if (got != expected)
            out.failures.push_back({key, {{"k", k}}, std::to_string(expected), std::to_string(got)});
    }
    return out;
}

Outcome tree(const family::RandomTree& spec, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const Graph g = make_family(spec);
    const std::string key = describe(spec);
    const MonomialIdeal j = cover_ideal(g);
    for (std::size_t k = 1; k <= lim.max_k; ++k) {
        ++out.tested;
        const MonomialIdeal ideal = power(j, k);
        const auto r = has_linear_quotients(ideal, cfg.budget);
        if (!r.found())
            out.failures.push_back({key, {{"k", k}}, "linear quotients", to_string(r.status)});
        else if (!is_linear_quotient_order(ideal, r.order))
            out.failures.push_back({key, {{"k", k}}, "valid quotient order", "order fails the colon check"});
    }
    return out;
}

Outcome census(const Graph& g, const Limits& lim, const SuiteConfig& cfg) {
    Outcome out;
    const std::string key = to_graph6(g);
    ++out.tested;
    const bool family = bg_family_vd(g);
    std::map<std::size_t, std::optional<bool>> cl;
    for (std::size_t k = 2; k <= lim.max_k; ++k)
        cl[k] = cl_verdict(symbolic_power_bruteforce(g, k), cfg, false, out, key, {{"k", k}});
    ++out.counts["vertex decomposable graphs"];
    out.counts["J^(2) not CL but a higher power CL"];
    out.counts["B family VD but J^(k) not CL"];
    if (cl[2] && !*cl[2]) {
        ++out.counts["J^(2) not CL"];
        for (std::size_t k = 3; k <= lim.max_k; ++k)
            if (cl[k] && *cl[k]) {
                ++out.counts["J^(2) not CL but a higher power CL"];
                out.evidence.push_back("part 1 counterexample " + key + " at k=" + std::to_string(k));
            }
    }
    if (family) {
        ++out.counts["B family VD"];
        for (std::size_t k = 2; k <= lim.max_k; ++k)
            if (cl[k] && !*cl[k]) {
                ++out.counts["B family VD but J^(k) not CL"];
                out.evidence.push_back("part 2 counterexample " + key + " at k=" + std::to_string(k));
            }
    }
    return out;
}

std::vector<Graph> connected_up_to(std::size_t max_n) { return with_edges(enumerate_graphs_up_to(max_n, {.connected = true})); }

std::vector<Graph> connected_bipartite_up_to(std::size_t max_n) {
    return with_edges(enumerate_graphs_up_to(max_n, {.connected = true, .bipartite = true}));
}

template <typename Item, typename Work>
std::vector<Outcome> run_items(const std::vector<Item>& items, const SuiteConfig& cfg, Work work) {
    return fan_out(items, cfg.jobs, work);
}

} // namespace

VerificationReport run_suite(const std::string& id, const SuiteConfig& cfg) {
    const auto& catalog = suite_catalog();
    const auto info = std::find_if(catalog.begin(), catalog.end(), [&](const SuiteInfo& s) { return s.id == id; });
    if (info == catalog.end())
        throw Error(ErrorCode::InvalidArgument, "unknown suite '" + id + "'");
    const Limits lim{cfg.max_n.value_or(info->default_max_n), cfg.max_k.value_or(info->default_max_k),
                     cfg.samples.value_or(50)};
    if (lim.max_n > kMaxExhaustiveN && id != "tree" && id != "star" && id != "nclique")
        throw Error(ErrorCode::TooLarge, "exhaustive suites support max_n <= " + std::to_string(kMaxExhaustiveN));

    const auto start = std::chrono::steady_clock::now();
    std::vector<Outcome> outcomes;
    std::vector<std::string> notes;
    if (id == "fakhari") {
        outcomes = run_items(connected_up_to(lim.max_n), cfg, [&](const Graph& g) { return fakhari(g, lim); });
    } else if (id == "polar-betti") {
        notes.push_back("fields: f2 and q");
        outcomes = run_items(connected_up_to(lim.max_n), cfg, [&](const Graph& g) { return polar_betti(g, lim, cfg); });
    } else if (id == "layer-collapse") {
        outcomes = run_items(enumerate_graphs_up_to(lim.max_n), cfg, [&](const Graph& g) { return layer_collapse(g, lim); });
    } else if (id == "not-cl-propagation") {
        notes.push_back("verdicts are homological (Betti method)");
        outcomes = run_items(connected_up_to(lim.max_n), cfg,
                             [&](const Graph& g) { return not_cl_propagation(g, lim, cfg); });
    } else if (id == "suff-cond") {
        auto graphs = connected_up_to(lim.max_n);
        std::erase_if(graphs, [](const Graph& g) { return !is_vertex_decomposable(g); });
        outcomes = run_items(graphs, cfg, [&](const Graph& g) { return suff_cond(g, lim, cfg); });
    } else if (id == "w-main") {
        auto graphs = connected_up_to(lim.max_n);
        std::erase_if(graphs, [](const Graph& g) { return !is_w_graph(g); });
        outcomes = run_items(graphs, cfg, [&](const Graph& g) { return w_main(g, lim, cfg); });
    } else if (id == "whisker") {
        std::vector<std::pair<Graph, VertexMask>> items;
        for (const auto& g : enumerate_graphs_up_to(lim.max_n, {.connected = true}))
            for (VertexMask s = 0; s < (VertexMask{1} << g.size()); ++s)
                items.emplace_back(g, s);
        outcomes = run_items(items, cfg, [&](const std::pair<Graph, VertexMask>& it) { return whisker(it, lim, cfg); });
    } else if (id == "star") {
        notes.push_back("B_G uses the shedding and i-orders of the direct star construction");
        outcomes = run_items(star_graphs(lim.max_n), cfg,
                             [&](const std::pair<Graph, std::size_t>& it) { return star(it, lim, cfg); });
    } else if (id == "nclique") {
        outcomes = run_items(nclique_parameters(lim.max_n), cfg,
                             [&](const std::pair<std::size_t, std::vector<std::size_t>>& it) {
                                 return nclique(it, lim, cfg);
                             });
    } else if (id == "bipartite-main") {
        outcomes = run_items(connected_bipartite_up_to(lim.max_n), cfg,
                             [&](const Graph& g) { return bipartite_main(g, lim, cfg); });
    } else if (id == "bipartite-linres") {
        outcomes = run_items(connected_bipartite_up_to(lim.max_n), cfg,
                             [&](const Graph& g) { return bipartite_linres(g, lim, cfg); });
    } else if (id == "reg-formula") {
        auto graphs = connected_bipartite_up_to(lim.max_n);
        std::erase_if(graphs, [](const Graph& g) { return !is_vertex_decomposable(g); });
        outcomes = run_items(graphs, cfg, [&](const Graph& g) { return reg_formula(g, lim, cfg); });
    } else if (id == "tree") {
        std::mt19937_64 rng(cfg.seed);
        std::vector<family::RandomTree> specs;
        for (std::size_t i = 0; i < lim.samples; ++i) {
            const std::size_t n = lim.max_n <= 2 ? 2 : 2 + static_cast<std::size_t>(rng() % (lim.max_n - 1));
            specs.push_back({n, rng()});
        }
        outcomes = run_items(specs, cfg, [&](const family::RandomTree& t) { return tree(t, lim, cfg); });
    } else if (id == "census") {
        notes.push_back("records evidence only; never fails");
        auto graphs = connected_up_to(lim.max_n);
        std::erase_if(graphs, [](const Graph& g) { return !is_vertex_decomposable(g); });
        outcomes = run_items(graphs, cfg, [&](const Graph& g) { return census(g, lim, cfg); });
    }

    VerificationReport r;
    r.suite = id;
    std::map<std::string, std::size_t> counts;
    std::vector<std::string> evidence;
    for (auto& o : outcomes) {
        r.instances_tested += o.tested;
        for (auto& f : o.failures)
            r.failures.push_back(std::move(f));
        for (auto& s : o.skipped)
            r.skipped.push_back(std::move(s));
        for (const auto& [k, v] : o.counts)
            counts[k] += v;
        for (auto& e : o.evidence)
            evidence.push_back(std::move(e));
    }
    auto by_key = [](const auto& a, const auto& b) {
        return std::tie(a.graph, a.params) < std::tie(b.graph, b.params);
    };
    std::stable_sort(r.failures.begin(), r.failures.end(), by_key);
    std::stable_sort(r.skipped.begin(), r.skipped.end(), by_key);
    if (id == "census") {
        // Census findings are evidence, not failures.
        for (auto& f : r.failures)
            evidence.push_back("unexpected " + f.graph + " " + f.params.dump());
        r.failures.clear();
    }
    r.notes = std::move(notes);
    for (const auto& [k, v] : counts)
        r.notes.push_back(k + ": " + std::to_string(v));
    for (auto& e : evidence)
        r.notes.push_back(std::move(e));
    r.config = {{"max_n", lim.max_n},   {"max_k", lim.max_k},        {"field", to_string(cfg.field)},
                {"seed", cfg.seed},     {"budget", cfg.budget},      {"generator_cap", cfg.generator_cap}};
    if (id == "tree")
        r.config["samples"] = lim.samples;
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace cwl
