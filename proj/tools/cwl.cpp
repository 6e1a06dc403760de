// cwl: command-line front end for the graph, ideal and verification layers.
//
// Exit codes: 0 pass/true, 1 fail/false, 2 error, 3 unknown (budget).

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include "cwl/analyze.hpp"
#include "cwl/betti.hpp"
#include "cwl/error.hpp"
#include "cwl/families.hpp"
#include "cwl/graph_io.hpp"
#include "cwl/ideal_io.hpp"
#include "cwl/suites.hpp"

using namespace cwl;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;
constexpr int kExitUnknown = 3;

struct Globals {
    std::string field = "f2";
    std::uint64_t seed = 0;
    std::optional<std::size_t> max_n;
    std::optional<std::size_t> max_k;
    std::string json_out;
    std::size_t budget = kDefaultQuotientBudget;
};

std::vector<Graph> read_input(const std::string& path) {
    if (!path.empty() && path != "-")
        return {read_edge_list_file(path)};
    auto graphs = read_graph6_stream(std::cin);
    if (graphs.empty())
        throw Error(ErrorCode::Parse, "no graph6 lines on standard input");
    return graphs;
}

void emit_json(const Globals& g, const nlohmann::json& j) {
    if (g.json_out.empty())
        return;
    if (g.json_out == "-") {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(g.json_out);
    if (!out)
        throw Error(ErrorCode::InvalidArgument, "cannot write " + g.json_out);
    out << j.dump(2) << '\n';
}

// One graph gives a bare object, several give an array.
nlohmann::json collect(std::vector<nlohmann::json> items) {
    if (items.size() == 1)
        return items.front();
    return nlohmann::json(std::move(items));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Componentwise linearity of symbolic powers of cover ideals"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals opt;
    app.add_option("--field", opt.field, "coefficient field: f2 or q")->capture_default_str();
    app.add_option("--seed", opt.seed, "seed for sampled suites and random families")->capture_default_str();
    app.add_option("--max-n", opt.max_n, "largest vertex count for suites");
    app.add_option("--max-k", opt.max_k, "largest power for suites");
    app.add_option("--json", opt.json_out, "write JSON output to this file ('-' for stdout)");
    app.add_option("--budget", opt.budget, "node budget of the linear-quotient search")->capture_default_str();

    std::string input;
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "edge-list file; graph6 lines are read from stdin when omitted");
    };

    auto* analyze = app.add_subcommand("analyze", "decomposability report for each input graph");
    add_input(analyze);

    auto* ideal_cmd = app.add_subcommand("ideal", "print an ideal of the input graph");
    std::string ideal_mode = "cover";
    std::optional<std::size_t> symbolic_k;
    std::optional<std::size_t> power_k;
    ideal_cmd->add_option("mode", ideal_mode, "cover or edge")->check(CLI::IsMember({"cover", "edge"}));
    ideal_cmd->add_option("--symbolic", symbolic_k, "k-th symbolic power of the cover ideal");
    ideal_cmd->add_option("--power", power_k, "k-th ordinary power");
    bool with_betti = false;
    ideal_cmd->add_flag("--betti", with_betti, "also print the Betti table");
    add_input(ideal_cmd);

    auto* check = app.add_subcommand("check-cl", "is J(G)^(k) (or J(G)^k) componentwise linear");
    std::size_t check_k = 2;
    std::string check_path = "symbolic";
    std::string check_method = "auto";
    check->add_option("-k,--k", check_k, "power")->capture_default_str();
    check->add_option("--path", check_path, "symbolic or power")->capture_default_str();
    check->add_option("--method", check_method, "auto, betti or quotients")->capture_default_str();
    add_input(check);

    auto* construct = app.add_subcommand("construct", "build G_k or B_G");
    std::string what;
    std::size_t construct_k = 2;
    bool as_graph6 = false;
    construct->add_option("what", what, "gk or bg")->required()->check(CLI::IsMember({"gk", "bg"}));
    construct->add_option("-k,--k", construct_k, "layers for gk")->capture_default_str();
    construct->add_flag("--graph6", as_graph6, "print graph6 instead of an edge list");
    add_input(construct);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    unsigned jobs = 1;
    std::optional<std::size_t> samples;
    std::size_t cap = kDefaultGeneratorCap;
    verify->add_option("suite", suite, "suite id; 'list' shows the catalog")->required();
    verify->add_option("-j,--jobs", jobs, "worker threads (0 = all cores)")->capture_default_str();
    verify->add_option("--samples", samples, "sample count for sampled suites");
    verify->add_option("--generator-cap", cap, "largest ideal sent to the homological check")->capture_default_str();

    auto* gen = app.add_subcommand("gen", "print a graph from a family spec");
    std::string family_text;
    bool gen_edges = false;
    gen->add_option("family", family_text,
                    "path:N cycle:N complete:N star:CORE:A/B/.. nclique:P:M1,M2,.. random-tree:N[:SEED] "
                    "random-graph:N:P[:SEED]")
        ->required();
    gen->add_flag("--edges", gen_edges, "print an edge list instead of graph6");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        const Field field = parse_field(opt.field);

        if (*analyze) {
            std::vector<nlohmann::json> out;
            for (const auto& g : read_input(input)) {
                out.push_back(analyze_graph(g));
                std::cout << analysis_text(out.back());
            }
            emit_json(opt, collect(out));
            return kExitTrue;
        }

        if (*ideal_cmd) {
            if (symbolic_k && power_k)
                throw Error(ErrorCode::InvalidArgument, "--symbolic and --power are exclusive");
            if ((symbolic_k && *symbolic_k == 0) || (power_k && *power_k == 0))
                throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
            if (symbolic_k && ideal_mode != "cover")
                throw Error(ErrorCode::InvalidArgument, "symbolic powers are taken of the cover ideal");
            std::vector<nlohmann::json> out;
            for (const auto& g : read_input(input)) {
                MonomialIdeal i = symbolic_k ? symbolic_power_bruteforce(g, *symbolic_k)
                                  : ideal_mode == "cover" ? cover_ideal(g)
                                                          : edge_ideal(g);
                if (power_k)
                    i = power(i, *power_k);
                std::cout << to_ideal_text(i);
                nlohmann::json j = to_json(i);
                if (with_betti) {
                    const auto table = betti_table(i, field);
                    std::cout << table.to_text(false);
                    j["betti"] = to_json(table);
                }
                out.push_back(j);
            }
            emit_json(opt, collect(out));
            return kExitTrue;
        }

        if (*check) {
            ClCheckOptions o;
            o.k = check_k;
            o.path = parse_power_path(check_path);
            o.field = field;
            o.cl.method = parse_cl_method(check_method);
            o.cl.budget = opt.budget;
            std::vector<nlohmann::json> out;
            int code = kExitTrue;
            for (const auto& g : read_input(input)) {
                out.push_back(check_cl(g, o));
                std::cout << check_cl_text(out.back());
                const auto v = out.back()["verdict"].get<std::string>();
                if (v == "false")
                    code = kExitFalse;
                else if (v == "unknown" && code == kExitTrue)
                    code = kExitUnknown;
            }
            emit_json(opt, collect(out));
            return code;
        }

        if (*construct) {
            std::vector<nlohmann::json> out;
            for (const auto& g : read_input(input)) {
                Graph h;
                if (what == "gk") {
                    if (construct_k == 0)
                        throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
                    h = build_gk(g, construct_k).result;
                } else {
                    const auto d = shedding_decomposition(g);
                    if (!d)
                        throw Error(ErrorCode::NotVertexDecomposable, "input graph is not vertex decomposable");
                    h = build_bg(g, *d);
                }
                if (as_graph6)
                    std::cout << to_graph6(h) << '\n';
                else
                    std::cout << to_edge_list(h);
                out.push_back({{"graph6", to_graph6(h)}, {"vertices", h.labels()}, {"edges", h.labeled_edges()}});
            }
            emit_json(opt, collect(out));
            return kExitTrue;
        }

        if (*verify) {
            if (suite == "list") {
                for (const auto& s : suite_catalog())
                    std::cout << s.id << "  (max-n " << s.default_max_n << ", max-k " << s.default_max_k << ")  "
                              << s.summary << '\n';
                return kExitTrue;
            }
            SuiteConfig cfg;
            cfg.max_n = opt.max_n;
            cfg.max_k = opt.max_k;
            cfg.samples = samples;
            cfg.field = field;
            cfg.seed = opt.seed;
            cfg.budget = opt.budget;
            cfg.generator_cap = cap;
            cfg.jobs = jobs;
            const auto report = run_suite(suite, cfg);
            std::cout << to_text(report);
            std::cout << "elapsed: " << report.elapsed_seconds << " s\n";
            emit_json(opt, to_json(report, true));
            return report.passed() ? kExitTrue : kExitFalse;
        }

        if (*gen) {
            FamilySpec spec = parse_family(family_text);
            // Random families without an explicit seed take --seed.
            const auto colons = std::count(family_text.begin(), family_text.end(), ':');
            if (auto* t = std::get_if<family::RandomTree>(&spec); t && colons == 1)
                t->seed = opt.seed;
            if (auto* r = std::get_if<family::RandomGraph>(&spec); r && colons == 2)
                r->seed = opt.seed;
            const Graph g = make_family(spec);
            if (gen_edges)
                std::cout << to_edge_list(g);
            else
                std::cout << to_graph6(g) << '\n';
            emit_json(opt, {{"family", describe(spec)}, {"graph6", to_graph6(g)}, {"edges", g.labeled_edges()}});
            return kExitTrue;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
