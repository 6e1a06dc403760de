#include "cwl/analyze.hpp"

#include <sstream>

#include "cwl/error.hpp"
#include "cwl/graph_io.hpp"
#include "cwl/ideal.hpp"

namespace cwl {

namespace {

nlohmann::json labels_json(const Graph& g, VertexSet s) {
    nlohmann::json out = nlohmann::json::array();
    for (Vertex v : s)
        out.push_back(g.label(v));
    return out;
}

nlohmann::json labels_json(const Graph& g, const std::vector<Vertex>& order) {
    nlohmann::json out = nlohmann::json::array();
    for (Vertex v : order)
        out.push_back(g.label(v));
    return out;
}

nlohmann::json edges_json(const Graph& g) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [u, v] : g.edges())
        out.push_back({g.label(u), g.label(v)});
    return out;
}

std::string join(const nlohmann::json& items, const char* sep = " ") {
    std::string out;
    for (const auto& x : items) {
        if (!out.empty())
            out += sep;
        out += x.is_array() ? join(x, "-") : x.get<std::string>();
    }
    return out.empty() ? "-" : out;
}

std::string set_text(const nlohmann::json& items) {
    std::string out;
    for (const auto& x : items)
        out += (out.empty() ? "" : ",") + x.get<std::string>();
    return "{" + out + "}";
}

} // namespace

nlohmann::json analyze_graph(const Graph& g) {
    nlohmann::json j;
    j["graph6"] = to_graph6(g);
    j["vertices"] = g.labels();
    j["edges"] = edges_json(g);
    j["simplicial"] = labels_json(g, simplicial_vertices(g));
    j["chordal"] = is_chordal(g);
    j["bipartite"] = is_bipartite(g);
    const bool vd = is_vertex_decomposable(g);
    j["vertex_decomposable"] = vd;
    const auto w = w_graph_check(g);
    j["w_graph"] = w.holds;
    if (w.witness)
        j["w_graph_witness"] = labels_json(g, *w.witness);
    if (!vd)
        return j;
    const auto d = shedding_decomposition(g);
    j["shedding_order"] = labels_json(g, d->shedding_order);
    j["i_order"] = labels_json(g, d->i_order);
    if (g.edge_count() == 0)
        return j;
    const Graph b = build_bg(g, *d);
    j["bg_edges"] = edges_json(b);
    j["bg_vertex_decomposable"] = is_vertex_decomposable(b);
    const auto fam = bg_family_check(g);
    j["bg_family_vd"] = fam.holds;
    if (fam.witness)
        j["bg_family_witness"] = labels_json(g, *fam.witness);
    return j;
}

std::string analysis_text(const nlohmann::json& a) {
    std::ostringstream out;
    auto flag = [&](const char* name, const char* key) {
        out << name << ": " << (a.at(key).get<bool>() ? "yes" : "no") << '\n';
    };
    out << "graph6: " << a.at("graph6").get<std::string>() << '\n';
    out << "vertices: " << join(a.at("vertices")) << '\n';
    out << "edges: " << join(a.at("edges")) << '\n';
    out << "simplicial: " << join(a.at("simplicial")) << '\n';
    flag("chordal", "chordal");
    flag("bipartite", "bipartite");
    flag("vertex decomposable", "vertex_decomposable");
    flag("W-graph", "w_graph");
    if (a.contains("w_graph_witness"))
        out << "  no simplicial vertex after removing N[" << set_text(a["w_graph_witness"]) << "]\n";
    if (a.contains("shedding_order")) {
        out << "shedding order: " << join(a["shedding_order"]) << '\n';
        out << "i-order: " << join(a["i_order"]) << '\n';
    }
    if (a.contains("bg_edges")) {
        out << "B_G: " << join(a["bg_edges"]) << '\n';
        flag("B_G vertex decomposable", "bg_vertex_decomposable");
        flag("B family VD", "bg_family_vd");
        if (a.contains("bg_family_witness"))
            out << "  fails at A = " << set_text(a["bg_family_witness"]) << '\n';
    }
    return out.str();
}

PowerPath parse_power_path(const std::string& s) {
    if (s == "symbolic")
        return PowerPath::Symbolic;
    if (s == "power" || s == "ordinary")
        return PowerPath::Ordinary;
    throw Error(ErrorCode::InvalidArgument, "unknown power path '" + s + "' (symbolic|power)");
}

nlohmann::json check_cl(const Graph& g, const ClCheckOptions& o) {
    if (o.k == 0)
        throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
    const MonomialIdeal ideal =
        o.path == PowerPath::Symbolic ? symbolic_power_bruteforce(g, o.k) : power(cover_ideal(g), o.k);
    const ClResult r = componentwise_linear(ideal, o.field, o.cl);
    nlohmann::json j;
    j["graph6"] = to_graph6(g);
    j["k"] = o.k;
    j["path"] = o.path == PowerPath::Symbolic ? "symbolic" : "power";
    j["field"] = to_string(o.field);
    j["generators"] = ideal.size();
    j["verdict"] = to_string(r.verdict);
    j["method"] = r.method;
    j["quotients"] = to_string(r.quotients.status);
    j["search_nodes"] = r.quotients.nodes;
    if (r.quotients.found()) {
        nlohmann::json order = nlohmann::json::array();
        for (std::size_t idx : r.quotients.order)
            order.push_back(ideal.gens()[idx].to_string(ideal.ambient()));
        j["order"] = order;
    }
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& s : r.trace) {
        nlohmann::json step{{"degree", s.degree}, {"linear", s.linear}};
        if (s.witness)
            step["witness"] = {s.witness->first, s.witness->second};
        trace.push_back(step);
    }
    j["trace"] = trace;
    return j;
}

std::string check_cl_text(const nlohmann::json& r) {
    std::ostringstream out;
    out << (r.at("path") == "symbolic" ? "J^(" : "J^") << r.at("k").get<std::size_t>()
        << (r.at("path") == "symbolic" ? ")" : "") << " of " << r.at("graph6").get<std::string>() << ": "
        << r.at("generators").get<std::size_t>() << " generators, componentwise linear: "
        << r.at("verdict").get<std::string>();
    if (!r.at("method").get<std::string>().empty())
        out << " (" << r.at("method").get<std::string>() << ")";
    out << '\n';
    if (r.contains("order"))
        out << "  quotient order: " << join(r["order"]) << '\n';
    for (const auto& s : r.at("trace")) {
        out << "  degree " << s.at("degree").get<std::size_t>() << ": " << (s.at("linear").get<bool>() ? "linear" : "not linear");
        if (s.contains("witness"))
            out << " (beta_" << s["witness"][0].get<int>() << "," << s["witness"][1].get<int>() << " != 0)";
        out << '\n';
    }
    return out.str();
}

} // namespace cwl
