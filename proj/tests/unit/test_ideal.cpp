#include <catch_amalgamated.hpp>

#include <random>

#include "cwl/decomp.hpp"
#include "cwl/enumerate.hpp"
#include "cwl/families.hpp"
#include "cwl/ideal.hpp"
#include "cwl/ideal_io.hpp"
#include "support/graph_oracles.hpp"
#include "support/ideal_oracles.hpp"
#include "support/named_graphs.hpp"

using namespace cwl;
using namespace cwl::testing;

namespace {

MonomialIdeal ideal(const std::vector<std::string>& ring, const std::vector<std::string>& gens) {
    std::vector<Monomial> ms;
    for (const auto& g : gens)
        ms.push_back(parse_monomial(g, ring));
    return MonomialIdeal(ring, ms);
}

std::set<oracle::Exps> gen_set(const MonomialIdeal& i) {
    std::set<oracle::Exps> out;
    for (const auto& g : i.gens())
        out.insert(oracle::Exps(g.exponents().begin(), g.exponents().end()));
    return out;
}

std::vector<oracle::Exps> gen_list(const MonomialIdeal& i) {
    auto s = gen_set(i);
    return {s.begin(), s.end()};
}

const std::vector<std::string> xyz{"x", "y", "z"};
const std::vector<std::string> x4{"x1", "x2", "x3", "x4"};

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t nvars, std::size_t count, unsigned top) {
    std::vector<std::string> ring;
    for (std::size_t i = 0; i < nvars; ++i)
        ring.push_back("x" + std::to_string(i + 1));
    std::vector<Monomial> gens;
    for (std::size_t c = 0; c < count; ++c) {
        Monomial m(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            m[i] = static_cast<Exponent>(rng() % (top + 1));
        if (!m.is_one())
            gens.push_back(m);
    }
    return MonomialIdeal(ring, gens);
}

} // namespace

TEST_CASE("monomial arithmetic", "[ideal]") {
    Monomial a = parse_monomial("x^2*z", xyz);
    Monomial b = parse_monomial("x*y", xyz);
    CHECK(a.degree() == 3);
    CHECK(a.lcm(b) == parse_monomial("x^2*y*z", xyz));
    CHECK(a.gcd(b) == parse_monomial("x", xyz));
    CHECK((a * b).to_string(xyz) == "x^3*y*z");
    CHECK((a / parse_monomial("x", xyz)).to_string(xyz) == "x*z");
    CHECK_THROWS_AS(a / b, Error);
    CHECK(parse_monomial("1", xyz).is_one());
    CHECK(parse_monomial(" x ^ 2 * x ", xyz)[0] == 3);
    CHECK_THROWS_AS(parse_monomial("w", xyz), Error);
    CHECK_THROWS_AS(parse_monomial("x^", xyz), Error);
    CHECK(generator_less(parse_monomial("x", xyz), parse_monomial("y^2", xyz)));
    CHECK(generator_less(parse_monomial("x*z", xyz), parse_monomial("y^2", xyz)));
}

TEST_CASE("ideals store minimal generators in a fixed order", "[ideal]") {
    auto i = ideal(xyz, {"y*z", "x", "x*y", "z^2", "y*z"});
    CHECK(i.to_string() == "(x, y*z, z^2)");
    CHECK(i.contains(parse_monomial("x*y^5", xyz)));
    CHECK_FALSE(i.contains(parse_monomial("y^3", xyz)));
    CHECK(MonomialIdeal::zero(xyz).to_string() == "(0)");
    CHECK(MonomialIdeal::unit(xyz).is_unit());
    CHECK_THROWS_AS(MonomialIdeal::zero(xyz).min_degree(), Error);
}

TEST_CASE("minimal vertex covers", "[ideal]") {
    auto p4 = minimal_vertex_covers(path_graph(4));
    CHECK(std::set<VertexSet>(p4.begin(), p4.end()) == std::set<VertexSet>{VertexSet{1, 2}, VertexSet{0, 2}, VertexSet{1, 3}});
    CHECK(minimal_vertex_covers(path_graph(2)).size() == 2);
    CHECK(minimal_vertex_covers(complete_graph(3)).size() == 3);
    auto none = minimal_vertex_covers(edgeless_graph(3));
    REQUIRE(none.size() == 1);
    CHECK(none[0].empty());

    for (std::size_t n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            std::set<VertexMask> fast;
            for (auto c : minimal_vertex_covers(g))
                fast.insert(c.mask());
            REQUIRE(fast == oracle::minimal_vertex_covers(g));
        }
}

TEST_CASE("cover and edge ideals", "[ideal]") {
    CHECK(cover_ideal(path_graph(4)).to_string() == "(x1*x3, x2*x3, x2*x4)");
    CHECK(cover_ideal(cycle_graph(4)).to_string() == "(x1*x3, x2*x4)");
    CHECK(cover_ideal(complete_graph(3)).to_string() == "(x1*x2, x1*x3, x2*x3)");
    CHECK(edge_ideal(path_graph(2)).to_string() == "(x1*x2)");
    CHECK(edge_ideal(path_graph(3)).to_string() == "(x1*x2, x2*x3)");
    CHECK(edge_ideal(edgeless_graph(3)).is_zero());
    try {
        cover_ideal(edgeless_graph(2));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EdgelessGraph);
    }
}

TEST_CASE("Alexander duality", "[ideal]") {
    CHECK(alexander_dual(edge_ideal(cycle_graph(4))) == cover_ideal(cycle_graph(4)));
    CHECK(alexander_dual(ideal({"x1", "x2"}, {"x1*x2"})).to_string() == "(x1, x2)");
    auto j = cover_ideal(path_graph(4));
    CHECK(alexander_dual(alexander_dual(j)) == j);
    CHECK(alexander_dual(MonomialIdeal::zero(xyz)).is_unit());
    CHECK(alexander_dual(MonomialIdeal::unit(xyz)).is_zero());
    CHECK_THROWS_AS(alexander_dual(ideal(xyz, {"x^2"})), Error);

    for (std::size_t n = 2; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            if (!g.has_edges())
                continue;
            REQUIRE(alexander_dual(edge_ideal(g)) == cover_ideal(g));
            REQUIRE(alexander_dual(cover_ideal(g)) == edge_ideal(g));
        }
}

TEST_CASE("powers", "[ideal]") {
    CHECK(power(ideal({"x"}, {"x"}), 3).to_string() == "(x^3)");
    auto j = cover_ideal(cycle_graph(4));
    CHECK(power(j, 2).to_string() == "(x1^2*x3^2, x1*x2*x3*x4, x2^2*x4^2)");
    CHECK(power(j, 1) == j);
    CHECK_THROWS_AS(power(j, 0), Error);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto i = random_ideal(rng, 3, 1 + rng() % 4, 2);
        const unsigned k = 2 + static_cast<unsigned>(trial % 2);
        auto gens = gen_list(i);
        auto expected = oracle::minimal_members(3, 2 * k, [&](const oracle::Exps& e) { return oracle::in_power(gens, k, e); });
        REQUIRE(gen_set(power(i, k)) == expected);
    }
}

TEST_CASE("intersections", "[ideal]") {
    CHECK(intersect(ideal(xyz, {"x"}), ideal(xyz, {"y"})).to_string() == "(x*y)");
    CHECK(intersect(ideal(xyz, {"x^2", "y"}), ideal(xyz, {"x"})).to_string() == "(x^2, x*y)");
    auto i = ideal(xyz, {"x*y", "z^3"});
    CHECK(intersect(i, i) == i);
    CHECK_THROWS_AS(intersect(i, ideal({"a"}, {"a"})), Error);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        auto a = random_ideal(rng, 3, 1 + rng() % 4, 3);
        auto b = random_ideal(rng, 3, 1 + rng() % 4, 3);
        auto ga = gen_list(a);
        auto gb = gen_list(b);
        auto expected = oracle::minimal_members(
            3, 3, [&](const oracle::Exps& e) { return oracle::in_ideal(ga, e) && oracle::in_ideal(gb, e); });
        REQUIRE(gen_set(intersect(a, b)) == expected);
    }
}

TEST_CASE("symbolic powers of cover ideals", "[ideal]") {
    auto tri2 = symbolic_power_bruteforce(complete_graph(3), 2);
    CHECK(tri2.to_string() == "(x1*x2*x3, x1^2*x2^2, x1^2*x3^2, x2^2*x3^2)");
    CHECK(symbolic_power_via_gk(complete_graph(3), 2) == tri2);
    CHECK(symbolic_power_bruteforce(cycle_graph(5), 1) == cover_ideal(cycle_graph(5)));
    CHECK(symbolic_power_via_gk(cycle_graph(5), 1) == cover_ideal(cycle_graph(5)));
    CHECK(symbolic_power_bruteforce(cycle_graph(4), 2) == power(cover_ideal(cycle_graph(4)), 2));
    CHECK(symbolic_power_via_gk(path_graph(3), 3) == symbolic_power_bruteforce(path_graph(3), 3));
    CHECK_THROWS_AS(symbolic_power_bruteforce(edgeless_graph(3), 2), Error);
    CHECK_THROWS_AS(symbolic_power_via_gk(edgeless_graph(3), 2), Error);
    CHECK_THROWS_AS(symbolic_power_bruteforce(path_graph(3), 0), Error);
}

TEST_CASE("both symbolic power routes match the membership oracle", "[ideal][property]") {
    for (std::size_t n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n, {.connected = true})) {
            for (unsigned k = 1; k <= 3; ++k) {
                auto brute = symbolic_power_bruteforce(g, k);
                REQUIRE(symbolic_power_via_gk(g, k) == brute);
                if (n <= 5)
                    REQUIRE(gen_set(brute) == oracle::symbolic_power(g, k));
                // Every generator puts weight at least k on each edge.
                for (const auto& m : brute.gens())
                    for (auto [u, v] : g.edges())
                        REQUIRE(m[u] + m[v] >= k);
            }
        }
    }
    auto sample = sample_graphs(8, 12, {.connected = true}, 3);
    for (const Graph& g : sample)
        for (unsigned k = 2; k <= 3; ++k)
            REQUIRE(symbolic_power_via_gk(g, k) == symbolic_power_bruteforce(g, k));
}

TEST_CASE("ordinary and symbolic powers agree on bipartite graphs", "[ideal][property]") {
    for (std::size_t n = 2; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n, {.connected = true, .bipartite = true}))
            for (unsigned k = 1; k <= 3; ++k)
                REQUIRE(power(cover_ideal(g), k) == symbolic_power_bruteforce(g, k));
    // Not so for the triangle: x1x2x3 is in the symbolic square only.
    CHECK(power(cover_ideal(complete_graph(3)), 2) != symbolic_power_bruteforce(complete_graph(3), 2));
}

TEST_CASE("polarization", "[ideal]") {
    auto [p, map] = polarize(ideal({"x", "y"}, {"x^2*y^2"}));
    CHECK(p.ambient() == std::vector<std::string>{"x_1", "x_2", "y_1", "y_2"});
    CHECK(p.to_string() == "(x_1*x_2*y_1*y_2)");
    CHECK(map.index(1, 2) == 3);
    CHECK(map.origin(2) == std::make_pair<std::size_t, std::size_t>(1, 1));

    auto sq = cover_ideal(path_graph(4));
    auto [psq, msq] = polarize(sq);
    CHECK(psq.size() == sq.size());
    CHECK(psq.nvars() == 4);
    CHECK(depolarize(psq, msq, sq.ambient()) == sq);

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        auto i = random_ideal(rng, 4, 1 + rng() % 5, 3);
        auto [pi, mi] = polarize(i);
        REQUIRE(pi.is_squarefree());
        REQUIRE(pi.size() == i.size());
        REQUIRE(depolarize(pi, mi, i.ambient()) == i);
    }
}

TEST_CASE("polarized symbolic power is the cover ideal of G_k", "[ideal]") {
    Graph tri = complete_graph(3);
    auto j2 = symbolic_power_bruteforce(tri, 2);
    auto [p, map] = polarize(j2);
    auto layered = build_gk(tri, 2);
    std::vector<std::size_t> target;
    for (std::size_t v = 0; v < p.nvars(); ++v) {
        auto [i, layer] = map.origin(v);
        target.push_back(layered.index(i, layer));
    }
    CHECK(embed(p, layered.result.labels(), target) == cover_ideal(layered.result));
}

TEST_CASE("truncations", "[ideal]") {
    auto i = ideal(x4, {"x2", "x1*x3"});
    CHECK(truncation(i, 2).to_string() == "(x1*x2, x1*x3, x2^2, x2*x3, x2*x4)");
    CHECK(truncation(i, 0).is_zero());
    auto j = cover_ideal(cycle_graph(4));
    CHECK(truncation(j, 2) == j);
    CHECK(monomials_of_degree(3, 2).size() == 6);
    CHECK(monomials_of_degree(0, 0).size() == 1);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        auto r = random_ideal(rng, 3, 1 + rng() % 4, 2);
        if (r.is_zero())
            continue;
        auto gens = gen_list(r);
        for (std::size_t l = 0; l <= r.max_degree() + 1; ++l) {
            std::set<oracle::Exps> expected;
            for (const auto& m : monomials_of_degree(3, l)) {
                oracle::Exps e(m.exponents().begin(), m.exponents().end());
                if (oracle::in_ideal(gens, e))
                    expected.insert(e);
            }
            REQUIRE(gen_set(truncation(r, l)) == expected);
        }
    }
}

TEST_CASE("ideal text and JSON formats", "[ideal][io]") {
    auto j = symbolic_power_bruteforce(complete_graph(3), 2);
    CHECK(parse_ideal_text(to_ideal_text(j)) == j);
    CHECK(ideal_from_json(to_json(j)) == j);
    CHECK(to_json(cover_ideal(cycle_graph(4))).dump() == R"({"ambient":["x1","x2","x3","x4"],"gens":[[1,0,1,0],[0,1,0,1]]})");

    auto inferred = parse_ideal_text("# comment\nb*a^2\n\nc\n");
    CHECK(inferred.ambient() == std::vector<std::string>{"b", "a", "c"});
    CHECK(inferred.size() == 2);

    try {
        parse_ideal_text("ring: x y\nx*y\nx*w\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(ideal_from_json(nlohmann::json{{"ambient", {"x"}}}), Error);
    CHECK_THROWS_AS(ideal_from_json(nlohmann::json{{"ambient", {"x"}}, {"gens", {{1, 2}}}}), Error);
}
