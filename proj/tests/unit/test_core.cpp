#include "doctest.h"

#include "oracles.hpp"
#include "ttw/csp.hpp"
#include "ttw/decomposition.hpp"
#include "ttw/elimination.hpp"
#include "ttw/error.hpp"
#include "ttw/heuristics.hpp"
#include "ttw/random_instances.hpp"
#include "ttw/validation.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace ttw;

namespace {

LoadedGraph path(int n) {
    LoadedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

LoadedGraph clique(int n, bool heavy = false) {
    LoadedGraph g(n);
    for (int i = 0; i < n; ++i) {
        if (heavy) g.set_heavy(i);
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    }
    return g;
}

std::vector<Vertex> identity(int n) {
    std::vector<Vertex> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

CspVariable var(std::string name, int size) {
    CspVariable v{std::move(name), {}};
    for (int i = 0; i < size; ++i) v.domain.push_back(i);
    return v;
}

}  // namespace

TEST_CASE("graph basics") {
    LoadedGraph g(3);
    CHECK(g.add_edge(0, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.num_edges() == 1);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 3), Error);
    g.set_heavy(2);
    CHECK(g.heavy_count() == 1);
    const std::vector<Vertex> all{0, 1, 2};
    CHECK(g.count_heavy(all) == 1);
}

TEST_CASE("hypergraph normalization") {
    LoadedHypergraph h(4);
    CHECK(h.add_edge({2, 0, 2}) == 0);
    CHECK(h.edge(0).vertices == VertexSet{0, 2});
    CHECK(h.add_edge({0, 2}, true) == 0);
    CHECK(h.heavy(0));
    CHECK_THROWS_AS(h.add_edge({}), Error);
    h.add_edge({0, 1, 2});
    h.cover_isolated_vertices();
    CHECK(h.num_edges() == 3);
    CHECK(h.edge(2).vertices == VertexSet{3});
    h.remove_subsumed_edges();
    CHECK(h.num_edges() == 2);
    CHECK(h.edge(0).vertices == VertexSet{0, 1, 2});
    CHECK(primal_graph(h).num_edges() == 3);
}

TEST_CASE("elimination of a path") {
    const auto g = path(4);
    const auto ord = eliminate(g, identity(4));
    std::vector<int> widths;
    for (const auto& s : ord.steps) widths.push_back(s.width);
    CHECK(widths == std::vector<int>{1, 1, 1, 0});
    CHECK(ord.width() == 1);
    CHECK(ord.fill_in == 0);
}

TEST_CASE("elimination of K4 and C5") {
    const auto k4 = clique(4);
    std::vector<Vertex> order{2, 0, 3, 1};
    CHECK(eliminate(k4, order).steps[0].width == 3);

    auto c5 = path(5);
    c5.add_edge(4, 0);
    const auto ord = eliminate(c5, identity(5));
    CHECK(ord.width() == 2);
    const auto ref = oracle::replay(c5, ord.order);
    for (std::size_t i = 0; i < ord.steps.size(); ++i) CHECK(ord.steps[i].width == ref.widths[i]);
}

TEST_CASE("elimination rejects non-permutations") {
    const auto g = path(3);
    std::vector<Vertex> twice{0, 0, 1};
    std::vector<Vertex> short_order{0, 1};
    CHECK_THROWS_AS(eliminate(g, twice), Error);
    CHECK_THROWS_AS(eliminate(g, short_order), Error);
}

TEST_CASE("elimination agrees with the reference replay") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = random_loaded_graph(3 + static_cast<int>(seed % 10), 0.4, 0.3, seed);
        auto order = identity(g.num_vertices());
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        const auto ord = eliminate(g, order);
        const auto ref = oracle::replay(g, order);
        for (std::size_t i = 0; i < order.size(); ++i) {
            CHECK(ord.steps[i].width == ref.widths[i]);
            CHECK(ord.steps[i].load == ref.loads[i]);
        }
    }
}

TEST_CASE("ordering to TD") {
    const auto p4 = path(4);
    const auto td = ordering_to_td(p4, eliminate(p4, identity(4)));
    CHECK(td.width() == 1);
    std::set<VertexSet> bags(td.bags.begin(), td.bags.end());
    CHECK(bags == std::set<VertexSet>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(check_td(p4, td).ok());

    const auto k4 = clique(4);
    const auto td4 = ordering_to_td(k4, eliminate(k4, identity(4)));
    CHECK(td4.num_nodes() == 1);
    CHECK(td4.bags[0] == VertexSet{0, 1, 2, 3});
    CHECK(td4.width() == 3);
}

TEST_CASE("ordering to TD preserves width and load") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_loaded_graph(1 + static_cast<int>(seed % 12), 0.35, 0.3, seed + 100);
        auto order = identity(g.num_vertices());
        std::mt19937_64 rng(seed);
        std::shuffle(order.begin(), order.end(), rng);
        const auto ord = eliminate(g, order);
        const auto td = ordering_to_td(g, ord);
        const auto report = check_td(g, td);
        REQUIRE_MESSAGE(report.ok(), report.summary());
        CHECK(td.width() == ord.width());
        CHECK(td.load(g) == ord.load());
    }
}

TEST_CASE("TD to ordering") {
    const auto k4 = clique(4);
    TreeDecomposition single{{{0, 1, 2, 3}}, {-1}};
    CHECK(td_to_ordering(k4, single).width() == 3);

    const auto p4 = path(4);
    TreeDecomposition chain{{{0, 1}, {1, 2}, {2, 3}}, {-1, 0, 1}};
    CHECK(td_to_ordering(p4, chain).width() == 1);

    TreeDecomposition broken{{{0, 1}, {2, 3}}, {-1, 0}};
    CHECK_THROWS_AS(td_to_ordering(p4, broken), Error);
}

TEST_CASE("TD round trip never increases width or load") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto g = random_loaded_graph(1 + static_cast<int>(seed % 12), 0.3, 0.3, seed ^ 11);
        const auto td = ordering_to_td(g, min_degree_obl(g));
        const auto ord = td_to_ordering(g, td);
        const auto back = ordering_to_td(g, ord);
        CHECK(check_td(g, back).ok());
        CHECK(back.width() <= td.width());
        CHECK(back.load(g) <= td.load(g));
    }
}

TEST_CASE("contract_subsumed carries covers") {
    TreeDecomposition td{{{0, 1, 2}, {0, 1}, {2, 3}}, {-1, 0, 0}};
    std::vector<std::vector<int>> covers{{0}, {1}, {2}};
    const auto out = contract_subsumed(td, &covers);
    CHECK(out.num_nodes() == 2);
    CHECK(covers.size() == 2);
    CHECK(out.bags[0] == VertexSet{0, 1, 2});
    CHECK(covers[0] == std::vector<int>{0});
}

TEST_CASE("degeneracy") {
    CHECK(degeneracy(clique(5)) == 4);
    CHECK(degeneracy(path(6)) == 1);
    CHECK(degeneracy(LoadedGraph(3)) == 0);
}

TEST_CASE("primal graph of a CSP") {
    CspInstance csp;
    csp.variables = {var("x", 2), var("y", 2), var("z", 5)};
    csp.constraints.push_back({{0, 1, 2}, {{0, 0, 0}}, {}, {}});
    const auto g = primal_graph(csp, 2);
    CHECK(g.num_edges() == 3);
    CHECK(g.heavy(2));
    CHECK_FALSE(g.heavy(0));
    CHECK_FALSE(g.heavy(1));

    CspInstance empty;
    empty.variables = {var("a", 1), var("b", 1), var("c", 1)};
    const auto e = primal_graph(empty, 1);
    CHECK(e.num_vertices() == 3);
    CHECK(e.num_edges() == 0);
}

TEST_CASE("primal graph matches a pairwise scan") {
    CspParams params;
    params.max_variables = 6;
    params.max_constraints = 4;
    params.max_arity = 2;
    for (std::uint64_t seed : {7ULL, 8ULL, 9ULL, 10ULL}) {
        const auto csp = random_csp(params, seed);
        CHECK(primal_graph(csp, 2).edges() == oracle::brute_primal_edges(csp));
    }
}

TEST_CASE("CSP hypergraph") {
    CspInstance csp;
    csp.variables = {var("x", 2), var("y", 2)};
    csp.constraints.push_back({{0, 1}, {{0, 0}, {0, 1}, {1, 1}}, {}, {}});
    const auto light = csp_hypergraph(csp, 3);
    CHECK(light.num_edges() == 1);
    CHECK_FALSE(light.heavy(0));
    CHECK(csp_hypergraph(csp, 2).heavy(0));
}

TEST_CASE("hyperedge merging matches set-of-sets normalization") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        std::mt19937_64 rng(seed);
        LoadedHypergraph h(6);
        std::set<std::set<Vertex>> distinct;
        for (int e = 0; e < 20; ++e) {
            std::vector<Vertex> vs;
            const int arity = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < arity; ++i) vs.push_back(static_cast<Vertex>(rng() % 6));
            distinct.insert(std::set<Vertex>(vs.begin(), vs.end()));
            h.add_edge(vs);
        }
        CHECK(h.num_edges() == static_cast<int>(distinct.size()));
    }
}

TEST_CASE("CSP hypergraph rejects repeated scope sets") {
    CspInstance csp;
    csp.variables = {var("x", 2), var("y", 2)};
    csp.constraints.push_back({{0, 1}, {{0, 0}}, {}, {}});
    csp.constraints.push_back({{1, 0}, {{0, 1}}, {}, {}});
    CHECK_THROWS_AS(csp_hypergraph(csp, 1), Error);
}

TEST_CASE("CSP validation") {
    CspInstance csp;
    csp.variables = {var("x", 2), var("y", 2)};
    csp.constraints.push_back({{0, 1}, {{0, 2}}, {}, {}});
    CHECK_THROWS_AS(csp.validate(), Error);
    csp.constraints[0] = {{0, 0}, {{0, 1}}, {}, {}};
    CHECK_THROWS_AS(csp.validate(), Error);
    csp.constraints[0] = {{0, 1}, {{0, 1, 1}}, {}, {}};
    CHECK_THROWS_AS(csp.validate(), Error);
    csp.constraints[0] = {{0, 1}, {{0, 1}, {1, 0}}, {}, {}};
    CHECK_NOTHROW(csp.validate());
    CHECK(satisfies(csp, {0, 1}));
    CHECK_FALSE(satisfies(csp, {0, 0}));
}

TEST_CASE("rational parsing") {
    CHECK(*parse_rational("3/4") == Rational(3, 4));
    CHECK(*parse_rational("-2") == Rational(-2));
    CHECK(*parse_rational("0.25") == Rational(1, 4));
    CHECK_FALSE(parse_rational("1/0").has_value());
    CHECK_FALSE(parse_rational("abc").has_value());
    CHECK(format_rational(Rational(6, 4)) == "3/2");
}
