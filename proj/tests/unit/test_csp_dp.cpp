#include "doctest.h"

#include "oracles.hpp"
#include "ttw/covers.hpp"
#include "ttw/csp_dp.hpp"
#include "ttw/heuristics.hpp"
#include "ttw/io.hpp"
#include "ttw/random_instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace ttw;

namespace {

constexpr int kThreshold = 2;

TreeDecomposition heuristic_td(const CspInstance& csp, int d) {
    const auto g = primal_graph(csp, d);
    return ordering_to_td(g, min_degree_obl(g));
}

TreeDecomposition shuffled_td(const CspInstance& csp, int d, std::uint64_t seed) {
    const auto g = primal_graph(csp, d);
    std::vector<Vertex> order(static_cast<std::size_t>(g.num_vertices()));
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return ordering_to_td(g, eliminate(g, order));
}

HypertreeDecomposition heuristic_htd(const CspInstance& csp, int d) {
    const auto h = csp_hypergraph(csp, d);
    return ghtw_from_ordering(h, min_degree_obl(primal_graph(h)), CoverMethod::Greedy, CoverObjective::WidthThenLoad);
}

TreeDecomposition single_bag(int n) {
    VertexSet all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return TreeDecomposition{{all}, {-1}};
}

}  // namespace

TEST_CASE("satisfiability fixtures") {
    const auto neq = parse_csp("v x 0 1\nv y 0 1\nct x y : 0 1 ; 1 0\n");
    const auto a = solve_csp_td(neq, single_bag(2), 2, 0);
    REQUIRE(a.has_value());
    CHECK(satisfies(neq, *a));
    CHECK((*a)[0] != (*a)[1]);

    const auto none = parse_csp("v x 0\nct x :\n");
    CHECK_FALSE(solve_csp_td(none, single_bag(1), 1, 0).has_value());

    const auto chain = parse_csp("v x 0 1\nv y 0 1\nv z 0 1\nct x y : 0 1\nct y z : 1 0\n");
    const TreeDecomposition td{{{0, 1}, {1, 2}}, {-1, 0}};
    CHECK(solve_csp_td(chain, td, 2, 0) == Assignment{0, 1, 0});
}

TEST_CASE("hypertree mode fixtures") {
    const auto csp = parse_csp("v x 0 1\nv y 0 1\nv z 0 1\nct x y z : 0 0 0 ; 1 1 1\n");
    HypertreeDecomposition htd{single_bag(3), {{0}}};
    std::vector<std::size_t> sizes;
    const auto a = solve_csp_htd(csp, htd, 8, 0, &sizes);
    REQUIRE(a.has_value());
    CHECK(sizes == std::vector<std::size_t>{2});
    CHECK(((*a)[0] == (*a)[1] && (*a)[1] == (*a)[2]));

    const auto chain = parse_csp("v x 0 1\nv y 0 1\nv z 0 1\nct x y : 0 1\nct y z : 1 0\n");
    HypertreeDecomposition two{{{{0, 1}, {1, 2}}, {-1, 0}}, {{0}, {1}}};
    CHECK(solve_csp_htd(chain, two, 8, 0) == Assignment{0, 1, 0});

    HypertreeDecomposition bad_id = two;
    bad_id.covers[1] = {7};
    CHECK_THROWS_AS(solve_csp_htd(chain, bad_id, 8, 0), Error);
    // Both constraints have one tuple, so with d = 0 each cover holds a heavy edge.
    try {
        solve_csp_htd(chain, two, 0, 0);
        FAIL("expected a threshold mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainThresholdMismatch);
    }
}

TEST_CASE("decomposition errors") {
    const auto chain = parse_csp("v x 0 1\nv y 0 1 2\nv z 0 1\nct x y : 0 1\nct y z : 1 0\n");
    const TreeDecomposition split{{{0, 1}, {2}}, {-1, 0}};
    try {
        solve_csp_td(chain, split, 2, 1);
        FAIL("expected a mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DecompositionMismatch);
    }
    const TreeDecomposition good{{{0, 1}, {1, 2}}, {-1, 0}};
    try {
        solve_csp_td(chain, good, 2, 0);  // y is heavy at d = 2
        FAIL("expected a threshold mismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DomainThresholdMismatch);
    }
    CHECK(solve_csp_td(chain, good, 2, 1).has_value());
    const TreeDecomposition cyclic{{{0, 1}, {1, 2}}, {1, 0}};
    CHECK_THROWS_AS(solve_csp_td(chain, cyclic, 2, 1), Error);
}

TEST_CASE("constraint placement") {
    const auto chain = parse_csp("v x 0 1\nv y 0 1\nv z 0 1\nct x y : 0 1\nct y : 1\nct y z : 1 0\n");
    const TreeDecomposition td{{{0, 1}, {1, 2}}, {-1, 0}};
    CHECK(assign_constraints(chain, td) == std::vector<int>{0, 0, 1});
}

TEST_CASE("valued CSP fixtures") {
    const auto unary = parse_csp("v x 0 1\nct x : 0 w 3 ; 1 w 5\n");
    const auto s = solve_vcsp(unary, single_bag(1), 2, 0);
    REQUIRE(s.has_value());
    CHECK(s->assignment == Assignment{0});
    CHECK(s->cost == Rational(3));

    // Three pairwise "differ" constraints on a binary domain: an odd cycle forces one violation.
    const auto maxcsp = parse_csp("v x 0 1\nv y 0 1\nv z 0 1\n"
                                  "ct x y : 0 0 w 1 ; 1 1 w 1\n"
                                  "ct x z : 0 0 w 1 ; 1 1 w 1\n"
                                  "ct y z : 0 0 w 1 ; 1 1 w 1\n");
    const auto m = solve_vcsp(maxcsp, single_bag(3), 2, 0);
    REQUIRE(m.has_value());
    CHECK(m->cost == Rational(1));
    CHECK(m->cost == *oracle::brute_min_cost(maxcsp));

    const auto bad = parse_csp("v x 0 1\nct x : 0 w 1 ; dflt 2\n");
    CHECK_THROWS_AS(solve_vcsp(bad, single_bag(1), 2, 0), Error);
}

TEST_CASE("weighted counting fixtures") {
    CHECK(count_weighted(parse_csp("v x 0 1\n"), single_bag(1), 2, 0) == Rational(2));
    const auto clause = parse_csp("v x 0 1\nv y 0 1\nct x y : 0 1 ; 1 0 ; 1 1\n");
    CHECK(count_weighted(clause, single_bag(2), 2, 0) == Rational(3));
    const auto w = parse_csp("v x 0 1\nct x : 0 w 1/2 ; dflt 1/3\n");
    CHECK(count_weighted(w, single_bag(1), 2, 0) == Rational(5, 6));
}

TEST_CASE("seeded agreement with enumeration") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto csp = random_csp(CspParams{}, seed);
        const auto td = heuristic_td(csp, kThreshold);
        const int c = td.load(primal_graph(csp, kThreshold));
        const auto htd = heuristic_htd(csp, kThreshold);
        const int hc = htd.load(csp_hypergraph(csp, kThreshold));
        const bool expected = oracle::brute_solution(csp).has_value();

        const auto a = solve_csp_td(csp, td, kThreshold, c);
        const auto b = solve_csp_htd(csp, htd, kThreshold, hc);
        CHECK(a.has_value() == expected);
        CHECK(b.has_value() == expected);
        if (a) CHECK(satisfies(csp, *a));
        if (b) CHECK(satisfies(csp, *b));

        // A second decomposition of the same instance reaches the same verdict.
        const auto other = shuffled_td(csp, kThreshold, seed);
        CHECK(solve_csp_td(csp, other, kThreshold, other.load(primal_graph(csp, kThreshold))).has_value() == expected);
    }
}

TEST_CASE("seeded valued and counting agreement") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        CspParams vp;
        vp.weighted = true;
        const auto vcsp = random_csp(vp, seed);
        const auto td = heuristic_td(vcsp, kThreshold);
        const int c = td.load(primal_graph(vcsp, kThreshold));
        const auto s = solve_vcsp(vcsp, td, kThreshold, c);
        const auto best = oracle::brute_min_cost(vcsp);
        REQUIRE(s.has_value() == best.has_value());
        if (s) CHECK(s->cost == *best);

        CspParams cp = vp;
        cp.defaults = true;
        const auto wcsp = random_csp(cp, seed + 7000);
        const auto wtd = heuristic_td(wcsp, kThreshold);
        const auto other = shuffled_td(wcsp, kThreshold, seed);
        const auto g = primal_graph(wcsp, kThreshold);
        const auto expected = oracle::brute_weighted_count(wcsp);
        CHECK(count_weighted(wcsp, wtd, kThreshold, wtd.load(g)) == expected);
        CHECK(count_weighted(wcsp, other, kThreshold, other.load(g)) == expected);
    }
}
