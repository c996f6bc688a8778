// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Seeds, corpus sizes and tolerances are fixed below; nothing is read from the environment
// except the SAT solver location (TTW_SAT_SOLVER).

#include "oracles.hpp"
#include "ttw/bench.hpp"
#include "ttw/covers.hpp"
#include "ttw/csp_dp.hpp"
#include "ttw/exact.hpp"
#include "ttw/heuristics.hpp"
#include "ttw/io.hpp"
#include "ttw/random_instances.hpp"
#include "ttw/reduction.hpp"
#include "ttw/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

using namespace ttw;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kAc1BudgetSeconds = 600;
constexpr double kAc5BudgetSeconds = 300;
constexpr double kGreedySlack = 1e-9;  // floating-point slack on (1 + ln|bag|) · opt
constexpr int kDomainThreshold = 2;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    int checked = 0;
    int violations = 0;
    std::string first_violation;

    void fail(const std::string& what) {
        ++violations;
        if (first_violation.empty()) first_violation = what;
        pass = false;
    }
    void expect(bool ok, const std::string& what) {
        if (!ok) fail(what);
    }
};

bool have_solver() {
    const char* s = std::getenv("TTW_SAT_SOLVER");
    return s && *s;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Treewidth and load results from the exact strategies, shared between criteria 2 and 3.
struct StrategyResults {
    std::string name;
    int obl_w, obl_l, wl_w, wl_l, lw_w, lw_l;
};
std::vector<StrategyResults> g_solved;
int g_production_checked = 0;
std::vector<std::string> g_production_failures;

void check_production(const LoadedGraph& g, const TreeDecomposition& td, const std::string& where) {
    ++g_production_checked;
    const auto r = check_td(g, td);
    if (!r.ok()) g_production_failures.push_back(where + ": " + r.summary());
}

void check_production(const LoadedHypergraph& h, const HypertreeDecomposition& htd, const std::string& where) {
    ++g_production_checked;
    const auto r = check_htd(h, htd, false);
    if (!r.ok()) g_production_failures.push_back(where + ": " + r.summary());
}

ExactOptions exact_options() { return ExactOptions{}; }

std::string seed_tag(const char* what, std::uint64_t seed) { return std::string(what) + " seed " + std::to_string(seed); }

// --- criterion 1 ------------------------------------------------------------------

void ac1(Outcome& out) {
    const auto t0 = Clock::now();
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 1 + static_cast<int>(seed % 7);
        const double p = 0.2 + 0.1 * static_cast<double>(seed % 7);
        const auto g = random_graph(n, p, 1000 + seed);
        const auto r = solve_exact(g, Strategy::Obl, exact_options());
        check_production(g, r.td, seed_tag("AC1", seed));
        const int expected = oracle::brute_treewidth(g);
        ++out.checked;
        out.expect(r.width == expected && r.td.width() == expected,
                   seed_tag("graph", seed) + ": exact " + std::to_string(r.width) + " vs oracle " +
                       std::to_string(expected));
    }
    const double secs = seconds_since(t0);
    out.expect(secs <= kAc1BudgetSeconds, "runtime " + std::to_string(secs) + " s over budget");
    out.detail << out.checked << " graphs, " << secs << " s (budget " << kAc1BudgetSeconds << " s)";
}

// --- criteria 2 and 3 -------------------------------------------------------------

// Every tenth instance is a heavy clique planted on top of a random graph, which forces
// load = clique size and makes every smaller load bound infeasible.
LoadedGraph ac2_graph(std::uint64_t seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    auto g = random_loaded_graph(n, 0.45, 0.3, 2000 + seed);
    if (seed % 10 == 9) {
        const int size = std::min(n, 2 + static_cast<int>(seed % 4));
        for (int i = 0; i < size; ++i) {
            g.set_heavy(i);
            for (int j = i + 1; j < size; ++j) g.add_edge(i, j);
        }
    }
    return g;
}

void ac2(Outcome& out) {
    int infeasible_checks = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = ac2_graph(seed);
        const auto tag = seed_tag("graph", seed);
        const auto lw = solve_exact(g, Strategy::LoadThenWidth, exact_options());
        const auto wl = solve_exact(g, Strategy::WidthThenLoad, exact_options());
        const auto obl = solve_exact(g, Strategy::Obl, exact_options());
        check_production(g, lw.td, "AC2 L->W " + tag);
        check_production(g, wl.td, "AC2 W->L " + tag);
        check_production(g, obl.td, "AC2 Obl " + tag);
        g_solved.push_back({tag, obl.width, obl.td.load(g), wl.width, wl.td.load(g), lw.width, lw.td.load(g)});

        const auto [load, width] = oracle::brute_load_then_width(g);
        ++out.checked;
        out.expect(lw.load == load && lw.width == width && lw.td.load(g) == load && lw.td.width() == width,
                   tag + ": L->W (" + std::to_string(lw.load) + "," + std::to_string(lw.width) + ") vs oracle (" +
                       std::to_string(load) + "," + std::to_string(width) + ")");
        // Below the optimum no load-bounded decomposition exists; both sides must say so.
        if (load > 0) {
            ++infeasible_checks;
            const bool solver_none = !solve_load_bounded(g, load - 1, exact_options()).has_value();
            const bool oracle_none = !oracle::brute_ctw(g, load - 1).has_value();
            out.expect(solver_none && oracle_none, tag + ": load " + std::to_string(load - 1) + " not infeasible");
        }
    }
    out.detail << out.checked << " loaded graphs, " << infeasible_checks << " infeasibility checks";
}

void ac3(Outcome& out) {
    auto check = [&](const StrategyResults& s) {
        ++out.checked;
        out.expect(s.wl_w == s.obl_w, s.name + ": width(W->L) != width(Obl)");
        out.expect(s.wl_l <= s.obl_l, s.name + ": load(W->L) > load(Obl)");
        out.expect(s.lw_l <= s.wl_l, s.name + ": load(L->W) > load(W->L)");
        out.expect(s.lw_w >= s.wl_w, s.name + ": width(L->W) < width(W->L)");
    };
    for (const auto& s : g_solved) check(s);
    const int tw_count = out.checked;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        const auto h = random_hypergraph(n, 2 + static_cast<int>(seed % 5), 3, 0.3, 3000 + seed);
        const auto tag = seed_tag("hypergraph", seed);
        const auto obl = solve_exact(h, Strategy::Obl, exact_options());
        const auto wl = solve_exact(h, Strategy::WidthThenLoad, exact_options());
        const auto lw = solve_exact(h, Strategy::LoadThenWidth, exact_options());
        check_production(h, *obl.htd, "AC3 Obl " + tag);
        check_production(h, *wl.htd, "AC3 W->L " + tag);
        check_production(h, *lw.htd, "AC3 L->W " + tag);
        check({tag, obl.width, obl.load, wl.width, wl.load, lw.width, lw.load});
    }
    out.detail << tw_count << " graph and " << out.checked - tw_count << " hypergraph instances";
}

// --- criterion 4 ------------------------------------------------------------------

void ac4(Outcome& out) {
    int certified = 0;
    std::uint64_t seed = 0;
    for (; out.checked < 100; ++seed) {
        const int n = 3 + static_cast<int>(seed % 8);
        const auto g = random_loaded_graph(n, 0.4, 0.3, 4000 + seed);
        const int c = 1 + static_cast<int>(seed % 2);
        const auto ctw = oracle::brute_ctw(g, c);
        if (!ctw) continue;
        const int k = *ctw;
        const auto tag = seed_tag("graph", seed) + " c=" + std::to_string(c) + " k=" + std::to_string(k);
        ++out.checked;
        const auto r = approx_ctw(g, k, c, ApproxBackend::HeuristicThenExact);
        if (!r.td) {
            out.fail(tag + ": no decomposition although ctw_c <= k");
            continue;
        }
        const auto report = check_td(g, *r.td);
        out.expect(report.ok(), tag + ": " + report.summary());
        out.expect(r.td->width() <= c * k + k, tag + ": width " + std::to_string(r.td->width()));
        out.expect(r.td->load(g) <= c, tag + ": load " + std::to_string(r.td->load(g)));

        // One below the optimum: any output must still obey the bounds, and a certified
        // failure must be genuine.
        if (k > 0) {
            const auto below = approx_ctw(g, k - 1, c, ApproxBackend::HeuristicThenExact);
            if (below.td) {
                out.expect(check_td(g, *below.td).ok() && below.td->width() <= c * (k - 1) + k - 1 &&
                               below.td->load(g) <= c,
                           tag + ": bounds broken at k-1");
            } else {
                ++certified;
            }
        }
    }
    out.detail << out.checked << " instances (" << seed << " seeds drawn), " << certified
               << " certified lower bounds at k-1";
}

// --- criterion 5 ------------------------------------------------------------------

TreeDecomposition heuristic_td(const CspInstance& csp) {
    const auto g = primal_graph(csp, kDomainThreshold);
    return ordering_to_td(g, min_degree_obl(g));
}

// Cost of one assignment: the tuple's weight where it lies in the support, 0 elsewhere.
Rational assignment_cost(const CspInstance& csp, const Assignment& a) {
    Rational cost = 0;
    for (const auto& con : csp.constraints) {
        Tuple t;
        for (int v : con.scope) t.push_back(a[static_cast<std::size_t>(v)]);
        const auto it = std::find(con.tuples.begin(), con.tuples.end(), t);
        if (it != con.tuples.end()) cost += con.weight(static_cast<std::size_t>(it - con.tuples.begin()));
    }
    return cost;
}

void ac5(Outcome& out) {
    const auto t0 = Clock::now();
    int sat = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto csp = random_csp(CspParams{}, 5000 + seed);
        const auto tag = seed_tag("csp", seed);
        const auto g = primal_graph(csp, kDomainThreshold);
        const auto h = csp_hypergraph(csp, kDomainThreshold);
        const auto td = heuristic_td(csp);
        const auto htd = ghtw_from_ordering(h, min_degree_obl(primal_graph(h)), CoverMethod::Greedy,
                                            CoverObjective::WidthThenLoad);
        check_production(g, td, "AC5 " + tag);
        check_production(h, htd, "AC5 " + tag);
        const bool expected = oracle::brute_solution(csp).has_value();
        const auto a = solve_csp_td(csp, td, kDomainThreshold, td.load(g));
        const auto b = solve_csp_htd(csp, htd, kDomainThreshold, htd.load(h));
        ++out.checked;
        sat += expected;
        out.expect(a.has_value() == expected && b.has_value() == expected, tag + ": verdicts disagree");
        if (a) out.expect(satisfies(csp, *a), tag + ": td witness fails");
        if (b) out.expect(satisfies(csp, *b), tag + ": htd witness fails");
    }
    int vcsp = 0, counts = 0;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        CspParams vp;
        vp.weighted = true;
        const auto v = random_csp(vp, 6000 + seed);
        const auto vtd = heuristic_td(v);
        const auto s = solve_vcsp(v, vtd, kDomainThreshold, vtd.load(primal_graph(v, kDomainThreshold)));
        const auto best = oracle::brute_min_cost(v);
        ++vcsp;
        out.expect(s.has_value() == best.has_value() && (!s || s->cost == *best), seed_tag("vcsp", seed) + ": cost");
        if (s) out.expect(assignment_cost(v, s->assignment) == s->cost, seed_tag("vcsp", seed) + ": witness cost");

        CspParams cp = vp;
        cp.defaults = true;
        const auto w = random_csp(cp, 7000 + seed);
        const auto wtd = heuristic_td(w);
        const auto total = count_weighted(w, wtd, kDomainThreshold, wtd.load(primal_graph(w, kDomainThreshold)));
        ++counts;
        out.expect(total == oracle::brute_weighted_count(w), seed_tag("count", seed) + ": " + format_rational(total));
    }
    const double secs = seconds_since(t0);
    out.expect(secs <= kAc5BudgetSeconds, "runtime " + std::to_string(secs) + " s over budget");
    out.detail << out.checked << " CSPs (" << sat << " satisfiable), " << vcsp << " valued, " << counts
               << " counted, " << secs << " s (budget " << kAc5BudgetSeconds << " s)";
}

// --- criterion 6 ------------------------------------------------------------------

void ac6(Outcome& out) {
    std::mt19937_64 rng(606);
    std::uint64_t seed = 0;
    for (; out.checked < 500; ++seed) {
        const int n = 2 + static_cast<int>(seed % 9);
        const auto h = random_hypergraph(n, 2 + static_cast<int>(seed % 9), 4, 0.3, 8000 + seed);
        if (h.num_edges() > 10) continue;
        VertexSet bag;
        for (Vertex v = 0; v < n; ++v)
            if (rng() % 2) bag.push_back(v);
        if (bag.empty()) bag.push_back(static_cast<Vertex>(rng() % static_cast<unsigned>(n)));
        const auto tag = seed_tag("pair", seed);
        ++out.checked;
        for (auto obj : {CoverObjective::WidthOnly, CoverObjective::WidthThenLoad, CoverObjective::LoadThenWidth}) {
            const auto cover = bnb_cover(bag, h, obj);
            const auto oracle_key = oracle::brute_cover(bag, h, obj).key;
            out.expect(cover_key(cover, h, obj) == oracle_key, tag + ": objective " + std::to_string(int(obj)));
        }
        const double bound = (1 + std::log(static_cast<double>(bag.size()))) *
                             static_cast<double>(oracle::brute_cover(bag, h, CoverObjective::WidthOnly).key.first);
        for (bool tiebreak : {false, true}) {
            const auto greedy = greedy_cover(bag, h, tiebreak);
            out.expect(static_cast<double>(greedy.size()) <= bound + kGreedySlack, tag + ": greedy over bound");
        }
    }
    out.detail << out.checked << " pairs (" << seed << " seeds drawn, pairs over 10 edges skipped)";
}

// --- criterion 7 ------------------------------------------------------------------

void ac7(Outcome& out) {
    int strictly_lighter = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const int n = 3 + static_cast<int>(seed % 12);
        const auto h = random_hypergraph(n, 3 + static_cast<int>(seed % 10), 4, 0.3, 9000 + seed);
        const auto ord = min_degree_obl(primal_graph(h));
        const auto obl = ghtw_from_ordering(h, ord, CoverMethod::BranchAndBound, CoverObjective::WidthOnly);
        const auto wl = ghtw_from_ordering(h, ord, CoverMethod::BranchAndBound, CoverObjective::WidthThenLoad);
        const auto tag = seed_tag("hypergraph", seed);
        check_production(h, obl, "AC7 Obl " + tag);
        check_production(h, wl, "AC7 W->L " + tag);
        ++out.checked;
        out.expect(obl.width() == wl.width(), tag + ": widths differ");
        out.expect(wl.load(h) <= obl.load(h), tag + ": W->L heavier");
        strictly_lighter += wl.load(h) < obl.load(h);
    }
    out.detail << out.checked << " hypergraphs, W->L strictly lighter on " << strictly_lighter;
}

// --- criterion 8 ------------------------------------------------------------------

// A valid TD with extra slack: copies a parent-bag vertex into some child bags.
TreeDecomposition fatten(TreeDecomposition td, std::mt19937_64& rng) {
    for (int t = 0; t < td.num_nodes(); ++t) {
        const int p = td.parent[t];
        if (p < 0 || td.bags[p].empty() || rng() % 2) continue;
        const Vertex v = td.bags[p][rng() % td.bags[p].size()];
        auto& bag = td.bags[t];
        if (!std::binary_search(bag.begin(), bag.end(), v)) bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
    }
    return td;
}

void ac8(Outcome& out) {
    std::mt19937_64 rng(808);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const int n = 1 + static_cast<int>(seed % 14);
        const auto g = random_loaded_graph(n, 0.35, 0.3, 10000 + seed);
        const auto tag = seed_tag("graph", seed);
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        ++out.checked;
        for (const auto& ord : {min_degree_obl(g), min_degree_bounded_load(g), eliminate(g, perm)}) {
            const auto td = ordering_to_td(g, ord);
            check_production(g, td, "AC8 " + tag);
            const auto back = td_to_ordering(g, td);
            out.expect(back.width() <= ord.width(), tag + ": round trip raised width");
            out.expect(back.load() <= ord.load(), tag + ": round trip raised load");

            const auto fat = fatten(td, rng);
            if (!check_td(g, fat).ok()) continue;
            const auto from_fat = td_to_ordering(g, fat);
            out.expect(from_fat.width() <= fat.width(), tag + ": TD->ordering exceeds TD width");
            out.expect(from_fat.load() <= fat.load(g), tag + ": TD->ordering exceeds TD load");
        }
    }
    out.detail << out.checked << " graphs, 3 orderings each";
}

// --- criterion 9 ------------------------------------------------------------------

std::string mutate(std::string text, std::mt19937_64& rng) {
    static const std::string alphabet = "0123456789 ,.;:()%-/\nhpvbcltdesw#x\r\t";
    const int edits = 1 + static_cast<int>(rng() % 4);
    for (int e = 0; e < edits; ++e) {
        const std::size_t pos = text.empty() ? 0 : rng() % (text.size() + 1);
        const char c = alphabet[rng() % alphabet.size()];
        switch (rng() % 3) {
        case 0: text.insert(text.begin() + static_cast<std::ptrdiff_t>(pos), c); break;
        case 1: if (pos < text.size()) text.erase(pos, 1); break;
        default: if (pos < text.size()) text[pos] = c; break;
        }
    }
    return text;
}

void ac9(Outcome& out) {
    std::mt19937_64 rng(909);
    int fuzzed = 0;
    // Typed errors are the only acceptable failure mode of a parser.
    auto total = [&](const std::function<void()>& parse, const std::string& what) {
        ++fuzzed;
        try {
            parse();
        } catch (const Error&) {
        } catch (const std::exception& e) {
            out.fail(what + ": untyped exception " + e.what());
        }
    };
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto tag = seed_tag("case", seed);
        const auto g = random_loaded_graph(static_cast<int>(seed % 15), 0.3, 0.3, 11000 + seed);
        const auto h = random_hypergraph(1 + static_cast<int>(seed % 11), 2 + static_cast<int>(seed % 9), 4, 0.3,
                                         11000 + seed);
        CspParams params;
        params.weighted = seed % 2 == 1;
        params.defaults = seed % 3 == 0;
        const auto csp = random_csp(params, 11000 + seed);
        const auto td = ordering_to_td(g, min_degree_obl(g));
        const auto htd = ghtw_from_ordering(h, min_degree_obl(primal_graph(h)), CoverMethod::BranchAndBound,
                                            CoverObjective::WidthThenLoad);
        check_production(g, td, "AC9 " + tag);
        check_production(h, htd, "AC9 " + tag);

        ++out.checked;
        out.expect(parse_loaded_graph(write_loaded_graph(g)) == g, tag + ": graph round trip");
        out.expect(parse_loaded_hypergraph(write_loaded_hypergraph(h)) == h, tag + ": hypergraph round trip");
        out.expect(parse_csp(write_csp(csp)) == csp, tag + ": csp round trip");
        const auto ptd = parse_td(write_td(td, g.num_vertices()));
        out.expect(ptd.td == td && ptd.num_vertices == g.num_vertices(), tag + ": td round trip");
        out.expect(parse_htd(write_htd(htd, h.num_vertices())).htd == htd, tag + ": htd round trip");

        total([&] { parse_loaded_graph(mutate(write_loaded_graph(g), rng)); }, tag + " graph");
        total([&] { parse_loaded_hypergraph(mutate(write_loaded_hypergraph(h), rng)); }, tag + " hypergraph");
        total([&] { parse_csp(mutate(write_csp(csp), rng)); }, tag + " csp");
        total([&] { parse_td(mutate(write_td(td, g.num_vertices()), rng)); }, tag + " td");
        total([&] { parse_htd(mutate(write_htd(htd, h.num_vertices()), rng)); }, tag + " htd");

        std::string junk(rng() % 40, ' ');
        for (auto& c : junk) c = static_cast<char>(rng() % 128);
        total([&] { parse_loaded_graph(junk); }, tag + " junk graph");
        total([&] { parse_loaded_hypergraph(junk); }, tag + " junk hypergraph");
        total([&] { parse_csp(junk); }, tag + " junk csp");
        total([&] { parse_td(junk); }, tag + " junk td");
        total([&] { parse_htd(junk); }, tag + " junk htd");

        // Mutated decompositions that still parse must be judged without crashing.
        try {
            const auto m = parse_td(mutate(write_td(td, g.num_vertices()), rng));
            if (m.num_vertices == g.num_vertices()) (void)check_td(g, m.td);
        } catch (const Error&) {
        } catch (const std::exception& e) {
            out.fail(tag + ": validator threw " + e.what());
        }
    }

    // Production outputs gathered by every criterion run so far, plus each heuristic method.
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_loaded_graph(2 + static_cast<int>(seed % 20), 0.3, 0.3, 12000 + seed);
        const auto h = random_hypergraph(2 + static_cast<int>(seed % 15), 4 + static_cast<int>(seed % 12), 4, 0.3,
                                         12000 + seed);
        for (Method m : all_methods()) {
            if (is_exact_method(m)) continue;
            const auto r = decompose(m, &g, &h, exact_options());
            if (r.td) check_production(g, *r.td, "AC9 " + std::string(method_name(m)));
            if (r.htd) check_production(h, *r.htd, "AC9 " + std::string(method_name(m)));
        }
    }
    for (const auto& f : g_production_failures) out.fail("invalid output " + f);
    out.detail << out.checked << " round trips per format, " << fuzzed << " fuzzed parses, "
               << g_production_checked << " production decompositions validated";
}

// --- criterion 10 -----------------------------------------------------------------

std::string without_time(const std::vector<BenchmarkRecord>& records) {
    std::string out = csv_header() + "\n";
    for (const auto& r : records) {
        std::string line = to_csv_line(r);
        // Drop the fifth field (time_ms).
        std::size_t pos = 0;
        for (int i = 0; i < 4; ++i) pos = line.find(',', pos) + 1;
        line.erase(pos, line.find(',', pos) - pos);
        out += line + "\n";
    }
    return out;
}

void ac10(Outcome& out) {
    const auto dir = fs::temp_directory_path() / "ttw_acceptance_corpus";
    fs::remove_all(dir);
    fs::create_directories(dir);
    for (std::uint64_t i = 0; i < 12; ++i) {
        write_file((dir / ("g" + std::to_string(i) + ".gr")).string(),
                   write_loaded_graph(random_graph(6 + static_cast<int>(i % 8), 0.35, 13000 + i)));
        write_file((dir / ("h" + std::to_string(i) + ".hg")).string(),
                   write_loaded_hypergraph(random_hypergraph(5 + static_cast<int>(i % 6), 6, 3, 0.0, 13000 + i)));
    }
    MatrixOptions opts;
    opts.corpus_dir = dir.string();
    opts.ratio = 0.3;
    opts.seed = 42;
    opts.methods = {Method::TwHeurObl, Method::TwHeurWL, Method::TwHeurLW, Method::TwExactWL,
                    Method::HtBnbObl,  Method::HtBnbWL,  Method::HtBnbLW,  Method::HtGreedyWL, Method::HtExactObl};
    const auto first = run_matrix(opts);
    const auto second = run_matrix(opts);
    out.checked = static_cast<int>(first.size());
    out.expect(first.size() == 24 * opts.methods.size(), "unexpected record count " + std::to_string(first.size()));
    out.expect(without_time(first) == without_time(second), "CSV differs between runs");
    int ok = 0;
    for (const auto& r : first) ok += r.status == "ok";
    out.expect(ok == out.checked, "non-ok records: " + std::to_string(out.checked - ok));
    fs::remove_all(dir);
    out.detail << out.checked << " records per run, identical modulo time";
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        bool needs_solver;
        void (*run)(Outcome&);
    };
    const Criterion criteria[] = {
        {"AC1", "exact treewidth matches the oracle", true, ac1},
        {"AC2", "exact L->W matches the oracle, infeasibility included", true, ac2},
        {"AC3", "strategy dominance on exactly solved instances", true, ac3},
        {"AC4", "approximation bounds (width <= ck+k, load <= c)", true, ac4},
        {"AC5", "CSP dynamic programs match enumeration", false, ac5},
        {"AC6", "cover optimality and greedy bound", false, ac6},
        {"AC7", "HT width fixed by the ordering", false, ac7},
        {"AC8", "ordering/decomposition round trips", false, ac8},
        {"AC9", "validators and parser robustness", false, ac9},
        {"AC10", "harness determinism", true, ac10},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome out;
        const auto t0 = Clock::now();
        if (c.needs_solver && !have_solver()) {
            out.pass = false;
            out.detail << "no SAT solver configured (set TTW_SAT_SOLVER)";
        } else {
            try {
                c.run(out);
            } catch (const std::exception& e) {
                out.fail(std::string("exception: ") + e.what());
            }
        }
        failed += !out.pass;
        std::cout << c.id << ' ' << (out.pass ? "PASS" : "FAIL") << "  " << c.title << ": " << out.detail.str();
        if (out.violations) std::cout << "; " << out.violations << " violations, first: " << out.first_violation;
        std::cout << " [" << seconds_since(t0) << " s]" << std::endl;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << (10 - failed) << "/10" << std::endl;
    return failed ? 1 : 0;
}
