#include "ttw/exact.hpp"

#include "ttw/covers.hpp"
#include "ttw/heuristics.hpp"

#include <algorithm>

namespace ttw {

std::string_view to_string(Strategy s) {
    switch (s) {
        case Strategy::Obl: return "Obl";
        case Strategy::WidthThenLoad: return "W->L";
        case Strategy::LoadThenWidth: return "L->W";
    }
    return "?";
}

namespace {

std::string order_name(int i, int j) { return "o_" + std::to_string(i) + "_" + std::to_string(j); }
std::string arc_name(int i, int j) { return "a_" + std::to_string(i) + "_" + std::to_string(j); }
std::string cov_name(int u, int e) { return "cov_" + std::to_string(u) + "_" + std::to_string(e); }

/// Order and arc variables with transitivity, edge seeding and fill closure.
/// Returns arc[i][j] (0 on the diagonal).
std::vector<std::vector<int>> encode_elimination(CnfFormula& f, const LoadedGraph& g) {
    const int n = g.num_vertices();
    std::vector<std::vector<int>> o(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            o[i][j] = f.new_var(order_name(i, j));
            o[j][i] = -o[i][j];
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l) {
                f.add_clause({-o[i][j], -o[j][l], o[i][l]});
                f.add_clause({o[i][j], o[j][l], -o[i][l]});
            }
    std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) a[i][j] = f.new_var(arc_name(i, j));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) f.add_clause({-a[i][j], o[i][j]});
    for (auto [u, v] : g.edges()) {
        f.add_clause({-o[u][v], a[u][v]});
        f.add_clause({-o[v][u], a[v][u]});
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int l = j + 1; l < n; ++l) {
                if (l == i) continue;
                f.add_clause({-a[i][j], -a[i][l], a[j][l], a[l][j]});
            }
        }
    return a;
}

void check_load_bound(std::optional<int> c) {
    if (c && *c < 0) throw Error(ErrorCode::InfeasibleBound, "load bound " + std::to_string(*c) + " is negative");
}

}  // namespace

CnfFormula encode_tw(const LoadedGraph& g, int k, std::optional<int> c) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "width bound must be non-negative");
    check_load_bound(c);
    CnfFormula f;
    const auto a = encode_elimination(f, g);
    const int n = g.num_vertices();
    for (int i = 0; i < n; ++i) {
        std::vector<int> arcs, heavy_arcs;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            arcs.push_back(a[i][j]);
            if (g.heavy(j)) heavy_arcs.push_back(a[i][j]);
        }
        f.at_most_k(arcs, k, "w" + std::to_string(i));
        if (c) f.at_most_k(heavy_arcs, *c - (g.heavy(i) ? 1 : 0), "l" + std::to_string(i));
    }
    return f;
}

CnfFormula encode_ghtw(const LoadedHypergraph& h, int k, std::optional<int> c) {
    if (k < 1) throw Error(ErrorCode::InvalidArgument, "cover bound must be at least 1");
    check_load_bound(c);
    CnfFormula f;
    const auto primal = primal_graph(h);
    const auto a = encode_elimination(f, primal);
    const int n = h.num_vertices();
    const int m = h.num_edges();
    for (int u = 0; u < n; ++u) {
        if (h.incident(u).empty())
            throw Error(ErrorCode::Uncoverable, "vertex " + std::to_string(u + 1) + " lies in no hyperedge");
        std::vector<int> cov(static_cast<std::size_t>(m));
        for (int e = 0; e < m; ++e) cov[e] = f.new_var(cov_name(u, e));
        std::vector<int> own;
        for (int e : h.incident(u)) own.push_back(cov[e]);
        f.add_clause(own);
        for (int v = 0; v < n; ++v) {
            if (v == u) continue;
            std::vector<int> clause{-a[u][v]};
            for (int e : h.incident(v)) clause.push_back(cov[e]);
            f.add_clause(std::move(clause));
        }
        f.at_most_k(cov, k, "w" + std::to_string(u));
        if (c) {
            std::vector<int> heavy;
            for (int e = 0; e < m; ++e)
                if (h.heavy(e)) heavy.push_back(cov[e]);
            f.at_most_k(heavy, *c, "l" + std::to_string(u));
        }
    }
    return f;
}

std::vector<Vertex> decode_order(const CnfFormula& cnf, const SolverVerdict& model, int n) {
    // Position of v = number of vertices placed before it.
    std::vector<int> before(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (model.value(cnf.var(order_name(i, j))))
                ++before[j];
            else
                ++before[i];
        }
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) { return before[x] < before[y]; });
    return order;
}

ExactTimeout::ExactTimeout(ExactResult incumbent, int width_lower_bound)
    : Error(ErrorCode::SolverTimeout, "exact search ran out of time; best bounds width " +
                                          std::to_string(incumbent.width) + ", load " + std::to_string(incumbent.load)),
      incumbent_(std::move(incumbent)),
      width_lower_bound_(width_lower_bound) {}

namespace {

/// Removes hyperedges whose vertices in `bag` are already covered by the rest.
std::vector<int> trim_cover(std::vector<int> cover, const VertexSet& bag, const LoadedHypergraph& h) {
    auto covers_bag = [&](const std::vector<int>& c) {
        VertexSet u;
        for (int e : c) u = set_union(u, h.edge(e).vertices);
        return is_subset(bag, u);
    };
    for (std::size_t i = cover.size(); i-- > 0;) {
        std::vector<int> without = cover;
        without.erase(without.begin() + static_cast<std::ptrdiff_t>(i));
        if (covers_bag(without)) cover = std::move(without);
    }
    return cover;
}

/// Drives one sequence of decision probes against the external solver, remembering the best
/// ordering found so the caller can always report an incumbent.
class Search {
public:
    Search(const LoadedGraph& g, const ExactOptions& options)
        : graph_(&g), options_(options), start_(std::chrono::steady_clock::now()) {}
    Search(const LoadedHypergraph& h, const ExactOptions& options)
        : graph_(nullptr), hyper_(&h), primal_(primal_graph(h)), options_(options),
          start_(std::chrono::steady_clock::now()) {}

    const LoadedGraph& graph() const { return hyper_ ? primal_ : *graph_; }
    bool hyper() const { return hyper_ != nullptr; }
    int n() const { return graph().num_vertices(); }
    /// k value that leaves the width unconstrained.
    int free_width() const { return hyper_ ? std::max(1, hyper_->num_edges()) : std::max(0, n() - 1); }

    int width_of(const EliminationOrdering& o) const { return hyper_ ? o.cover_width() : o.width(); }
    int load_of(const EliminationOrdering& o) const { return hyper_ ? o.cover_load() : o.load(); }

    /// Heuristic incumbents: min-degree orderings, with covers in hypergraph mode.
    std::vector<EliminationOrdering> heuristic_orderings() const {
        std::vector<EliminationOrdering> out;
        const auto& g = graph();
        if (!hyper_) {
            out.push_back(min_degree_obl(g));
            out.push_back(min_degree_bounded_load(g));
            out.push_back(min_degree_load_first(g));
            return out;
        }
        const auto base = min_degree_obl(g);
        for (auto obj : {CoverObjective::WidthThenLoad, CoverObjective::LoadThenWidth}) {
            auto o = base;
            try {
                assign_covers(*hyper_, o, CoverMethod::BranchAndBound, obj);
            } catch (const CoverBudgetExhausted&) {
                assign_covers(*hyper_, o, CoverMethod::Greedy, obj);
            }
            out.push_back(std::move(o));
        }
        return out;
    }

    void offer(EliminationOrdering o) { incumbent_ = std::move(o); }

    /// One decision probe at (k, c).
    std::optional<EliminationOrdering> probe(int k, std::optional<int> c) {
        std::chrono::milliseconds remaining{0};
        if (options_.timeout.count() > 0) {
            remaining = options_.timeout -
                        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
            if (remaining.count() <= 0) timeout();
        }
        const CnfFormula cnf = hyper_ ? encode_ghtw(*hyper_, k, c) : encode_tw(graph(), k, c);
        ++probes_;
        SolverVerdict verdict;
        try {
            verdict = run_solver(cnf, options_.solver, remaining);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::SolverTimeout) timeout();
            throw;
        }
        if (verdict.status == SolverVerdict::Status::Unknown)
            throw Error(ErrorCode::SolverCrash, "solver returned no verdict: " + verdict.reason);
        if (!verdict.sat()) return std::nullopt;
        auto ord = eliminate(graph(), decode_order(cnf, verdict, n()));
        if (hyper_) {
            for (std::size_t i = 0; i < ord.steps.size(); ++i) {
                const Vertex u = ord.steps[i].vertex;
                std::vector<int> cover;
                for (int e = 0; e < hyper_->num_edges(); ++e)
                    if (verdict.value(cnf.var(cov_name(u, e)))) cover.push_back(e);
                cover = trim_cover(std::move(cover), ord.bag(i), *hyper_);
                int heavy = 0;
                for (int e : cover) heavy += hyper_->heavy(e) ? 1 : 0;
                ord.covers.push_back(std::move(cover));
                ord.cover_heavy.push_back(heavy);
            }
        }
        if (width_of(ord) > k || (c && load_of(ord) > *c))
            throw Error(ErrorCode::SolverCrash, "solver model decodes to an ordering outside the probed bounds");
        return ord;
    }

    /// Smallest k in [lo, hi] with a feasible probe at load c, given that the incumbent
    /// (width ≤ hi, load ≤ c) is already feasible.
    int minimize_width(int lo, int hi, std::optional<int> c) {
        width_lb_ = lo;
        while (lo < hi) {
            const int mid = lo + (hi - lo) / 2;
            if (auto o = probe(mid, c)) {
                hi = width_of(*o);
                offer(std::move(*o));
            } else {
                lo = mid + 1;
                width_lb_ = lo;
            }
        }
        return hi;
    }

    int minimize_load(int k, int lo, int hi) {
        while (lo < hi) {
            const int mid = lo + (hi - lo) / 2;
            if (auto o = probe(k, mid)) {
                hi = load_of(*o);
                offer(std::move(*o));
            } else {
                lo = mid + 1;
            }
        }
        return hi;
    }

    int width_lower_bound() const {
        if (n() == 0) return 0;
        return hyper_ ? 1 : degeneracy(graph());
    }
    int load_lower_bound() const { return !hyper_ && graph().heavy_count() > 0 ? 1 : 0; }

    ExactResult result() const {
        ExactResult r;
        r.ordering = *incumbent_;
        r.probes = probes_;
        if (hyper_) {
            r.htd = htd_from_covered_ordering(r.ordering);
            r.td = r.htd->td;
            r.width = r.htd->width();
            r.load = r.htd->load(*hyper_);
        } else {
            r.td = ordering_to_td(graph(), r.ordering);
            r.width = r.ordering.width();
            r.load = r.ordering.load();
        }
        return r;
    }

    const EliminationOrdering& incumbent() const { return *incumbent_; }

private:
    [[noreturn]] void timeout() const {
        if (!incumbent_) throw Error(ErrorCode::SolverTimeout, "time budget exhausted before any decomposition was found");
        throw ExactTimeout(result(), width_lb_);
    }

    const LoadedGraph* graph_ = nullptr;
    const LoadedHypergraph* hyper_ = nullptr;
    LoadedGraph primal_;
    ExactOptions options_;
    std::chrono::steady_clock::time_point start_;
    std::optional<EliminationOrdering> incumbent_;
    int probes_ = 0;
    int width_lb_ = 0;
};

ExactResult run_strategy(Search& s, Strategy strategy) {
    auto candidates = s.heuristic_orderings();
    auto by_width = [&](const EliminationOrdering& x, const EliminationOrdering& y) {
        return std::pair(s.width_of(x), s.load_of(x)) < std::pair(s.width_of(y), s.load_of(y));
    };
    auto by_load = [&](const EliminationOrdering& x, const EliminationOrdering& y) {
        return std::pair(s.load_of(x), s.width_of(x)) < std::pair(s.load_of(y), s.width_of(y));
    };
    const int lb = s.width_lower_bound();

    if (strategy == Strategy::LoadThenWidth) {
        s.offer(*std::min_element(candidates.begin(), candidates.end(), by_load));
        const int c = s.minimize_load(s.free_width(), s.load_lower_bound(), s.load_of(s.incumbent()));
        s.minimize_width(std::min(lb, s.width_of(s.incumbent())), s.width_of(s.incumbent()), c);
        return s.result();
    }
    s.offer(*std::min_element(candidates.begin(), candidates.end(), by_width));
    const int k = s.minimize_width(std::min(lb, s.width_of(s.incumbent())), s.width_of(s.incumbent()), std::nullopt);
    if (strategy == Strategy::WidthThenLoad) s.minimize_load(k, s.load_lower_bound(), s.load_of(s.incumbent()));
    return s.result();
}

std::optional<ExactResult> run_load_bounded(Search& s, int c) {
    check_load_bound(c);
    std::optional<EliminationOrdering> start;
    for (auto& o : s.heuristic_orderings())
        if (s.load_of(o) <= c && (!start || s.width_of(o) < s.width_of(*start))) start = std::move(o);
    if (!start) start = s.probe(s.free_width(), c);
    if (!start) return std::nullopt;
    const int hi = s.width_of(*start);
    s.offer(std::move(*start));
    s.minimize_width(std::min(s.width_lower_bound(), hi), hi, c);
    return s.result();
}

}  // namespace

ExactResult solve_exact(const LoadedGraph& g, Strategy strategy, const ExactOptions& options) {
    Search s(g, options);
    return run_strategy(s, strategy);
}

ExactResult solve_exact(const LoadedHypergraph& h, Strategy strategy, const ExactOptions& options) {
    Search s(h, options);
    return run_strategy(s, strategy);
}

std::optional<ExactResult> solve_load_bounded(const LoadedGraph& g, int c, const ExactOptions& options) {
    Search s(g, options);
    return run_load_bounded(s, c);
}

std::optional<ExactResult> solve_load_bounded(const LoadedHypergraph& h, int c, const ExactOptions& options) {
    Search s(h, options);
    return run_load_bounded(s, c);
}

std::optional<EliminationOrdering> probe_tw(const LoadedGraph& g, int k, std::optional<int> c,
                                            const SolverConfig& solver, std::chrono::milliseconds timeout) {
    ExactOptions options{solver, timeout};
    Search s(g, options);
    s.offer(min_degree_obl(g));
    return s.probe(k, c);
}

}  // namespace ttw
