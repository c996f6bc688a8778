#pragma once

#include "ttw/cnf.hpp"
#include "ttw/decomposition.hpp"
#include "ttw/elimination.hpp"
#include "ttw/error.hpp"
#include "ttw/graph.hpp"
#include "ttw/sat_solver.hpp"

#include <chrono>
#include <optional>
#include <string_view>

namespace ttw {

enum class Strategy { Obl, WidthThenLoad, LoadThenWidth };
std::string_view to_string(Strategy s);

/// Satisfiable iff g has an elimination ordering of width ≤ k in which every closed
/// neighborhood holds ≤ c heavy vertices (when c is given). Any k ≥ n − 1 leaves width free.
/// Variables: o_i_j (i before j, i < j), a_i_j (j in N(i) when i is eliminated).
/// Throws InfeasibleBound if c < 0.
CnfFormula encode_tw(const LoadedGraph& g, int k, std::optional<int> c = std::nullopt);

/// Satisfiable iff the primal graph of h has an ordering whose every closed neighborhood is
/// covered by ≤ k hyperedges containing ≤ c heavy ones. Adds cov_u_e. Any k ≥ |E| leaves width free.
CnfFormula encode_ghtw(const LoadedHypergraph& h, int k, std::optional<int> c = std::nullopt);

/// Ordering read off a model of encode_tw / encode_ghtw (vertices sorted by o-variables).
std::vector<Vertex> decode_order(const CnfFormula& cnf, const SolverVerdict& model, int n);

struct ExactOptions {
    SolverConfig solver;
    std::chrono::milliseconds timeout{0};  // whole search; 0 = unlimited
};

struct ExactResult {
    int width = 0;
    int load = 0;
    EliminationOrdering ordering;            // covers filled in ghtw mode
    TreeDecomposition td;                     // tw mode
    std::optional<HypertreeDecomposition> htd;  // ghtw mode
    int probes = 0;                           // solver invocations
};

/// Raised when the time budget runs out; carries the best decomposition found so far.
class ExactTimeout : public Error {
public:
    ExactTimeout(ExactResult incumbent, int width_lower_bound);
    const ExactResult& incumbent() const noexcept { return incumbent_; }
    int width_lower_bound() const noexcept { return width_lower_bound_; }

private:
    ExactResult incumbent_;
    int width_lower_bound_;
};

/// TW-X-*: Obl minimizes width only, WidthThenLoad fixes the minimum width then minimizes load,
/// LoadThenWidth minimizes load with width unconstrained, then width at that load.
ExactResult solve_exact(const LoadedGraph& g, Strategy strategy, const ExactOptions& options);
/// HT-X-*: the same strategies for generalized hypertree width.
ExactResult solve_exact(const LoadedHypergraph& h, Strategy strategy, const ExactOptions& options);

/// Minimum width among orderings of load ≤ c; nullopt when no load-c decomposition exists.
std::optional<ExactResult> solve_load_bounded(const LoadedGraph& g, int c, const ExactOptions& options);
std::optional<ExactResult> solve_load_bounded(const LoadedHypergraph& h, int c, const ExactOptions& options);

/// Single decision probe: an ordering of width ≤ k and load ≤ c, or nullopt if none exists.
std::optional<EliminationOrdering> probe_tw(const LoadedGraph& g, int k, std::optional<int> c,
                                            const SolverConfig& solver,
                                            std::chrono::milliseconds timeout = std::chrono::milliseconds{0});

}  // namespace ttw
