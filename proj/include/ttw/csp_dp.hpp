#pragma once

#include "ttw/csp.hpp"
#include "ttw/decomposition.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ttw {

/// Node each constraint is evaluated at: the shallowest node whose bag contains the scope,
/// lowest id on ties. Throws DecompositionMismatch if some scope fits no bag.
std::vector<int> assign_constraints(const CspInstance& csp, const TreeDecomposition& td);

/// Satisfiability over a load-c tree decomposition of primal_graph(csp, d); returns a witness
/// or nullopt when unsatisfiable. `table_sizes`, if given, receives the entry count per node.
/// Throws DecompositionMismatch, DomainThresholdMismatch or InvalidDecomposition.
std::optional<Assignment> solve_csp_td(const CspInstance& csp, const TreeDecomposition& td, int d, int c,
                                       std::vector<std::size_t>* table_sizes = nullptr);

/// Same over a generalized hypertree decomposition of csp_hypergraph(csp, d) whose covers hold
/// at most c heavy constraints. Candidate bag mappings are joins of cover tuples.
/// Additionally throws CoverConstraintMissing.
std::optional<Assignment> solve_csp_htd(const CspInstance& csp, const HypertreeDecomposition& htd, int d, int c,
                                        std::vector<std::size_t>* table_sizes = nullptr);

struct VcspSolution {
    Assignment assignment;
    Rational cost;
};

/// Minimum of Σ_c c(α), where c(α) is the tuple's weight if it is in the support and 0 otherwise
/// (unweighted constraints weigh 1 per listed tuple). Requires every default value to be 0.
/// nullopt only if some domain is empty.
std::optional<VcspSolution> solve_vcsp(const CspInstance& csp, const TreeDecomposition& td, int d, int c);

/// Σ_α Π_c c(α) with c(α) = f(tuple) on the support and η elsewhere (unweighted: f ≡ 1, η = 0).
Rational count_weighted(const CspInstance& csp, const TreeDecomposition& td, int d, int c);

}  // namespace ttw
