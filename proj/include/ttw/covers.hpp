#pragma once

#include "ttw/decomposition.hpp"
#include "ttw/elimination.hpp"
#include "ttw/error.hpp"
#include "ttw/graph.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace ttw {

enum class CoverObjective { WidthOnly, WidthThenLoad, LoadThenWidth };

/// Lexicographic key of a cover under `obj`; smaller is better.
std::pair<int, int> cover_key(std::span<const int> cover, const LoadedHypergraph& h, CoverObjective obj);

/// Repeatedly adds the hyperedge covering the most uncovered bag vertices. With `load_tiebreak`,
/// ties prefer light hyperedges; remaining ties go to the lowest id. Throws Uncoverable.
std::vector<int> greedy_cover(std::span<const Vertex> bag, const LoadedHypergraph& h, bool load_tiebreak);

inline constexpr std::size_t kDefaultCoverBudget = 1'000'000;

class CoverBudgetExhausted : public Error {
public:
    CoverBudgetExhausted(std::vector<int> incumbent);
    /// Best cover found before the budget ran out (always a valid cover).
    const std::vector<int>& incumbent() const noexcept { return incumbent_; }

private:
    std::vector<int> incumbent_;
};

/// Lexicographically optimal cover under `obj` by branch & bound, seeded with the greedy cover.
/// Throws Uncoverable, or CoverBudgetExhausted after `budget` search nodes.
std::vector<int> bnb_cover(std::span<const Vertex> bag, const LoadedHypergraph& h, CoverObjective obj,
                           std::size_t budget = kDefaultCoverBudget);

enum class CoverMethod { Greedy, BranchAndBound };

/// Fills ord.covers / ord.cover_heavy with a cover of every step's closed neighborhood.
/// Greedy uses the load tiebreak unless obj is WidthOnly.
void assign_covers(const LoadedHypergraph& h, EliminationOrdering& ord, CoverMethod method, CoverObjective obj,
                   std::size_t budget = kDefaultCoverBudget);

/// Decomposition from an ordering whose covers are filled in: each node of the ordering tree
/// takes the cover chosen for the step its bag came from.
HypertreeDecomposition htd_from_covered_ordering(const EliminationOrdering& ord);

/// HT-H-* / HT-G-*: covers per step, assembled into a generalized hypertree decomposition.
/// `ord` must be an ordering of primal_graph(h).
HypertreeDecomposition ghtw_from_ordering(const LoadedHypergraph& h, const EliminationOrdering& ord,
                                          CoverMethod method, CoverObjective obj,
                                          std::size_t budget = kDefaultCoverBudget);

}  // namespace ttw
