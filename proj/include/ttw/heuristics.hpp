#pragma once

#include "ttw/elimination.hpp"
#include "ttw/graph.hpp"

#include <cstdint>

namespace ttw {

enum class Tiebreak { LowestId, Random };

struct HeuristicOptions {
    Tiebreak tiebreak = Tiebreak::LowestId;
    std::uint64_t seed = 0;  // used only with Tiebreak::Random
};

/// TW-H-Obl: repeatedly eliminate a minimum-degree vertex of the current graph.
EliminationOrdering min_degree_obl(const LoadedGraph& g, const HeuristicOptions& options = {});

/// TW-H-L→W: minimum-degree heavy vertices while any remain, then minimum-degree light ones.
EliminationOrdering min_degree_load_first(const LoadedGraph& g, const HeuristicOptions& options = {});

/// TW-H-W→L: minimum degree among vertices whose closed neighborhood has at most ℓ heavy
/// vertices, starting at ℓ = 0 and restarting from scratch with ℓ + 1 on a dead end.
/// `final_bound`, if given, receives the ℓ that succeeded.
EliminationOrdering min_degree_bounded_load(const LoadedGraph& g, const HeuristicOptions& options = {},
                                            int* final_bound = nullptr);

}  // namespace ttw
