#pragma once

#include "ttw/decomposition.hpp"
#include "ttw/exact.hpp"
#include "ttw/graph.hpp"

#include <optional>
#include <vector>

namespace ttw {

/// Graph in which every heavy vertex of the original is replaced by k + 1 images forming a clique.
struct ExpandedGraph {
    LoadedGraph graph;                        // all vertices light
    int k = 0;
    std::vector<std::vector<Vertex>> images;  // original vertex -> its vertices in `graph`
    std::vector<Vertex> origin;               // vertex of `graph` -> original vertex
};

ExpandedGraph expand_heavy(const LoadedGraph& g, int k);

/// Discretizes td' (drops images of heavy vertices whose image set is incomplete in a bag),
/// maps images back to their original and contracts nested bags.
/// Throws InvalidDecomposition if td' is not a tree decomposition of x.graph.
TreeDecomposition project_decomposition(const LoadedGraph& g, const ExpandedGraph& x, const TreeDecomposition& td_prime);

/// Replaces every heavy vertex in a bag of td by all of its images: a TD of x.graph.
TreeDecomposition lift_decomposition(const ExpandedGraph& x, const TreeDecomposition& td);

enum class ApproxBackend {
    Exact,               // one SAT probe at width ck + k on the expanded graph
    Heuristic,           // min-degree on the expanded graph; never certifies failure
    HeuristicThenExact,  // heuristic first, SAT probe when it overshoots
};

struct ApproxResult {
    /// Decomposition of g with width ≤ ck + k and load ≤ c; empty when the backend proved
    /// that the expanded graph has treewidth > ck + k, i.e. the load-c treewidth of g exceeds k.
    std::optional<TreeDecomposition> td;
    int expanded_width = -1;  // width of the decomposition of the expanded graph, if any
    bool certified_lower_bound() const noexcept { return !td.has_value(); }
};

/// Throws Inconclusive when the heuristic backend overshoots ck + k.
ApproxResult approx_ctw(const LoadedGraph& g, int k, int c, ApproxBackend backend,
                        const SolverConfig& solver = {});

}  // namespace ttw
