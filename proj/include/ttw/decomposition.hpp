#pragma once

#include "ttw/elimination.hpp"
#include "ttw/graph.hpp"

#include <utility>
#include <vector>

namespace ttw {

/// Rooted tree decomposition. Node 0 is the root; parent[0] == -1.
struct TreeDecomposition {
    std::vector<VertexSet> bags;
    std::vector<int> parent;

    int num_nodes() const noexcept { return static_cast<int>(bags.size()); }
    /// Largest bag size minus one (0 for decompositions whose bags are all empty).
    int width() const;
    int load(const LoadedGraph& g) const;
    std::vector<std::vector<int>> children() const;
    /// Nodes in breadth-first order from the root.
    std::vector<int> bfs_order() const;

    friend bool operator==(const TreeDecomposition&, const TreeDecomposition&) = default;
};

/// Generalized hypertree decomposition: a tree decomposition plus one edge cover per node.
struct HypertreeDecomposition {
    TreeDecomposition td;
    std::vector<std::vector<int>> covers;  // sorted hyperedge ids per node

    int width() const;
    int load(const LoadedHypergraph& h) const;
    /// Special Condition: (e \ χ(t)) ∩ χ(t') = ∅ for every e ∈ λ(t) and descendant t' of t.
    bool special_condition_ok(const LoadedHypergraph& h) const;

    friend bool operator==(const HypertreeDecomposition&, const HypertreeDecomposition&) = default;
};

/// Tree built from an elimination ordering, remembering which step each node's bag came from.
struct OrderingTree {
    TreeDecomposition td;
    std::vector<int> node_step;
};

/// Bag of step i is N_{G_{i-1}}(v_i) ∪ {v_i}; its parent is the bag of the earliest-eliminated
/// neighbor. Components are chained under the bag of the last eliminated vertex, and tree edges
/// whose bags are nested are contracted into the larger bag.
OrderingTree ordering_tree(const EliminationOrdering& ord);
TreeDecomposition ordering_to_td(const LoadedGraph& g, const EliminationOrdering& ord);

/// Leaf-peeling conversion back to an ordering; picks the lowest-id leaf at each step.
/// Throws InvalidDecomposition if td is not a tree decomposition of g.
EliminationOrdering td_to_ordering(const LoadedGraph& g, const TreeDecomposition& td);

/// Contracts tree edges whose bags are nested; the surviving node keeps the larger bag.
/// `covers`, when non-null, is carried along with its bag.
TreeDecomposition contract_subsumed(const TreeDecomposition& td, std::vector<std::vector<int>>* covers = nullptr);

}  // namespace ttw
