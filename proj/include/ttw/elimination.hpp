#pragma once

#include "ttw/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ttw {

/// Mutable copy of a graph supporting vertex elimination with fill-in.
/// Rows are bitsets up to `kDenseLimit` vertices and sorted lists above it.
class EliminationGraph {
public:
    static constexpr int kDenseLimit = 4096;

    explicit EliminationGraph(const LoadedGraph& g);

    int num_vertices() const noexcept { return n_; }
    bool alive(Vertex v) const { return alive_[v] != 0; }
    int num_alive() const noexcept { return alive_count_; }
    int degree(Vertex v) const { return degree_[v]; }
    VertexSet neighbors(Vertex v) const;
    /// Heavy vertices in N(v) ∪ {v} of the current graph.
    int closed_heavy_count(Vertex v) const;

    /// Removes v and turns its current neighborhood into a clique.
    /// Returns the neighborhood (sorted) and adds the number of new fill edges to `fill`.
    VertexSet eliminate(Vertex v, std::size_t& fill);

private:
    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    int n_;
    bool dense_;
    std::vector<Bitset> rows_;
    std::vector<VertexSet> lists_;
    std::vector<int> degree_;
    std::vector<char> alive_;
    std::vector<char> heavy_;
    int alive_count_;
};

/// One elimination step: v_i, its neighborhood N_{G_{i-1}}(v_i) and the derived statistics.
struct EliminationStep {
    Vertex vertex = 0;
    VertexSet neighborhood;
    int width = 0;  // |N_{G_{i-1}}(v_i)|
    int load = 0;   // heavy vertices in N_{G_{i-1}}(v_i) ∪ {v_i}

    friend bool operator==(const EliminationStep&, const EliminationStep&) = default;
};

struct EliminationOrdering {
    std::vector<Vertex> order;
    std::vector<EliminationStep> steps;  // steps[i] describes order[i]
    std::size_t fill_in = 0;
    /// Hypergraph mode only: cover chosen for the closed neighborhood of each step (edge ids).
    std::vector<std::vector<int>> covers;
    std::vector<int> cover_heavy;

    int width() const;
    int load() const;
    int cover_width() const;
    int cover_load() const;
    /// Closed neighborhood N ∪ {v} of step i, sorted.
    VertexSet bag(std::size_t i) const;

    friend bool operator==(const EliminationOrdering&, const EliminationOrdering&) = default;
};

/// Replays the ordering on a scratch copy of g. Throws NotAPermutation.
EliminationOrdering eliminate(const LoadedGraph& g, std::span<const Vertex> order);

/// Degeneracy (max over subgraphs of the minimum degree), a lower bound on treewidth.
int degeneracy(const LoadedGraph& g);

}  // namespace ttw
