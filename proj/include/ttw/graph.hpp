#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ttw {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

/// Fixed-size dynamic bitset over [0, size).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::size_t count() const noexcept;
    bool none() const noexcept;

    Bitset& operator|=(const Bitset& other) noexcept;
    Bitset& operator&=(const Bitset& other) noexcept;

    /// Calls fn(i) for every set bit in increasing order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                fn(static_cast<Vertex>(w * 64 + b));
                bits &= bits - 1;
            }
        }
    }

    VertexSet to_vector() const;

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Simple graph on [0, n) with a heavy/light partition of the vertices.
class LoadedGraph {
public:
    LoadedGraph() = default;
    explicit LoadedGraph(int n);

    int num_vertices() const noexcept { return static_cast<int>(adjacency_.size()); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    /// Returns false if the edge was already present. Throws on self-loops or bad ids.
    bool add_edge(Vertex u, Vertex v);
    bool adjacent(Vertex u, Vertex v) const;
    const VertexSet& neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

    bool heavy(Vertex v) const { return heavy_.at(v) != 0; }
    void set_heavy(Vertex v, bool value = true);
    int heavy_count() const;
    /// Number of heavy vertices among `vertices`.
    int count_heavy(std::span<const Vertex> vertices) const;

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const LoadedGraph&, const LoadedGraph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> adjacency_;
    std::vector<char> heavy_;
    std::size_t num_edges_ = 0;
};

struct Hyperedge {
    VertexSet vertices;
    bool heavy = false;
    std::string name;

    friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

/// Hypergraph on [0, n) whose hyperedges are partitioned into heavy and light.
/// Hyperedge vertex sets are normalized (sorted, deduplicated) and pairwise distinct.
class LoadedHypergraph {
public:
    LoadedHypergraph() = default;
    explicit LoadedHypergraph(int n);

    int num_vertices() const noexcept { return static_cast<int>(incidence_.size()); }
    int num_edges() const noexcept { return static_cast<int>(edges_.size()); }

    /// Adds a hyperedge; if an edge with the same vertex set exists, merges into it
    /// (heavy flags are OR-ed) and returns its id. Throws EmptyEdge on an empty set.
    int add_edge(std::vector<Vertex> vertices, bool heavy = false, std::string name = {});

    const Hyperedge& edge(int id) const { return edges_.at(id); }
    const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
    bool heavy(int id) const { return edges_.at(id).heavy; }
    void set_heavy(int id, bool value = true) { edges_.at(id).heavy = value; }
    int heavy_count() const;
    /// Edge ids containing v, ascending.
    const std::vector<int>& incident(Vertex v) const { return incidence_.at(v); }

    /// Adds a singleton light hyperedge for every vertex contained in no hyperedge.
    void cover_isolated_vertices();
    /// Removes hyperedges whose vertex set is a subset of another hyperedge's,
    /// renumbering the remaining edges in their original relative order.
    void remove_subsumed_edges();

    const std::vector<std::string>& vertex_names() const noexcept { return vertex_names_; }
    void set_vertex_names(std::vector<std::string> names);
    std::string vertex_name(Vertex v) const;

    friend bool operator==(const LoadedHypergraph&, const LoadedHypergraph&) = default;

private:
    void rebuild_incidence();

    std::vector<Hyperedge> edges_;
    std::vector<std::vector<int>> incidence_;
    std::vector<std::string> vertex_names_;
};

/// Primal graph of a hypergraph; all vertices light.
LoadedGraph primal_graph(const LoadedHypergraph& h);

/// Sorted-set helpers.
bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace ttw
