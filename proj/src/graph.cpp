#include "ttw/graph.hpp"

#include "ttw/error.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

namespace ttw {

std::size_t Bitset::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

Bitset& Bitset::operator|=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

Bitset& Bitset::operator&=(const Bitset& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

VertexSet Bitset::to_vector() const {
    VertexSet out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

LoadedGraph::LoadedGraph(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    adjacency_.resize(static_cast<std::size_t>(n));
    heavy_.assign(static_cast<std::size_t>(n), 0);
}

void LoadedGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= num_vertices())
        throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v) + " out of range");
}

bool LoadedGraph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(ErrorCode::BadVertexId, "self-loop on vertex " + std::to_string(u));
    auto& nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++num_edges_;
    return true;
}

bool LoadedGraph::adjacent(Vertex u, Vertex v) const {
    const auto& nu = adjacency_.at(u);
    return std::binary_search(nu.begin(), nu.end(), v);
}

void LoadedGraph::set_heavy(Vertex v, bool value) {
    check_vertex(v);
    heavy_[v] = value ? 1 : 0;
}

int LoadedGraph::heavy_count() const {
    return static_cast<int>(std::count(heavy_.begin(), heavy_.end(), 1));
}

int LoadedGraph::count_heavy(std::span<const Vertex> vertices) const {
    int c = 0;
    for (Vertex v : vertices) c += heavy_.at(v);
    return c;
}

std::vector<std::pair<Vertex, Vertex>> LoadedGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

LoadedHypergraph::LoadedHypergraph(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    incidence_.resize(static_cast<std::size_t>(n));
}

int LoadedHypergraph::add_edge(std::vector<Vertex> vertices, bool heavy, std::string name) {
    if (vertices.empty()) throw Error(ErrorCode::EmptyEdge, "hyperedge '" + name + "' is empty");
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (Vertex v : vertices)
        if (v < 0 || v >= num_vertices())
            throw Error(ErrorCode::BadVertexId, "vertex " + std::to_string(v) + " out of range");
    // Any existing duplicate shares the first vertex, so its incidence list suffices.
    for (int id : incidence_[vertices.front()]) {
        if (edges_[id].vertices == vertices) {
            edges_[id].heavy = edges_[id].heavy || heavy;
            return id;
        }
    }
    const int id = num_edges();
    if (name.empty()) name = "e" + std::to_string(id + 1);
    for (Vertex v : vertices) incidence_[v].push_back(id);
    edges_.push_back(Hyperedge{std::move(vertices), heavy, std::move(name)});
    return id;
}

int LoadedHypergraph::heavy_count() const {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const Hyperedge& e) { return e.heavy; }));
}

void LoadedHypergraph::cover_isolated_vertices() {
    for (Vertex v = 0; v < num_vertices(); ++v)
        if (incidence_[v].empty()) add_edge({v}, false, "iso_" + vertex_name(v));
}

void LoadedHypergraph::remove_subsumed_edges() {
    std::vector<char> drop(edges_.size(), 0);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& ei = edges_[i].vertices;
        for (int j : incidence_[ei.front()]) {
            if (static_cast<std::size_t>(j) == i || drop[j]) continue;
            const auto& ej = edges_[j].vertices;
            if (ej.size() > ei.size() && is_subset(ei, ej)) {
                drop[i] = 1;
                break;
            }
        }
    }
    std::vector<Hyperedge> kept;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(edges_[i]));
    edges_ = std::move(kept);
    rebuild_incidence();
}

void LoadedHypergraph::rebuild_incidence() {
    for (auto& inc : incidence_) inc.clear();
    for (int id = 0; id < num_edges(); ++id)
        for (Vertex v : edges_[id].vertices) incidence_[v].push_back(id);
}

void LoadedHypergraph::set_vertex_names(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) != num_vertices())
        throw Error(ErrorCode::InvalidArgument, "vertex name table size mismatch");
    vertex_names_ = std::move(names);
}

std::string LoadedHypergraph::vertex_name(Vertex v) const {
    if (static_cast<std::size_t>(v) < vertex_names_.size()) return vertex_names_[v];
    return "v" + std::to_string(v + 1);
}

LoadedGraph primal_graph(const LoadedHypergraph& h) {
    LoadedGraph g(h.num_vertices());
    for (const auto& e : h.edges())
        for (std::size_t i = 0; i < e.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < e.vertices.size(); ++j) g.add_edge(e.vertices[i], e.vertices[j]);
    return g;
}

bool is_subset(std::span<const Vertex> a, std::span<const Vertex> b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace ttw
