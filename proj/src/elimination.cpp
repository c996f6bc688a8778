#include "ttw/elimination.hpp"

#include "ttw/error.hpp"

#include <algorithm>

namespace ttw {

EliminationGraph::EliminationGraph(const LoadedGraph& g)
    : n_(g.num_vertices()),
      dense_(n_ <= kDenseLimit),
      degree_(static_cast<std::size_t>(n_), 0),
      alive_(static_cast<std::size_t>(n_), 1),
      heavy_(static_cast<std::size_t>(n_), 0),
      alive_count_(n_) {
    if (dense_)
        rows_.assign(static_cast<std::size_t>(n_), Bitset(static_cast<std::size_t>(n_)));
    else
        lists_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
        heavy_[v] = g.heavy(v) ? 1 : 0;
        degree_[v] = g.degree(v);
        if (dense_)
            for (Vertex u : g.neighbors(v)) rows_[v].set(u);
        else
            lists_[v] = g.neighbors(v);
    }
}

VertexSet EliminationGraph::neighbors(Vertex v) const {
    return dense_ ? rows_[v].to_vector() : lists_[v];
}

int EliminationGraph::closed_heavy_count(Vertex v) const {
    int c = heavy_[v];
    if (dense_)
        rows_[v].for_each([&](Vertex u) { c += heavy_[u]; });
    else
        for (Vertex u : lists_[v]) c += heavy_[u];
    return c;
}

bool EliminationGraph::has_edge(Vertex u, Vertex v) const {
    if (dense_) return rows_[u].test(v);
    return std::binary_search(lists_[u].begin(), lists_[u].end(), v);
}

void EliminationGraph::add_edge(Vertex u, Vertex v) {
    if (dense_) {
        rows_[u].set(v);
        rows_[v].set(u);
    } else {
        lists_[u].insert(std::lower_bound(lists_[u].begin(), lists_[u].end(), v), v);
        lists_[v].insert(std::lower_bound(lists_[v].begin(), lists_[v].end(), u), u);
    }
    ++degree_[u];
    ++degree_[v];
}

void EliminationGraph::remove_edge(Vertex u, Vertex v) {
    if (dense_) {
        rows_[u].reset(v);
    } else {
        auto& l = lists_[u];
        l.erase(std::lower_bound(l.begin(), l.end(), v));
    }
    --degree_[u];
}

VertexSet EliminationGraph::eliminate(Vertex v, std::size_t& fill) {
    VertexSet nb = neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!has_edge(nb[i], nb[j])) {
                add_edge(nb[i], nb[j]);
                ++fill;
            }
    for (Vertex u : nb) remove_edge(u, v);
    if (dense_)
        rows_[v] = Bitset(static_cast<std::size_t>(n_));
    else
        lists_[v].clear();
    degree_[v] = 0;
    alive_[v] = 0;
    --alive_count_;
    return nb;
}

int EliminationOrdering::width() const {
    int w = 0;
    for (const auto& s : steps) w = std::max(w, s.width);
    return w;
}

int EliminationOrdering::load() const {
    int l = 0;
    for (const auto& s : steps) l = std::max(l, s.load);
    return l;
}

int EliminationOrdering::cover_width() const {
    std::size_t w = 0;
    for (const auto& c : covers) w = std::max(w, c.size());
    return static_cast<int>(w);
}

int EliminationOrdering::cover_load() const {
    int l = 0;
    for (int h : cover_heavy) l = std::max(l, h);
    return l;
}

VertexSet EliminationOrdering::bag(std::size_t i) const {
    VertexSet b = steps.at(i).neighborhood;
    b.insert(std::lower_bound(b.begin(), b.end(), steps[i].vertex), steps[i].vertex);
    return b;
}

EliminationOrdering eliminate(const LoadedGraph& g, std::span<const Vertex> order) {
    const int n = g.num_vertices();
    if (static_cast<int>(order.size()) != n)
        throw Error(ErrorCode::NotAPermutation, "ordering has " + std::to_string(order.size()) +
                                                    " entries for " + std::to_string(n) + " vertices");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex v : order) {
        if (v < 0 || v >= n || seen[v])
            throw Error(ErrorCode::NotAPermutation, "vertex " + std::to_string(v) + " missing, repeated or out of range");
        seen[v] = 1;
    }

    EliminationOrdering out;
    out.order.assign(order.begin(), order.end());
    out.steps.reserve(order.size());
    EliminationGraph scratch(g);
    for (Vertex v : order) {
        EliminationStep step;
        step.vertex = v;
        step.load = scratch.closed_heavy_count(v);
        step.neighborhood = scratch.eliminate(v, out.fill_in);
        step.width = static_cast<int>(step.neighborhood.size());
        out.steps.push_back(std::move(step));
    }
    return out;
}

int degeneracy(const LoadedGraph& g) {
    const int n = g.num_vertices();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    int best = 0;
    for (int round = 0; round < n; ++round) {
        Vertex pick = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        best = std::max(best, deg[pick]);
        removed[pick] = 1;
        for (Vertex u : g.neighbors(pick))
            if (!removed[u]) --deg[u];
    }
    return best;
}

}  // namespace ttw
