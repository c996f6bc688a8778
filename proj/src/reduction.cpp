#include "ttw/reduction.hpp"

#include "ttw/heuristics.hpp"
#include "ttw/validation.hpp"

#include <algorithm>

namespace ttw {

ExpandedGraph expand_heavy(const LoadedGraph& g, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "width target must be non-negative");
    ExpandedGraph x;
    x.k = k;
    x.images.resize(static_cast<std::size_t>(g.num_vertices()));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const int copies = g.heavy(v) ? k + 1 : 1;
        for (int i = 0; i < copies; ++i) {
            x.images[v].push_back(static_cast<Vertex>(x.origin.size()));
            x.origin.push_back(v);
        }
    }
    x.graph = LoadedGraph(static_cast<int>(x.origin.size()));
    for (const auto& imgs : x.images)
        for (std::size_t i = 0; i < imgs.size(); ++i)
            for (std::size_t j = i + 1; j < imgs.size(); ++j) x.graph.add_edge(imgs[i], imgs[j]);
    for (auto [u, v] : g.edges())
        for (Vertex a : x.images[u])
            for (Vertex b : x.images[v]) x.graph.add_edge(a, b);
    return x;
}

TreeDecomposition project_decomposition(const LoadedGraph& g, const ExpandedGraph& x, const TreeDecomposition& td_prime) {
    const auto report = check_td(x.graph, td_prime);
    if (!report.ok()) throw Error(ErrorCode::InvalidDecomposition, report.summary());
    TreeDecomposition td;
    td.parent = td_prime.parent;
    std::vector<int> present(static_cast<std::size_t>(g.num_vertices()), 0);
    for (const auto& bag : td_prime.bags) {
        for (Vertex w : bag) ++present[x.origin[w]];
        VertexSet projected;
        for (Vertex w : bag) {
            const Vertex v = x.origin[w];
            // Discrete bags keep a heavy vertex only with its full image set.
            if (present[v] == static_cast<int>(x.images[v].size()) && w == x.images[v].front()) projected.push_back(v);
        }
        for (Vertex w : bag) present[x.origin[w]] = 0;
        std::sort(projected.begin(), projected.end());
        td.bags.push_back(std::move(projected));
    }
    return contract_subsumed(td);
}

TreeDecomposition lift_decomposition(const ExpandedGraph& x, const TreeDecomposition& td) {
    TreeDecomposition lifted;
    lifted.parent = td.parent;
    for (const auto& bag : td.bags) {
        VertexSet b;
        for (Vertex v : bag) b.insert(b.end(), x.images.at(v).begin(), x.images.at(v).end());
        std::sort(b.begin(), b.end());
        lifted.bags.push_back(std::move(b));
    }
    return lifted;
}

ApproxResult approx_ctw(const LoadedGraph& g, int k, int c, ApproxBackend backend, const SolverConfig& solver) {
    if (c < 0) throw Error(ErrorCode::InfeasibleBound, "load bound must be non-negative");
    ApproxResult result;
    // Every vertex sits in some bag, so a heavy vertex rules out load 0 outright.
    if (c == 0 && g.heavy_count() > 0) return result;
    const auto x = expand_heavy(g, k);
    const int target = c * k + k;
    auto finish = [&](const EliminationOrdering& ord) {
        const auto td_prime = ordering_to_td(x.graph, ord);
        result.expanded_width = td_prime.width();
        result.td = project_decomposition(g, x, td_prime);
        return result;
    };
    if (backend != ApproxBackend::Exact) {
        const auto ord = min_degree_obl(x.graph);
        if (ord.width() <= target) return finish(ord);
        if (backend == ApproxBackend::Heuristic)
            throw Error(ErrorCode::Inconclusive, "heuristic width " + std::to_string(ord.width()) +
                                                     " exceeds " + std::to_string(target) + " without a proof");
    }
    if (target >= x.graph.num_vertices() - 1) return finish(min_degree_obl(x.graph));
    if (auto ord = probe_tw(x.graph, target, std::nullopt, solver)) return finish(*ord);
    return result;
}

}  // namespace ttw
