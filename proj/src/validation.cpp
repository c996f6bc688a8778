#include "ttw/validation.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace ttw {

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (const auto& s : structure) os << "structure: " << s << "; ";
    for (auto [u, v] : uncovered_edges) os << "P1 edge {" << u + 1 << "," << v + 1 << "}; ";
    for (int e : uncovered_hyperedges) os << "P1 hyperedge " << e + 1 << "; ";
    for (Vertex v : disconnected_vertices) os << "P2 vertex " << v + 1 << "; ";
    for (int t : bad_covers) os << "cover of node " << t + 1 << "; ";
    for (int t : special_condition) os << "P3 at node " << t + 1 << "; ";
    return os.str();
}

namespace {

/// Checks the parent array and vertex ids; returns false when later checks cannot run.
bool check_structure(int n, const TreeDecomposition& td, ValidationReport& r) {
    const int nodes = td.num_nodes();
    if (nodes == 0) {
        r.structure.push_back("no nodes");
        return false;
    }
    if (static_cast<int>(td.parent.size()) != nodes) {
        r.structure.push_back("parent array size mismatch");
        return false;
    }
    if (td.parent[0] != -1) r.structure.push_back("node 1 is not the root");
    for (int t = 1; t < nodes; ++t)
        if (td.parent[t] < 0 || td.parent[t] >= nodes || td.parent[t] == t)
            r.structure.push_back("node " + std::to_string(t + 1) + " has an invalid parent");
    if (!r.structure.empty()) return false;
    // Every node must reach the root.
    std::vector<int> state(static_cast<std::size_t>(nodes), 0);  // 0 unknown, 1 on path, 2 reaches root
    state[0] = 2;
    for (int t = 1; t < nodes; ++t) {
        std::vector<int> path;
        int cur = t;
        while (state[cur] == 0) {
            state[cur] = 1;
            path.push_back(cur);
            cur = td.parent[cur];
        }
        if (state[cur] == 1) {
            r.structure.push_back("cycle through node " + std::to_string(cur + 1));
            return false;
        }
        for (int p : path) state[p] = 2;
    }
    for (int t = 0; t < nodes; ++t) {
        const auto& b = td.bags[t];
        if (!std::is_sorted(b.begin(), b.end()) || std::adjacent_find(b.begin(), b.end()) != b.end())
            r.structure.push_back("bag " + std::to_string(t + 1) + " not a sorted set");
        for (Vertex v : b)
            if (v < 0 || v >= n) r.structure.push_back("bag " + std::to_string(t + 1) + " has bad vertex id");
    }
    return r.structure.empty();
}

void check_connectivity(int n, const TreeDecomposition& td, ValidationReport& r) {
    // A vertex's nodes form a non-empty subtree iff exactly one of them has a parent lacking it.
    std::vector<int> tops(static_cast<std::size_t>(n), 0);
    for (int t = 0; t < td.num_nodes(); ++t)
        for (Vertex v : td.bags[t]) {
            const int p = td.parent[t];
            if (p < 0 || !std::binary_search(td.bags[p].begin(), td.bags[p].end(), v)) ++tops[v];
        }
    for (Vertex v = 0; v < n; ++v)
        if (tops[v] != 1) r.disconnected_vertices.push_back(v);
}

}  // namespace

ValidationReport check_td(const LoadedGraph& g, const TreeDecomposition& td) {
    ValidationReport r;
    if (!check_structure(g.num_vertices(), td, r)) return r;
    r.width = td.width();
    r.load = td.load(g);
    // Node lists per vertex, then P1 by intersecting memberships.
    std::vector<std::vector<int>> where(static_cast<std::size_t>(g.num_vertices()));
    for (int t = 0; t < td.num_nodes(); ++t)
        for (Vertex v : td.bags[t]) where[v].push_back(t);
    for (auto [u, v] : g.edges()) {
        std::vector<int> common;
        std::set_intersection(where[u].begin(), where[u].end(), where[v].begin(), where[v].end(),
                              std::back_inserter(common));
        if (common.empty()) r.uncovered_edges.emplace_back(u, v);
    }
    check_connectivity(g.num_vertices(), td, r);
    return r;
}

ValidationReport check_htd(const LoadedHypergraph& h, const HypertreeDecomposition& htd, bool enforce_special) {
    ValidationReport r;
    const auto& td = htd.td;
    if (!check_structure(h.num_vertices(), td, r)) return r;
    if (htd.covers.size() != td.bags.size()) {
        r.structure.push_back("cover count differs from node count");
        return r;
    }
    for (int t = 0; t < td.num_nodes(); ++t)
        for (int e : htd.covers[t])
            if (e < 0 || e >= h.num_edges()) r.structure.push_back("cover uses unknown hyperedge");
    if (!r.structure.empty()) return r;
    r.width = htd.width();
    r.load = htd.load(h);

    std::vector<std::vector<int>> where(static_cast<std::size_t>(h.num_vertices()));
    for (int t = 0; t < td.num_nodes(); ++t)
        for (Vertex v : td.bags[t]) where[v].push_back(t);
    for (int e = 0; e < h.num_edges(); ++e) {
        const auto& vs = h.edge(e).vertices;
        std::vector<int> common = where[vs.front()];
        for (std::size_t i = 1; i < vs.size() && !common.empty(); ++i) {
            std::vector<int> next;
            std::set_intersection(common.begin(), common.end(), where[vs[i]].begin(), where[vs[i]].end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        if (common.empty()) r.uncovered_hyperedges.push_back(e);
    }
    check_connectivity(h.num_vertices(), td, r);
    for (int t = 0; t < td.num_nodes(); ++t) {
        VertexSet covered;
        for (int e : htd.covers[t]) covered = set_union(covered, h.edge(e).vertices);
        if (!is_subset(td.bags[t], covered)) r.bad_covers.push_back(t);
    }
    if (enforce_special) {
        const auto ch = td.children();
        for (int t = 0; t < td.num_nodes(); ++t) {
            VertexSet outside;
            for (int e : htd.covers[t]) {
                VertexSet diff;
                const auto& ev = h.edge(e).vertices;
                std::set_difference(ev.begin(), ev.end(), td.bags[t].begin(), td.bags[t].end(),
                                    std::back_inserter(diff));
                outside = set_union(outside, diff);
            }
            if (outside.empty()) continue;
            std::vector<int> stack(ch[t].begin(), ch[t].end());
            bool bad = false;
            while (!stack.empty() && !bad) {
                const int d = stack.back();
                stack.pop_back();
                bad = !set_intersection(outside, td.bags[d]).empty();
                stack.insert(stack.end(), ch[d].begin(), ch[d].end());
            }
            if (bad) r.special_condition.push_back(t);
        }
    }
    return r;
}

}  // namespace ttw
