#include "ttw/decomposition.hpp"

#include "ttw/error.hpp"
#include "ttw/validation.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace ttw {

int TreeDecomposition::width() const {
    std::size_t w = 0;
    for (const auto& b : bags) w = std::max(w, b.size());
    return w == 0 ? 0 : static_cast<int>(w) - 1;
}

int TreeDecomposition::load(const LoadedGraph& g) const {
    int l = 0;
    for (const auto& b : bags) l = std::max(l, g.count_heavy(b));
    return l;
}

std::vector<std::vector<int>> TreeDecomposition::children() const {
    std::vector<std::vector<int>> ch(bags.size());
    for (int t = 0; t < num_nodes(); ++t)
        if (parent[t] >= 0) ch[parent[t]].push_back(t);
    return ch;
}

std::vector<int> TreeDecomposition::bfs_order() const {
    std::vector<int> order;
    if (bags.empty()) return order;
    const auto ch = children();
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : ch[order[i]]) order.push_back(c);
    return order;
}

int HypertreeDecomposition::width() const {
    std::size_t w = 0;
    for (const auto& c : covers) w = std::max(w, c.size());
    return static_cast<int>(w);
}

int HypertreeDecomposition::load(const LoadedHypergraph& h) const {
    int l = 0;
    for (const auto& c : covers) {
        int heavy = 0;
        for (int e : c) heavy += h.heavy(e) ? 1 : 0;
        l = std::max(l, heavy);
    }
    return l;
}

bool HypertreeDecomposition::special_condition_ok(const LoadedHypergraph& h) const {
    const auto ch = td.children();
    for (int t = 0; t < td.num_nodes(); ++t) {
        VertexSet outside;  // union of (e \ χ(t)) over e ∈ λ(t)
        for (int e : covers[t]) {
            VertexSet diff;
            const auto& ev = h.edge(e).vertices;
            std::set_difference(ev.begin(), ev.end(), td.bags[t].begin(), td.bags[t].end(), std::back_inserter(diff));
            outside = set_union(outside, diff);
        }
        if (outside.empty()) continue;
        std::vector<int> stack(ch[t].begin(), ch[t].end());
        while (!stack.empty()) {
            const int d = stack.back();
            stack.pop_back();
            if (!set_intersection(outside, td.bags[d]).empty()) return false;
            stack.insert(stack.end(), ch[d].begin(), ch[d].end());
        }
    }
    return true;
}

namespace {

struct WorkTree {
    std::vector<VertexSet> bags;
    std::vector<int> parent;
    std::vector<int> payload;
    std::vector<std::vector<int>> covers;
    int root = 0;
};

/// Contracts nested tree edges, then renumbers breadth-first from the root with
/// children visited in increasing original index.
void contract_and_renumber(WorkTree& w, TreeDecomposition& out, std::vector<int>& payload_out,
                           std::vector<std::vector<int>>* covers_out) {
    const int n = static_cast<int>(w.bags.size());
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<std::set<int>> ch(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t)
        if (w.parent[t] >= 0) ch[w.parent[t]].insert(t);
    const bool with_covers = !w.covers.empty();

    bool changed = true;
    while (changed) {
        changed = false;
        // Bottom-up sweep: collect a post-order of the current tree.
        std::vector<int> order{w.root};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (int c : ch[order[i]]) order.push_back(c);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const int v = *it;
            if (v == w.root || !alive[v]) continue;
            const int p = w.parent[v];
            const bool v_in_p = is_subset(w.bags[v], w.bags[p]);
            const bool p_in_v = !v_in_p && is_subset(w.bags[p], w.bags[v]);
            if (!v_in_p && !p_in_v) continue;
            if (p_in_v) {
                w.bags[p] = w.bags[v];
                w.payload[p] = w.payload[v];
                if (with_covers) w.covers[p] = w.covers[v];
            }
            for (int c : ch[v]) {
                w.parent[c] = p;
                ch[p].insert(c);
            }
            ch[v].clear();
            ch[p].erase(v);
            alive[v] = 0;
            changed = true;
        }
    }

    std::vector<int> order{w.root};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int c : ch[order[i]]) order.push_back(c);
    std::vector<int> new_id(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);

    out.bags.clear();
    out.parent.clear();
    payload_out.clear();
    if (covers_out) covers_out->clear();
    for (int old : order) {
        out.bags.push_back(w.bags[old]);
        out.parent.push_back(old == w.root ? -1 : new_id[w.parent[old]]);
        payload_out.push_back(w.payload[old]);
        if (covers_out && with_covers) covers_out->push_back(w.covers[old]);
    }
}

}  // namespace

OrderingTree ordering_tree(const EliminationOrdering& ord) {
    const int n = static_cast<int>(ord.steps.size());
    OrderingTree result;
    if (n == 0) {
        result.td.bags.push_back({});
        result.td.parent.push_back(-1);
        result.node_step.push_back(-1);
        return result;
    }
    std::vector<int> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) position[ord.steps[i].vertex] = i;

    WorkTree w;
    w.root = n - 1;
    for (int i = 0; i < n; ++i) {
        w.bags.push_back(ord.bag(static_cast<std::size_t>(i)));
        w.payload.push_back(i);
        const auto& nb = ord.steps[i].neighborhood;
        if (i == n - 1) {
            w.parent.push_back(-1);
        } else if (nb.empty()) {
            w.parent.push_back(n - 1);
        } else {
            int first = n;
            for (Vertex u : nb) first = std::min(first, position[u]);
            w.parent.push_back(first);
        }
    }
    contract_and_renumber(w, result.td, result.node_step, nullptr);
    return result;
}

TreeDecomposition ordering_to_td(const LoadedGraph& g, const EliminationOrdering& ord) {
    if (static_cast<int>(ord.steps.size()) != g.num_vertices())
        throw Error(ErrorCode::InvalidArgument, "ordering does not match graph size");
    return ordering_tree(ord).td;
}

TreeDecomposition contract_subsumed(const TreeDecomposition& td, std::vector<std::vector<int>>* covers) {
    if (td.bags.empty()) return td;
    WorkTree w;
    w.bags = td.bags;
    w.parent = td.parent;
    w.payload.resize(td.bags.size(), 0);
    if (covers) w.covers = *covers;
    w.root = 0;
    TreeDecomposition out;
    std::vector<int> payload;
    contract_and_renumber(w, out, payload, covers);
    return out;
}

EliminationOrdering td_to_ordering(const LoadedGraph& g, const TreeDecomposition& td) {
    const auto report = check_td(g, td);
    if (!report.ok()) throw Error(ErrorCode::InvalidDecomposition, report.summary());

    const int nodes = td.num_nodes();
    std::vector<VertexSet> bags = td.bags;
    std::vector<std::set<int>> adj(static_cast<std::size_t>(nodes));
    for (int t = 0; t < nodes; ++t)
        if (td.parent[t] >= 0) {
            adj[t].insert(td.parent[t]);
            adj[td.parent[t]].insert(t);
        }
    std::vector<char> alive(static_cast<std::size_t>(nodes), 1);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(g.num_vertices()));

    while (static_cast<int>(order.size()) < g.num_vertices()) {
        int leaf = -1;
        for (int t = 0; t < nodes && leaf < 0; ++t)
            if (alive[t] && adj[t].size() <= 1) leaf = t;
        if (leaf < 0) throw Error(ErrorCode::InvalidDecomposition, "decomposition tree has no leaf");
        const int nbr = adj[leaf].empty() ? -1 : *adj[leaf].begin();
        if (nbr >= 0 && is_subset(bags[leaf], bags[nbr])) {
            adj[nbr].erase(leaf);
            adj[leaf].clear();
            alive[leaf] = 0;
            continue;
        }
        // Lowest vertex of the leaf absent from its neighbor; by P2 it occurs in no other bag.
        Vertex pick = -1;
        for (Vertex v : bags[leaf])
            if (nbr < 0 || !std::binary_search(bags[nbr].begin(), bags[nbr].end(), v)) {
                pick = v;
                break;
            }
        if (pick < 0) {
            alive[leaf] = 0;  // empty isolated node
            continue;
        }
        order.push_back(pick);
        bags[leaf].erase(std::find(bags[leaf].begin(), bags[leaf].end(), pick));
    }
    return eliminate(g, order);
}

}  // namespace ttw
