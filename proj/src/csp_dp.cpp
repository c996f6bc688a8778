#include "ttw/csp_dp.hpp"

#include "ttw/error.hpp"
#include "ttw/validation.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_map>

namespace ttw {

namespace {

struct TupleHash {
    std::size_t operator()(const Tuple& t) const noexcept {
        std::size_t h = t.size();
        for (Value v : t) h ^= std::hash<Value>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};
using TupleIndex = std::unordered_map<Tuple, std::size_t, TupleHash>;

enum class Mode { Sat, MinCost, Count };

/// A constraint restricted to a bag: scope positions inside the bag.
struct LocalConstraint {
    int id;
    std::vector<int> positions;
    int last;  // largest position; checked once this position is assigned
};

struct Entry {
    std::uint32_t index;
    Rational value;
};

struct NodeTable {
    std::vector<Tuple> maps;
    std::vector<Rational> values;
    std::vector<std::vector<std::uint32_t>> choice;  // per entry, per child
};

class Engine {
public:
    Engine(const CspInstance& csp, const TreeDecomposition& td, Mode mode)
        : csp_(csp), td_(td), mode_(mode), children_(td.children()) {
        node_of_ = assign_constraints(csp, td);
        index_.resize(csp.constraints.size());
        for (std::size_t c = 0; c < csp.constraints.size(); ++c)
            for (std::size_t i = 0; i < csp.constraints[c].tuples.size(); ++i)
                index_[c].emplace(csp.constraints[c].tuples[i], i);
    }

    /// Use these mappings at node t instead of enumerating the full product of bag domains.
    void set_candidates(std::vector<std::optional<std::vector<Tuple>>> candidates) { candidates_ = std::move(candidates); }

    void run() {
        tables_.assign(td_.bags.size(), {});
        const auto order = td_.bfs_order();
        for (auto it = order.rbegin(); it != order.rend(); ++it) process(*it);
    }

    const NodeTable& table(int t) const { return tables_[t]; }

    Assignment witness(std::uint32_t root_entry) const {
        Assignment a(static_cast<std::size_t>(csp_.num_variables()), 0);
        std::vector<std::pair<int, std::uint32_t>> stack{{0, root_entry}};
        while (!stack.empty()) {
            auto [t, e] = stack.back();
            stack.pop_back();
            const auto& bag = td_.bags[t];
            for (std::size_t p = 0; p < bag.size(); ++p) a[bag[p]] = tables_[t].maps[e][p];
            for (std::size_t j = 0; j < children_[t].size(); ++j)
                stack.emplace_back(children_[t][j], tables_[t].choice[e][j]);
        }
        return a;
    }

private:
    std::vector<LocalConstraint> localize(int t, bool (*keep)(const Engine&, int, int)) const {
        const auto& bag = td_.bags[t];
        std::vector<LocalConstraint> out;
        for (std::size_t c = 0; c < csp_.constraints.size(); ++c) {
            if (!keep(*this, t, static_cast<int>(c))) continue;
            const auto& scope = csp_.constraints[c].scope;
            LocalConstraint lc{static_cast<int>(c), {}, -1};
            bool inside = true;
            for (int v : scope) {
                auto it = std::lower_bound(bag.begin(), bag.end(), v);
                if (it == bag.end() || *it != v) {
                    inside = false;
                    break;
                }
                lc.positions.push_back(static_cast<int>(it - bag.begin()));
            }
            if (!inside) continue;
            lc.last = *std::max_element(lc.positions.begin(), lc.positions.end());
            out.push_back(std::move(lc));
        }
        return out;
    }

    bool holds(const LocalConstraint& lc, const Tuple& m) const {
        Tuple t;
        t.reserve(lc.positions.size());
        for (int p : lc.positions) t.push_back(m[p]);
        return index_[lc.id].count(t) != 0;
    }

    void process(int t) {
        const auto& bag = td_.bags[t];
        // Constraints checked while enumerating (pruning): every contained constraint for
        // satisfiability; for counting only those whose factor vanishes off the support.
        auto prune_filter = +[](const Engine& e, int node, int c) {
            if (e.mode_ == Mode::Sat) return true;
            if (e.mode_ == Mode::Count)
                return e.node_of_[c] == node && e.csp_.constraints[c].default_or_zero() == 0;
            return false;
        };
        auto assigned_filter = +[](const Engine& e, int node, int c) { return e.node_of_[c] == node; };
        const auto prune = localize(t, prune_filter);
        const auto scored = mode_ == Mode::Sat ? std::vector<LocalConstraint>{} : localize(t, assigned_filter);

        // Child tables aggregated by their projection onto the separator.
        struct ChildView {
            std::vector<int> parent_positions;
            std::unordered_map<Tuple, Entry, TupleHash> agg;
        };
        std::vector<ChildView> views;
        for (int ch : children_[t]) {
            ChildView view;
            const auto& cbag = td_.bags[ch];
            std::vector<int> child_positions;
            for (std::size_t p = 0; p < bag.size(); ++p) {
                auto it = std::lower_bound(cbag.begin(), cbag.end(), bag[p]);
                if (it != cbag.end() && *it == bag[p]) {
                    view.parent_positions.push_back(static_cast<int>(p));
                    child_positions.push_back(static_cast<int>(it - cbag.begin()));
                }
            }
            const auto& ct = tables_[ch];
            for (std::size_t e = 0; e < ct.maps.size(); ++e) {
                Tuple key;
                for (int p : child_positions) key.push_back(ct.maps[e][p]);
                auto [it, fresh] = view.agg.try_emplace(std::move(key), Entry{static_cast<std::uint32_t>(e), ct.values[e]});
                if (fresh) continue;
                if (mode_ == Mode::MinCost && ct.values[e] < it->second.value) {
                    it->second = Entry{static_cast<std::uint32_t>(e), ct.values[e]};
                } else if (mode_ == Mode::Count) {
                    it->second.value += ct.values[e];
                }
            }
            if (mode_ == Mode::Count) tables_[ch] = NodeTable{};  // no witness: the aggregate suffices
            views.push_back(std::move(view));
        }

        NodeTable table;
        auto emit = [&](const Tuple& m) {
            Rational value = mode_ == Mode::Count ? Rational(1) : Rational(0);
            for (const auto& lc : scored) {
                const auto& con = csp_.constraints[lc.id];
                Tuple key;
                for (int p : lc.positions) key.push_back(m[p]);
                auto it = index_[lc.id].find(key);
                const Rational f = it == index_[lc.id].end() ? con.default_or_zero() : con.weight(it->second);
                if (mode_ == Mode::MinCost) {
                    value += f;
                } else {
                    if (f == 0) return;
                    value *= f;
                }
            }
            std::vector<std::uint32_t> choice;
            for (const auto& view : views) {
                Tuple key;
                for (int p : view.parent_positions) key.push_back(m[p]);
                auto it = view.agg.find(key);
                if (it == view.agg.end()) return;
                if (mode_ == Mode::MinCost) value += it->second.value;
                if (mode_ == Mode::Count) value *= it->second.value;
                choice.push_back(it->second.index);
            }
            table.maps.push_back(m);
            table.values.push_back(std::move(value));
            if (mode_ != Mode::Count) table.choice.push_back(std::move(choice));
        };

        if (!candidates_.empty() && candidates_[t]) {
            for (const auto& m : *candidates_[t]) {
                bool ok = true;
                for (const auto& lc : prune) ok = ok && holds(lc, m);
                if (ok) emit(m);
            }
        } else {
            std::vector<std::vector<const LocalConstraint*>> due(bag.size());
            for (const auto& lc : prune) due[lc.last].push_back(&lc);
            Tuple m(bag.size());
            enumerate(0, bag, due, m, emit);
        }
        tables_[t] = std::move(table);
    }

    template <class Emit>
    void enumerate(std::size_t p, const VertexSet& bag, const std::vector<std::vector<const LocalConstraint*>>& due,
                   Tuple& m, Emit& emit) {
        if (p == bag.size()) {
            emit(m);
            return;
        }
        for (Value x : csp_.variables[bag[p]].domain) {
            m[p] = x;
            bool ok = true;
            for (const auto* lc : due[p])
                if (!holds(*lc, m)) {
                    ok = false;
                    break;
                }
            if (ok) enumerate(p + 1, bag, due, m, emit);
        }
    }

    const CspInstance& csp_;
    const TreeDecomposition& td_;
    Mode mode_;
    std::vector<std::vector<int>> children_;
    std::vector<int> node_of_;
    std::vector<TupleIndex> index_;
    std::vector<std::optional<std::vector<Tuple>>> candidates_;
    std::vector<NodeTable> tables_;
};

void check_primal_td(const CspInstance& csp, const TreeDecomposition& td, int d, int c) {
    csp.validate();
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "load bound must be non-negative");
    const auto g = primal_graph(csp, d);
    const auto report = check_td(g, td);
    if (!report.structure.empty()) throw Error(ErrorCode::InvalidDecomposition, report.summary());
    if (!report.uncovered_edges.empty())
        throw Error(ErrorCode::DecompositionMismatch, "some constraint scope lies in no bag: " + report.summary());
    if (!report.disconnected_vertices.empty()) {
        std::vector<char> seen(static_cast<std::size_t>(csp.num_variables()), 0);
        for (const auto& b : td.bags)
            for (Vertex v : b) seen[v] = 1;
        for (Vertex v : report.disconnected_vertices)
            if (!seen[v]) throw Error(ErrorCode::DecompositionMismatch, "variable " + csp.variables[v].name + " is in no bag");
        throw Error(ErrorCode::InvalidDecomposition, report.summary());
    }
    for (int t = 0; t < td.num_nodes(); ++t)
        if (g.count_heavy(td.bags[t]) > c)
            throw Error(ErrorCode::DomainThresholdMismatch, "bag " + std::to_string(t + 1) + " holds more than " +
                                                                std::to_string(c) + " variables with domain above " +
                                                                std::to_string(d));
}

}  // namespace

std::vector<int> assign_constraints(const CspInstance& csp, const TreeDecomposition& td) {
    std::vector<int> depth(td.bags.size(), 0);
    for (int t : td.bfs_order())
        if (td.parent[t] >= 0) depth[t] = depth[td.parent[t]] + 1;
    std::vector<int> node_of;
    for (std::size_t c = 0; c < csp.constraints.size(); ++c) {
        VertexSet scope(csp.constraints[c].scope.begin(), csp.constraints[c].scope.end());
        std::sort(scope.begin(), scope.end());
        int best = -1;
        for (int t = 0; t < td.num_nodes(); ++t)
            if (is_subset(scope, td.bags[t]) && (best < 0 || depth[t] < depth[best])) best = t;
        if (best < 0)
            throw Error(ErrorCode::DecompositionMismatch, "scope of constraint #" + std::to_string(c + 1) + " fits no bag");
        node_of.push_back(best);
    }
    return node_of;
}

std::optional<Assignment> solve_csp_td(const CspInstance& csp, const TreeDecomposition& td, int d, int c,
                                       std::vector<std::size_t>* table_sizes) {
    check_primal_td(csp, td, d, c);
    Engine engine(csp, td, Mode::Sat);
    engine.run();
    if (table_sizes) {
        table_sizes->clear();
        for (int t = 0; t < td.num_nodes(); ++t) table_sizes->push_back(engine.table(t).maps.size());
    }
    if (engine.table(0).maps.empty()) return std::nullopt;
    return engine.witness(0);
}

std::optional<Assignment> solve_csp_htd(const CspInstance& csp, const HypertreeDecomposition& htd, int d, int c,
                                        std::vector<std::size_t>* table_sizes) {
    csp.validate();
    if (c < 0) throw Error(ErrorCode::InvalidArgument, "load bound must be non-negative");
    const auto h = csp_hypergraph(csp, d);
    if (htd.covers.size() != htd.td.bags.size())
        throw Error(ErrorCode::InvalidDecomposition, "cover count differs from node count");
    for (const auto& cover : htd.covers)
        for (int e : cover)
            if (e < 0 || e >= h.num_edges())
                throw Error(ErrorCode::CoverConstraintMissing, "cover hyperedge " + std::to_string(e + 1) + " has no constraint");
    const auto report = check_htd(h, htd, false);
    if (!report.structure.empty() || !report.bad_covers.empty())
        throw Error(ErrorCode::InvalidDecomposition, report.summary());
    if (!report.uncovered_hyperedges.empty())
        throw Error(ErrorCode::DecompositionMismatch, "some constraint scope lies in no bag: " + report.summary());
    if (!report.disconnected_vertices.empty()) throw Error(ErrorCode::DecompositionMismatch, report.summary());
    for (std::size_t t = 0; t < htd.covers.size(); ++t) {
        int heavy = 0;
        for (int e : htd.covers[t]) heavy += h.heavy(e) ? 1 : 0;
        if (heavy > c)
            throw Error(ErrorCode::DomainThresholdMismatch, "cover of bag " + std::to_string(t + 1) + " holds more than " +
                                                                std::to_string(c) + " constraints above " +
                                                                std::to_string(d) + " tuples");
    }

    // Derived mappings: one tuple per cover constraint, agreeing on every shared variable.
    const int num_constraints = static_cast<int>(csp.constraints.size());
    std::vector<std::optional<std::vector<Tuple>>> candidates(htd.td.bags.size());
    for (std::size_t t = 0; t < htd.covers.size(); ++t) {
        const auto& bag = htd.td.bags[t];
        struct Item {
            std::vector<int> scope;
            std::vector<Tuple> tuples;
        };
        std::vector<Item> items;
        for (int e : htd.covers[t]) {
            if (e < num_constraints) {
                items.push_back({csp.constraints[e].scope, csp.constraints[e].tuples});
            } else {
                const Vertex v = h.edge(e).vertices.front();  // unconstrained variable: full domain
                Item item{{v}, {}};
                for (Value x : csp.variables[v].domain) item.tuples.push_back({x});
                items.push_back(std::move(item));
            }
        }
        std::vector<int> vars;  // variables of the partial joins
        std::vector<Tuple> partial{Tuple{}};
        for (std::size_t i = 0; i < items.size(); ++i) {
            const auto& item = items[i];
            std::vector<int> shared_at;  // position in vars, or -1 for a new variable
            std::vector<int> next_vars = vars;
            for (int v : item.scope) {
                auto it = std::find(vars.begin(), vars.end(), v);
                shared_at.push_back(it == vars.end() ? -1 : static_cast<int>(it - vars.begin()));
                if (it == vars.end()) next_vars.push_back(v);
            }
            // Keep only variables still needed: bag variables and those of later cover items.
            std::vector<int> keep;
            for (std::size_t p = 0; p < next_vars.size(); ++p) {
                const int v = next_vars[p];
                bool needed = std::binary_search(bag.begin(), bag.end(), v);
                for (std::size_t j = i + 1; j < items.size() && !needed; ++j)
                    needed = std::find(items[j].scope.begin(), items[j].scope.end(), v) != items[j].scope.end();
                if (needed) keep.push_back(static_cast<int>(p));
            }
            std::set<Tuple> joined;
            for (const auto& pt : partial)
                for (const auto& tup : item.tuples) {
                    bool agree = true;
                    for (std::size_t s = 0; s < tup.size() && agree; ++s)
                        if (shared_at[s] >= 0) agree = pt[shared_at[s]] == tup[s];
                    if (!agree) continue;
                    Tuple full = pt;
                    for (std::size_t s = 0; s < tup.size(); ++s)
                        if (shared_at[s] < 0) full.push_back(tup[s]);
                    Tuple projected;
                    for (int p : keep) projected.push_back(full[p]);
                    joined.insert(std::move(projected));
                }
            vars.clear();
            for (int p : keep) vars.push_back(next_vars[p]);
            partial.assign(joined.begin(), joined.end());
        }
        std::vector<int> where;
        for (Vertex v : bag) where.push_back(static_cast<int>(std::find(vars.begin(), vars.end(), v) - vars.begin()));
        std::set<Tuple> mappings;
        for (const auto& pt : partial) {
            Tuple m;
            for (int p : where) m.push_back(pt[p]);
            mappings.insert(std::move(m));
        }
        candidates[t] = std::vector<Tuple>(mappings.begin(), mappings.end());
    }

    Engine engine(csp, htd.td, Mode::Sat);
    engine.set_candidates(std::move(candidates));
    engine.run();
    if (table_sizes) {
        table_sizes->clear();
        for (int t = 0; t < htd.td.num_nodes(); ++t) table_sizes->push_back(engine.table(t).maps.size());
    }
    if (engine.table(0).maps.empty()) return std::nullopt;
    return engine.witness(0);
}

std::optional<VcspSolution> solve_vcsp(const CspInstance& csp, const TreeDecomposition& td, int d, int c) {
    check_primal_td(csp, td, d, c);
    for (const auto& con : csp.constraints)
        if (con.default_or_zero() != 0)
            throw Error(ErrorCode::InvalidArgument, "valued constraints need default value 0");
    Engine engine(csp, td, Mode::MinCost);
    engine.run();
    const auto& root = engine.table(0);
    if (root.maps.empty()) return std::nullopt;
    std::uint32_t best = 0;
    for (std::uint32_t e = 1; e < root.values.size(); ++e)
        if (root.values[e] < root.values[best]) best = e;
    return VcspSolution{engine.witness(best), root.values[best]};
}

Rational count_weighted(const CspInstance& csp, const TreeDecomposition& td, int d, int c) {
    check_primal_td(csp, td, d, c);
    Engine engine(csp, td, Mode::Count);
    engine.run();
    Rational total = 0;
    for (const auto& v : engine.table(0).values) total += v;
    return total;
}

}  // namespace ttw
