#include "ttw/covers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace ttw {

namespace {

using Mask = std::vector<std::uint64_t>;

int popcount_and(const Mask& a, const Mask& b) {
    int c = 0;
    for (std::size_t w = 0; w < a.size(); ++w) c += std::popcount(a[w] & b[w]);
    return c;
}
int popcount(const Mask& a) {
    int c = 0;
    for (auto x : a) c += std::popcount(x);
    return c;
}
bool test(const Mask& m, int i) { return (m[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U; }

/// The bag restricted view: candidate hyperedges as masks over bag positions.
struct CoverProblem {
    int bag_size = 0;
    std::vector<int> edge_ids;
    std::vector<Mask> masks;
    std::vector<char> heavy;
    std::vector<std::vector<int>> by_vertex;  // candidate indices containing each bag position
};

CoverProblem make_problem(std::span<const Vertex> bag, const LoadedHypergraph& h) {
    CoverProblem p;
    p.bag_size = static_cast<int>(bag.size());
    const std::size_t words = (bag.size() + 63) / 64;
    std::vector<int> slot;  // edge id -> candidate index, built lazily
    for (std::size_t i = 0; i < bag.size(); ++i) {
        const Vertex v = bag[i];
        if (v < 0 || v >= h.num_vertices() || h.incident(v).empty())
            throw Error(ErrorCode::Uncoverable, "bag vertex " + std::to_string(v + 1) + " lies in no hyperedge");
        for (int e : h.incident(v)) {
            if (static_cast<int>(slot.size()) <= e) slot.resize(static_cast<std::size_t>(e) + 1, -1);
            if (slot[e] < 0) {
                slot[e] = static_cast<int>(p.edge_ids.size());
                p.edge_ids.push_back(e);
                p.masks.emplace_back(words, 0);
                p.heavy.push_back(h.heavy(e) ? 1 : 0);
            }
            p.masks[slot[e]][i >> 6] |= std::uint64_t{1} << (i & 63);
        }
    }
    // Candidates in ascending edge id for determinism.
    std::vector<int> idx(p.edge_ids.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) { return p.edge_ids[a] < p.edge_ids[b]; });
    CoverProblem sorted;
    sorted.bag_size = p.bag_size;
    for (int i : idx) {
        sorted.edge_ids.push_back(p.edge_ids[i]);
        sorted.masks.push_back(std::move(p.masks[i]));
        sorted.heavy.push_back(p.heavy[i]);
    }
    sorted.by_vertex.resize(bag.size());
    for (std::size_t c = 0; c < sorted.masks.size(); ++c)
        for (int i = 0; i < sorted.bag_size; ++i)
            if (test(sorted.masks[c], i)) sorted.by_vertex[i].push_back(static_cast<int>(c));
    return sorted;
}

Mask full_mask(int size) {
    Mask m((static_cast<std::size_t>(size) + 63) / 64, 0);
    for (int i = 0; i < size; ++i) m[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    return m;
}

void subtract(Mask& a, const Mask& b) {
    for (std::size_t w = 0; w < a.size(); ++w) a[w] &= ~b[w];
}

std::vector<int> greedy_local(const CoverProblem& p, bool load_tiebreak) {
    Mask uncovered = full_mask(p.bag_size);
    std::vector<int> chosen;
    while (popcount(uncovered) > 0) {
        int best = -1, best_gain = 0;
        for (std::size_t c = 0; c < p.masks.size(); ++c) {
            const int gain = popcount_and(p.masks[c], uncovered);
            if (gain == 0) continue;
            const bool better = best < 0 || gain > best_gain ||
                                (gain == best_gain && load_tiebreak && !p.heavy[c] && p.heavy[best]);
            if (better) {
                best = static_cast<int>(c);
                best_gain = gain;
            }
        }
        chosen.push_back(best);
        subtract(uncovered, p.masks[best]);
    }
    return chosen;
}

std::pair<int, int> local_key(const CoverProblem& p, const std::vector<int>& chosen, CoverObjective obj) {
    int heavy = 0;
    for (int c : chosen) heavy += p.heavy[c];
    const int size = static_cast<int>(chosen.size());
    switch (obj) {
        case CoverObjective::WidthOnly: return {size, 0};
        case CoverObjective::WidthThenLoad: return {size, heavy};
        case CoverObjective::LoadThenWidth: return {heavy, size};
    }
    return {size, heavy};
}

std::vector<int> to_edge_ids(const CoverProblem& p, const std::vector<int>& chosen) {
    std::vector<int> ids;
    for (int c : chosen) ids.push_back(p.edge_ids[c]);
    std::sort(ids.begin(), ids.end());
    return ids;
}

class BranchAndBound {
public:
    BranchAndBound(const CoverProblem& p, CoverObjective obj, std::size_t budget)
        : p_(p), obj_(obj), budget_(budget), excluded_(p.masks.size(), 0) {
        best_ = greedy_local(p, obj != CoverObjective::WidthOnly);
        best_key_ = local_key(p, best_, obj);
    }

    std::vector<int> run() {
        std::vector<int> chosen;
        search(full_mask(p_.bag_size), chosen, 0);
        return best_;
    }

    const std::vector<int>& incumbent() const { return best_; }

private:
    void search(const Mask& uncovered, std::vector<int>& chosen, int heavy) {
        if (++nodes_ > budget_) throw CoverBudgetExhausted(to_edge_ids(p_, best_));
        const int remaining = popcount(uncovered);
        const int size = static_cast<int>(chosen.size());
        if (remaining == 0) {
            const auto key = local_key(p_, chosen, obj_);
            if (key < best_key_) {
                best_key_ = key;
                best_ = chosen;
            }
            return;
        }
        // Branch vertex: fewest usable candidates. Also gather bound ingredients.
        int branch = -1, branch_options = 0, max_cover = 0, heavy_lb = 0;
        for (std::size_t c = 0; c < p_.masks.size(); ++c)
            if (!excluded_[c]) max_cover = std::max(max_cover, popcount_and(p_.masks[c], uncovered));
        if (max_cover == 0) return;
        for (int i = 0; i < p_.bag_size; ++i) {
            if (!test(uncovered, i)) continue;
            int options = 0;
            bool all_heavy = true;
            for (int c : p_.by_vertex[i])
                if (!excluded_[c]) {
                    ++options;
                    all_heavy = all_heavy && p_.heavy[c];
                }
            if (options == 0) return;
            if (all_heavy) heavy_lb = 1;
            if (branch < 0 || options < branch_options) {
                branch = i;
                branch_options = options;
            }
        }
        const int size_lb = size + (remaining + max_cover - 1) / max_cover;
        std::pair<int, int> bound;
        switch (obj_) {
            case CoverObjective::WidthOnly: bound = {size_lb, 0}; break;
            case CoverObjective::WidthThenLoad: bound = {size_lb, heavy + heavy_lb}; break;
            case CoverObjective::LoadThenWidth: bound = {heavy + heavy_lb, size_lb}; break;
        }
        if (bound >= best_key_) return;

        std::vector<int> options;
        for (int c : p_.by_vertex[branch])
            if (!excluded_[c]) options.push_back(c);
        std::vector<int> gain(p_.masks.size(), 0);
        for (int c : options) gain[c] = popcount_and(p_.masks[c], uncovered);
        std::stable_sort(options.begin(), options.end(), [&](int a, int b) { return gain[a] > gain[b]; });

        // Branch i takes options[i] and excludes options[0..i) below it.
        std::vector<int> newly_excluded;
        for (int c : options) {
            Mask next = uncovered;
            subtract(next, p_.masks[c]);
            chosen.push_back(c);
            search(next, chosen, heavy + p_.heavy[c]);
            chosen.pop_back();
            excluded_[c] = 1;
            newly_excluded.push_back(c);
        }
        for (int c : newly_excluded) excluded_[c] = 0;
    }

    const CoverProblem& p_;
    CoverObjective obj_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    std::vector<char> excluded_;
    std::vector<int> best_;
    std::pair<int, int> best_key_;
};

}  // namespace

CoverBudgetExhausted::CoverBudgetExhausted(std::vector<int> incumbent)
    : Error(ErrorCode::BudgetExhausted, "cover search exceeded its node budget"), incumbent_(std::move(incumbent)) {}

std::pair<int, int> cover_key(std::span<const int> cover, const LoadedHypergraph& h, CoverObjective obj) {
    int heavy = 0;
    for (int e : cover) heavy += h.heavy(e) ? 1 : 0;
    const int size = static_cast<int>(cover.size());
    switch (obj) {
        case CoverObjective::WidthOnly: return {size, 0};
        case CoverObjective::WidthThenLoad: return {size, heavy};
        case CoverObjective::LoadThenWidth: return {heavy, size};
    }
    return {size, heavy};
}

std::vector<int> greedy_cover(std::span<const Vertex> bag, const LoadedHypergraph& h, bool load_tiebreak) {
    const auto p = make_problem(bag, h);
    return to_edge_ids(p, greedy_local(p, load_tiebreak));
}

std::vector<int> bnb_cover(std::span<const Vertex> bag, const LoadedHypergraph& h, CoverObjective obj,
                           std::size_t budget) {
    const auto p = make_problem(bag, h);
    BranchAndBound bnb(p, obj, budget);
    return to_edge_ids(p, bnb.run());
}

void assign_covers(const LoadedHypergraph& h, EliminationOrdering& ord, CoverMethod method, CoverObjective obj,
                   std::size_t budget) {
    ord.covers.clear();
    ord.cover_heavy.clear();
    for (std::size_t i = 0; i < ord.steps.size(); ++i) {
        const auto bag = ord.bag(i);
        auto cover = method == CoverMethod::Greedy ? greedy_cover(bag, h, obj != CoverObjective::WidthOnly)
                                                   : bnb_cover(bag, h, obj, budget);
        int heavy = 0;
        for (int e : cover) heavy += h.heavy(e) ? 1 : 0;
        ord.covers.push_back(std::move(cover));
        ord.cover_heavy.push_back(heavy);
    }
}

HypertreeDecomposition htd_from_covered_ordering(const EliminationOrdering& ord) {
    if (ord.covers.size() != ord.steps.size())
        throw Error(ErrorCode::InvalidArgument, "ordering carries no covers");
    auto tree = ordering_tree(ord);
    HypertreeDecomposition htd;
    htd.td = std::move(tree.td);
    for (int step : tree.node_step) htd.covers.push_back(step < 0 ? std::vector<int>{} : ord.covers[step]);
    return htd;
}

HypertreeDecomposition ghtw_from_ordering(const LoadedHypergraph& h, const EliminationOrdering& ord,
                                          CoverMethod method, CoverObjective obj, std::size_t budget) {
    if (static_cast<int>(ord.steps.size()) != h.num_vertices())
        throw Error(ErrorCode::InvalidArgument, "ordering does not match hypergraph size");
    EliminationOrdering covered = ord;
    assign_covers(h, covered, method, obj, budget);
    return htd_from_covered_ordering(covered);
}

}  // namespace ttw
