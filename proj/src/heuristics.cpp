#include "ttw/heuristics.hpp"

#include <limits>
#include <optional>
#include <random>

namespace ttw {

namespace {

/// Picks a minimum-degree vertex among alive vertices accepted by `eligible`; nullopt when none is.
template <class Pred>
std::optional<Vertex> pick_min_degree(const EliminationGraph& eg, Pred&& eligible, Tiebreak tiebreak,
                                      std::mt19937_64& rng) {
    int best = std::numeric_limits<int>::max();
    Vertex choice = -1;
    std::size_t ties = 0;
    for (Vertex v = 0; v < eg.num_vertices(); ++v) {
        if (!eg.alive(v) || !eligible(v)) continue;
        const int d = eg.degree(v);
        if (d < best) {
            best = d;
            choice = v;
            ties = 1;
        } else if (d == best && tiebreak == Tiebreak::Random) {
            // Reservoir sampling keeps the choice uniform over the tied vertices.
            ++ties;
            if (std::uniform_int_distribution<std::size_t>(0, ties - 1)(rng) == 0) choice = v;
        }
    }
    if (choice < 0) return std::nullopt;
    return choice;
}

}  // namespace

EliminationOrdering min_degree_obl(const LoadedGraph& g, const HeuristicOptions& options) {
    std::mt19937_64 rng(options.seed);
    EliminationGraph eg(g);
    std::vector<Vertex> order;
    std::size_t fill = 0;
    while (eg.num_alive() > 0) {
        const Vertex v = *pick_min_degree(eg, [](Vertex) { return true; }, options.tiebreak, rng);
        eg.eliminate(v, fill);
        order.push_back(v);
    }
    return eliminate(g, order);
}

EliminationOrdering min_degree_load_first(const LoadedGraph& g, const HeuristicOptions& options) {
    std::mt19937_64 rng(options.seed);
    EliminationGraph eg(g);
    std::vector<Vertex> order;
    std::size_t fill = 0;
    int heavy_left = g.heavy_count();
    while (eg.num_alive() > 0) {
        const bool want_heavy = heavy_left > 0;
        const Vertex v =
            *pick_min_degree(eg, [&](Vertex u) { return g.heavy(u) == want_heavy; }, options.tiebreak, rng);
        if (g.heavy(v)) --heavy_left;
        eg.eliminate(v, fill);
        order.push_back(v);
    }
    return eliminate(g, order);
}

EliminationOrdering min_degree_bounded_load(const LoadedGraph& g, const HeuristicOptions& options,
                                            int* final_bound) {
    for (int bound = 0;; ++bound) {
        std::mt19937_64 rng(options.seed);
        EliminationGraph eg(g);
        std::vector<Vertex> order;
        std::size_t fill = 0;
        bool dead_end = false;
        while (eg.num_alive() > 0) {
            const auto v = pick_min_degree(
                eg, [&](Vertex u) { return eg.closed_heavy_count(u) <= bound; }, options.tiebreak, rng);
            if (!v) {
                dead_end = true;
                break;
            }
            eg.eliminate(*v, fill);
            order.push_back(*v);
        }
        if (!dead_end) {
            if (final_bound) *final_bound = bound;
            return eliminate(g, order);
        }
    }
}

}  // namespace ttw
