#include "ttw/random_instances.hpp"

#include "ttw/bench.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace ttw {

LoadedGraph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    LoadedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

LoadedGraph random_loaded_graph(int n, double p, double heavy_ratio, std::uint64_t seed) {
    return mark_heavy(random_graph(n, p, seed), heavy_ratio, seed ^ 0x5bd1e995ULL);
}

LoadedHypergraph random_hypergraph(int n, int m, int max_arity, double heavy_ratio, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    LoadedHypergraph h(n);
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v + 1));
    h.set_vertex_names(std::move(names));
    std::vector<Vertex> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    const int top = std::max(1, std::min(max_arity, n));
    for (int i = 0; i < m && n > 0; ++i) {
        const int arity = std::uniform_int_distribution<int>(1, top)(rng);
        std::shuffle(pool.begin(), pool.end(), rng);
        h.add_edge(std::vector<Vertex>(pool.begin(), pool.begin() + arity));
    }
    h.cover_isolated_vertices();
    return mark_heavy(std::move(h), heavy_ratio, seed ^ 0x5bd1e995ULL);
}

CspInstance random_csp(const CspParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto rational = [&](int lo, int hi) {
        Rational q(uniform(lo, hi), uniform(1, 4));
        q.canonicalize();
        return q;
    };

    CspInstance csp;
    const int n = uniform(1, params.max_variables);
    for (int v = 0; v < n; ++v) {
        std::vector<Value> values(25);
        std::iota(values.begin(), values.end(), -5);
        std::shuffle(values.begin(), values.end(), rng);
        values.resize(static_cast<std::size_t>(uniform(1, params.max_domain)));
        csp.variables.push_back({"x" + std::to_string(v + 1), std::move(values)});
    }

    std::set<std::vector<int>> used;
    const int count = uniform(0, params.max_constraints);
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int attempt = 0; attempt < 4 * count && static_cast<int>(csp.constraints.size()) < count; ++attempt) {
        const int arity = uniform(1, std::min(params.max_arity, n));
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<int> scope(pool.begin(), pool.begin() + arity);
        std::vector<int> key = scope;
        std::sort(key.begin(), key.end());
        if (!used.insert(key).second) continue;

        Constraint c;
        c.scope = scope;
        const double density = params.min_density + (params.max_density - params.min_density) * unit(rng);
        Tuple t(scope.size());
        // Walk the domain product in lexicographic order, keeping each tuple with probability `density`.
        auto walk = [&](auto&& self, std::size_t p) -> void {
            if (p == scope.size()) {
                if (unit(rng) < density) {
                    c.tuples.push_back(t);
                    if (params.weighted) c.weights.push_back(rational(0, 9));
                }
                return;
            }
            for (Value x : csp.variables[scope[p]].domain) {
                t[p] = x;
                self(self, p + 1);
            }
        };
        walk(walk, 0);
        if (params.defaults && uniform(0, 2) > 0) c.default_value = rational(0, 3);
        csp.constraints.push_back(std::move(c));
    }
    return csp;
}

}  // namespace ttw
