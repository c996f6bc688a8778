#pragma once

#include "ttw/csp.hpp"
#include "ttw/graph.hpp"

#include <cstdint>

namespace ttw {

/// G(n, p) with all vertices light.
LoadedGraph random_graph(int n, double edge_probability, std::uint64_t seed);
/// G(n, p) with floor(heavy_ratio · n) heavy vertices.
LoadedGraph random_loaded_graph(int n, double edge_probability, double heavy_ratio, std::uint64_t seed);

/// m hyperedges of arity 1..max_arity over n vertices (duplicates merge, isolated vertices get
/// singletons), then floor(heavy_ratio · |E|) heavy hyperedges.
LoadedHypergraph random_hypergraph(int n, int m, int max_arity, double heavy_ratio, std::uint64_t seed);

struct CspParams {
    int max_variables = 10;
    int max_domain = 4;
    int max_constraints = 8;
    int max_arity = 3;
    double min_density = 0.6;  // fraction of the scope's domain product kept as tuples
    double max_density = 0.8;
    bool weighted = false;     // rational weights per tuple
    bool defaults = false;     // random default values (else none, meaning 0)
};

CspInstance random_csp(const CspParams& params, std::uint64_t seed);

}  // namespace ttw
