#pragma once

#include "ttw/decomposition.hpp"
#include "ttw/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ttw {

struct ValidationReport {
    std::vector<std::string> structure;                   // malformed tree / ids
    std::vector<std::pair<Vertex, Vertex>> uncovered_edges;  // P1 (graph mode)
    std::vector<int> uncovered_hyperedges;                 // P1 (hypergraph mode)
    std::vector<Vertex> disconnected_vertices;             // P2 (missing or split subtree)
    std::vector<int> bad_covers;                           // nodes whose cover misses a bag vertex
    std::vector<int> special_condition;                    // nodes violating P3 (when enforced)
    int width = 0;  // recomputed from scratch
    int load = 0;

    bool ok() const noexcept {
        return structure.empty() && uncovered_edges.empty() && uncovered_hyperedges.empty() &&
               disconnected_vertices.empty() && bad_covers.empty() && special_condition.empty();
    }
    std::string summary() const;
};

ValidationReport check_td(const LoadedGraph& g, const TreeDecomposition& td);
ValidationReport check_htd(const LoadedHypergraph& h, const HypertreeDecomposition& htd, bool enforce_special);

}  // namespace ttw
