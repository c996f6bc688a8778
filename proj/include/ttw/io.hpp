#pragma once

#include "ttw/csp.hpp"
#include "ttw/decomposition.hpp"
#include "ttw/graph.hpp"

#include <string>
#include <string_view>

namespace ttw {

// Loaded graphs: PACE `p tw <n> <m>`, 1-based edge lines `<u> <v>`, `h <v>` marks v heavy,
// `c` comment lines.
LoadedGraph parse_loaded_graph(std::string_view text);
std::string write_loaded_graph(const LoadedGraph& g);

// Loaded hypergraphs: hyperbench `<name>(<v1>,...,<vk>),` with `%heavy <name>` markings.
// `%vertices <names...>` fixes vertex ids in the given order; other `%` text is a comment.
struct HypergraphParseOptions {
    bool remove_subsumed = false;
};
LoadedHypergraph parse_loaded_hypergraph(std::string_view text, const HypergraphParseOptions& options = {});
std::string write_loaded_hypergraph(const LoadedHypergraph& h);

// CSP instances: `v <name> <values...>`, `ct <scope...> : <tuple> [w <q>] ; ... [; dflt <q>]`.
CspInstance parse_csp(std::string_view text);
std::string write_csp(const CspInstance& csp);

// Decompositions in PACE `.td` form; hypertree decompositions add `l <bag> <edge ids...>` lines.
struct ParsedTd {
    TreeDecomposition td;
    int num_vertices = 0;
};
struct ParsedHtd {
    HypertreeDecomposition htd;
    int num_vertices = 0;
};
std::string write_td(const TreeDecomposition& td, int num_vertices);
ParsedTd parse_td(std::string_view text);
std::string write_htd(const HypertreeDecomposition& htd, int num_vertices);
ParsedHtd parse_htd(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace ttw
