#pragma once

#include "ttw/decomposition.hpp"
#include "ttw/exact.hpp"
#include "ttw/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ttw {

/// Marks exactly floor(ratio · n) vertices heavy (all others light), chosen by a seeded shuffle.
LoadedGraph mark_heavy(LoadedGraph g, double ratio, std::uint64_t seed);
/// Same for hyperedges.
LoadedHypergraph mark_heavy(LoadedHypergraph h, double ratio, std::uint64_t seed);

/// One binary hyperedge per edge, singletons for isolated vertices; all light.
LoadedHypergraph graph_as_hypergraph(const LoadedGraph& g);

enum class Method {
    TwExactObl, TwExactWL, TwExactLW,
    TwHeurObl, TwHeurWL, TwHeurLW,
    HtExactObl, HtExactWL, HtExactLW,
    HtBnbObl, HtBnbWL, HtBnbLW,
    HtGreedyObl, HtGreedyWL,
};

const std::vector<Method>& all_methods();
/// Canonical ASCII name, e.g. "TW-X-W->L".
std::string_view method_name(Method m);
/// Accepts canonical names and the arrow spelling "→"; nullopt if unknown.
std::optional<Method> parse_method(std::string_view name);
bool is_tree_method(Method m);  // TW-*
bool is_exact_method(Method m);

struct DecomposeResult {
    int width = 0;
    int load = 0;
    std::optional<TreeDecomposition> td;
    std::optional<HypertreeDecomposition> htd;
};

/// Runs a TW-* method on g or an HT-* method on h (the other argument may be null).
/// Exact methods may throw ExactTimeout.
DecomposeResult decompose(Method m, const LoadedGraph* g, const LoadedHypergraph* h, const ExactOptions& exact);

struct BenchmarkRecord {
    std::string instance;
    std::string method;
    int width = -1;
    int load = -1;
    double time_ms = 0;
    std::string status;  // ok | timeout | memout | infeasible | error

    friend bool operator==(const BenchmarkRecord&, const BenchmarkRecord&) = default;
};

std::string csv_header();  // "instance,method,width,load,time_ms,status"
std::string to_csv_line(const BenchmarkRecord& r);
std::vector<BenchmarkRecord> parse_csv(std::string_view text);

struct MatrixOptions {
    std::string corpus_dir;
    std::vector<Method> methods;
    std::optional<double> ratio;  // re-mark instances; markings in the files are kept otherwise
    std::uint64_t seed = 1;
    std::chrono::milliseconds timeout{0};
    SolverConfig solver;
    int jobs = 1;
    bool preprocess = false;  // remove subsumed hyperedges
};

/// One record per (instance, method) over *.gr (graphs) and *.hg (hypergraphs) in the corpus,
/// sorted by instance then method order. Graph instances feed HT methods as binary hyperedges;
/// hypergraph instances feed TW methods through their primal graph.
std::vector<BenchmarkRecord> run_matrix(const MatrixOptions& options);

/// Appends records whose (instance, method) key is not yet in the file; writes the header for
/// a new file. Returns the number of records appended.
std::size_t append_csv(const std::string& path, const std::vector<BenchmarkRecord>& records);

/// Keys already present in a results file (empty if it does not exist).
std::vector<std::pair<std::string, std::string>> existing_keys(const std::string& path);

enum class ScatterMetric { Width, Load };

/// "x y multiplicity" lines comparing method x against method y on instances where both are ok.
/// With a width filter, instances whose x-method width is below `min_width` are skipped.
std::string scatter_data(const std::vector<BenchmarkRecord>& records, Method x, Method y, ScatterMetric metric,
                         int min_width = 0);

/// Width thresholds below which instances are disregarded in the comparisons: 13 for tree methods,
/// 4 for hypertree methods.
int width_filter_threshold(Method m);

}  // namespace ttw
