// ttw: decompositions of loaded graphs and hypergraphs, CSP solving and the benchmark harness.
// Exit codes: 0 success, 1 usage error, 2 an instance failed (timeout, invalid, infeasible, ...).

#include "CLI11.hpp"

#include "ttw/bench.hpp"
#include "ttw/covers.hpp"
#include "ttw/csp_dp.hpp"
#include "ttw/error.hpp"
#include "ttw/heuristics.hpp"
#include "ttw/io.hpp"
#include "ttw/random_instances.hpp"
#include "ttw/validation.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace ttw;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

std::string extension(const std::string& path) { return fs::path(path).extension().string(); }

struct Instance {
    std::optional<LoadedGraph> graph;
    std::optional<LoadedHypergraph> hyper;
};

/// Loads a .gr or .hg file; the other view is derived on demand by `view_for`.
Instance load_instance(const std::string& path, bool preprocess) {
    const auto ext = extension(path);
    Instance in;
    if (ext == ".gr") {
        in.graph = parse_loaded_graph(read_file(path));
    } else if (ext == ".hg") {
        in.hyper = parse_loaded_hypergraph(read_file(path), HypergraphParseOptions{preprocess});
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown instance type '" + ext + "' (expected .gr or .hg)");
    }
    return in;
}

void remark(Instance& in, std::optional<double> ratio, std::uint64_t seed) {
    if (!ratio) return;
    if (in.graph) in.graph = mark_heavy(*in.graph, *ratio, seed);
    if (in.hyper) in.hyper = mark_heavy(*in.hyper, *ratio, seed);
}

void view_for(Instance& in, Method m) {
    if (is_tree_method(m) && !in.graph) in.graph = primal_graph(*in.hyper);
    if (!is_tree_method(m) && !in.hyper) in.hyper = graph_as_hypergraph(*in.graph);
}

Method method_or_throw(const std::string& name) {
    auto m = parse_method(name);
    if (!m) throw Error(ErrorCode::InvalidArgument, "unknown method '" + name + "'");
    return *m;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
    } else {
        write_file(out, text);
    }
}

std::string sanitize(std::string_view name) {
    std::string s;
    for (char c : name) s += c == '>' ? '_' : c;
    return s;
}

/// Comparison pairs per method family: (Obl, W->L) and (W->L, L->W).
std::vector<std::pair<Method, Method>> scatter_pairs(const std::vector<Method>& methods) {
    auto has = [&](Method m) { return std::find(methods.begin(), methods.end(), m) != methods.end(); };
    const std::vector<std::pair<Method, Method>> candidates{
        {Method::TwExactObl, Method::TwExactWL},   {Method::TwExactWL, Method::TwExactLW},
        {Method::TwHeurObl, Method::TwHeurWL},     {Method::TwHeurWL, Method::TwHeurLW},
        {Method::HtExactObl, Method::HtExactWL},   {Method::HtExactWL, Method::HtExactLW},
        {Method::HtBnbObl, Method::HtBnbWL},       {Method::HtBnbWL, Method::HtBnbLW},
        {Method::HtGreedyObl, Method::HtGreedyWL},
    };
    std::vector<std::pair<Method, Method>> out;
    for (const auto& p : candidates)
        if (has(p.first) && has(p.second)) out.push_back(p);
    return out;
}

std::string solution_line(const CspInstance& csp, const Assignment& a) {
    std::ostringstream os;
    for (int v = 0; v < csp.num_variables(); ++v) os << (v ? " " : "") << csp.variables[v].name << '=' << a[v];
    return os.str();
}

struct Common {
    std::optional<double> ratio;
    std::uint64_t seed = 1;
    long long timeout_ms = 0;
    std::string solver;
    bool preprocess = false;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--ratio", c.ratio, "Re-mark this fraction of vertices/hyperedges heavy")->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--seed", c.seed, "Seed for heavy marking")->capture_default_str();
    cmd->add_option("--timeout", c.timeout_ms, "Time budget per exact run in ms (0 = none)")->capture_default_str();
    cmd->add_option("--sat-solver", c.solver, "SAT solver executable (default: $TTW_SAT_SOLVER)");
    cmd->add_flag("--preprocess", c.preprocess, "Remove subsumed hyperedges when reading .hg files");
}

ExactOptions exact_options(const Common& c) {
    return ExactOptions{SolverConfig{c.solver, {}, false}, std::chrono::milliseconds(c.timeout_ms)};
}

int run_decompose(const std::string& file, const std::string& method_name, const Common& c, const std::string& format,
                  const std::string& out) {
    const Method m = method_or_throw(method_name);
    auto in = load_instance(file, c.preprocess);
    remark(in, c.ratio, c.seed);
    view_for(in, m);
    auto write = [&](const DecomposeResult& r, const char* status) {
        if (format == "summary") {
            emit(out, std::string(status) + " width " + std::to_string(r.width) + " load " + std::to_string(r.load) + "\n");
        } else if (r.htd) {
            emit(out, write_htd(*r.htd, in.hyper->num_vertices()));
        } else {
            emit(out, write_td(*r.td, in.graph->num_vertices()));
        }
        std::cerr << method_name << ": " << status << " width " << r.width << " load " << r.load << '\n';
    };
    try {
        write(decompose(m, in.graph ? &*in.graph : nullptr, in.hyper ? &*in.hyper : nullptr, exact_options(c)), "ok");
        return kOk;
    } catch (const ExactTimeout& e) {
        DecomposeResult r{e.incumbent().width, e.incumbent().load, e.incumbent().td, e.incumbent().htd};
        write(r, "timeout");
        return kFailed;
    }
}

int run_solve(const std::string& file, const std::string& mode, int threshold, const std::string& via,
              const std::string& decomposition_file) {
    const auto csp = parse_csp(read_file(file));
    std::optional<TreeDecomposition> td;
    std::optional<HypertreeDecomposition> htd;
    if (!decomposition_file.empty()) {
        if (extension(decomposition_file) == ".htd") {
            htd = parse_htd(read_file(decomposition_file)).htd;
        } else {
            td = parse_td(read_file(decomposition_file)).td;
        }
    } else if (via == "htd") {
        const auto h = csp_hypergraph(csp, threshold);
        htd = ghtw_from_ordering(h, min_degree_obl(primal_graph(h)), CoverMethod::BranchAndBound,
                                 CoverObjective::WidthThenLoad);
    } else {
        const auto g = primal_graph(csp, threshold);
        td = ordering_to_td(g, min_degree_bounded_load(g));
    }
    if (htd && mode != "sat") throw Error(ErrorCode::InvalidArgument, "hypertree decompositions support --mode sat only");

    if (htd) {
        const int c = htd->load(csp_hypergraph(csp, threshold));
        const auto a = solve_csp_htd(csp, *htd, threshold, c);
        std::cout << (a ? "SAT " + solution_line(csp, *a) : std::string("UNSAT")) << '\n';
        return kOk;
    }
    const int c = td->load(primal_graph(csp, threshold));
    if (mode == "sat") {
        const auto a = solve_csp_td(csp, *td, threshold, c);
        std::cout << (a ? "SAT " + solution_line(csp, *a) : std::string("UNSAT")) << '\n';
    } else if (mode == "vcsp") {
        const auto s = solve_vcsp(csp, *td, threshold, c);
        if (s) {
            std::cout << "cost " << format_rational(s->cost) << ' ' << solution_line(csp, s->assignment) << '\n';
        } else {
            std::cout << "NO-ASSIGNMENT\n";
        }
    } else {
        std::cout << "count " << format_rational(count_weighted(csp, *td, threshold, c)) << '\n';
    }
    return kOk;
}

int run_mark(const std::string& file, double ratio, std::uint64_t seed, const std::string& out) {
    if (extension(file) == ".gr") {
        emit(out, write_loaded_graph(mark_heavy(parse_loaded_graph(read_file(file)), ratio, seed)));
    } else if (extension(file) == ".hg") {
        emit(out, write_loaded_hypergraph(mark_heavy(parse_loaded_hypergraph(read_file(file)), ratio, seed)));
    } else {
        throw Error(ErrorCode::InvalidArgument, "mark expects a .gr or .hg file");
    }
    return kOk;
}

int run_validate(const std::string& instance, const std::string& decomposition, bool special, bool preprocess) {
    ValidationReport report;
    const HypergraphParseOptions parse_options{preprocess};
    if (extension(decomposition) == ".htd") {
        auto h = extension(instance) == ".hg" ? parse_loaded_hypergraph(read_file(instance), parse_options)
                                              : graph_as_hypergraph(parse_loaded_graph(read_file(instance)));
        report = check_htd(h, parse_htd(read_file(decomposition)).htd, special);
    } else {
        auto g = extension(instance) == ".hg" ? primal_graph(parse_loaded_hypergraph(read_file(instance), parse_options))
                                              : parse_loaded_graph(read_file(instance));
        report = check_td(g, parse_td(read_file(decomposition)).td);
    }
    std::cout << (report.ok() ? "valid" : "invalid") << " width " << report.width << " load " << report.load << '\n';
    if (!report.ok()) std::cout << report.summary() << '\n';
    return report.ok() ? kOk : kFailed;
}

int run_bench(const std::string& corpus, const std::string& methods_arg, const Common& c, int jobs,
              const std::string& out, const std::string& scatter_dir, bool width_filter) {
    MatrixOptions opts;
    opts.corpus_dir = corpus;
    if (methods_arg.empty() || methods_arg == "all") {
        opts.methods = all_methods();
    } else {
        std::stringstream ss(methods_arg);
        std::string name;
        while (std::getline(ss, name, ',')) opts.methods.push_back(method_or_throw(name));
    }
    opts.ratio = c.ratio;
    opts.seed = c.seed;
    opts.timeout = std::chrono::milliseconds(c.timeout_ms);
    opts.solver = SolverConfig{c.solver, {}, false};
    opts.jobs = jobs;
    opts.preprocess = c.preprocess;

    const auto records = run_matrix(opts);
    std::vector<BenchmarkRecord> all = records;
    if (out.empty() || out == "-") {
        std::cout << csv_header() << '\n';
        for (const auto& r : records) std::cout << to_csv_line(r) << '\n';
    } else {
        const auto added = append_csv(out, records);
        std::cerr << "appended " << added << " of " << records.size() << " records to " << out << '\n';
        all = parse_csv(read_file(out));
    }
    if (!scatter_dir.empty()) {
        fs::create_directories(scatter_dir);
        for (const auto& [x, y] : scatter_pairs(opts.methods)) {
            const int min_width = width_filter ? width_filter_threshold(x) : 0;
            const auto stem = sanitize(method_name(x)) + "_vs_" + sanitize(method_name(y));
            write_file((fs::path(scatter_dir) / (stem + ".width.dat")).string(),
                       scatter_data(all, x, y, ScatterMetric::Width, min_width));
            write_file((fs::path(scatter_dir) / (stem + ".load.dat")).string(),
                       scatter_data(all, x, y, ScatterMetric::Load, min_width));
        }
    }
    const bool failed = std::any_of(records.begin(), records.end(), [](const auto& r) { return r.status != "ok"; });
    return failed ? kFailed : kOk;
}

int run_gen(const std::string& kind, int count, int n, double p, int m, int arity, double ratio, std::uint64_t seed,
            const std::string& out_dir) {
    fs::create_directories(out_dir);
    for (int i = 0; i < count; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        char stem[32];
        std::snprintf(stem, sizeof stem, "%s%03d", kind.c_str(), i + 1);
        const auto base = fs::path(out_dir) / stem;
        if (kind == "graph") {
            write_file(base.string() + ".gr", write_loaded_graph(random_loaded_graph(n, p, ratio, s)));
        } else if (kind == "hypergraph") {
            write_file(base.string() + ".hg", write_loaded_hypergraph(random_hypergraph(n, m, arity, ratio, s)));
        } else {
            CspParams params;
            params.max_variables = n;
            params.max_constraints = m;
            params.max_arity = arity;
            write_file(base.string() + ".csp", write_csp(random_csp(params, s)));
        }
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Load-aware tree and hypertree decompositions"};
    app.require_subcommand(1);

    Common common;
    std::string file, method = "TW-H-Obl", format = "td", out;
    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a .gr or .hg instance");
    decompose_cmd->add_option("file", file, "Instance file")->required();
    decompose_cmd->add_option("--method", method, "Method name, e.g. TW-X-W->L")->capture_default_str();
    decompose_cmd->add_option("--format", format, "Output: td (decomposition file) or summary")
        ->check(CLI::IsMember({"td", "summary"}))
        ->capture_default_str();
    decompose_cmd->add_option("--out", out, "Output file (default stdout)");
    add_common(decompose_cmd, common);

    std::string mode = "sat", via = "td", decomposition;
    int threshold = 2;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a .csp instance over a decomposition");
    solve_cmd->add_option("file", file, "CSP file")->required();
    solve_cmd->add_option("--mode", mode, "sat, vcsp (minimum cost) or count (weighted count)")
        ->check(CLI::IsMember({"sat", "vcsp", "count"}))
        ->capture_default_str();
    solve_cmd->add_option("--threshold", threshold, "Domain/tuple threshold d")->capture_default_str();
    solve_cmd->add_option("--via", via, "Decomposition kind when none is given: td or htd")
        ->check(CLI::IsMember({"td", "htd"}))
        ->capture_default_str();
    solve_cmd->add_option("--decomposition", decomposition, "Use this .td or .htd file");

    double mark_ratio = 0.3;
    std::uint64_t mark_seed = 1;
    auto* mark_cmd = app.add_subcommand("mark", "Mark a fraction of vertices (.gr) or hyperedges (.hg) heavy");
    mark_cmd->add_option("file", file, "Instance file")->required();
    mark_cmd->add_option("--ratio", mark_ratio, "Fraction to mark")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    mark_cmd->add_option("--seed", mark_seed, "Shuffle seed")->capture_default_str();
    mark_cmd->add_option("--out", out, "Output file (default stdout)");

    std::string instance;
    bool special = false;
    bool validate_preprocess = false;
    auto* validate_cmd = app.add_subcommand("validate", "Check a decomposition against its instance");
    validate_cmd->add_option("instance", instance, "Instance (.gr or .hg)")->required();
    validate_cmd->add_option("decomposition", decomposition, "Decomposition (.td or .htd)")->required();
    validate_cmd->add_flag("--special", special, "Also enforce the Special Condition");
    validate_cmd->add_flag("--preprocess", validate_preprocess,
                           "Remove subsumed hyperedges first (match a decomposition made with --preprocess)");

    std::string corpus, methods, scatter;
    int jobs = 1;
    bool width_filter = false;
    Common bench_common;
    auto* bench_cmd = app.add_subcommand("bench", "Run methods over a corpus directory of .gr/.hg files");
    bench_cmd->add_option("corpus", corpus, "Corpus directory")->required();
    bench_cmd->add_option("--method,--methods", methods, "Comma-separated method names or 'all'");
    bench_cmd->add_option("--jobs", jobs, "Parallel instances")->check(CLI::PositiveNumber)->capture_default_str();
    bench_cmd->add_option("--out", out, "Results CSV to append to (default: print)");
    bench_cmd->add_option("--scatter", scatter, "Directory for <pair>.width.dat / <pair>.load.dat files");
    bench_cmd->add_flag("--width-filter", width_filter, "Drop instances below width 13 (TW) / 4 (HT) in scatter data");
    add_common(bench_cmd, bench_common);

    std::string kind;
    int count = 10, n = 10, m = 10, arity = 3;
    double p = 0.3, gen_ratio = 0.3;
    std::uint64_t gen_seed = 1;
    auto* gen_cmd = app.add_subcommand("gen", "Write a seeded synthetic corpus");
    gen_cmd->add_option("kind", kind, "graph, hypergraph or csp")
        ->required()
        ->check(CLI::IsMember({"graph", "hypergraph", "csp"}));
    gen_cmd->add_option("--count", count, "Number of instances")->capture_default_str();
    gen_cmd->add_option("-n", n, "Vertices (graph, hypergraph) or maximum variables (csp)")->capture_default_str();
    gen_cmd->add_option("-p", p, "Edge probability (graph)")->capture_default_str();
    gen_cmd->add_option("-m", m, "Hyperedges or maximum constraints")->capture_default_str();
    gen_cmd->add_option("--arity", arity, "Maximum hyperedge / scope size")->capture_default_str();
    gen_cmd->add_option("--ratio", gen_ratio, "Heavy fraction")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed, "First seed")->capture_default_str();
    gen_cmd->add_option("--out", out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*decompose_cmd) return run_decompose(file, method, common, format, out);
        if (*solve_cmd) return run_solve(file, mode, threshold, via, decomposition);
        if (*mark_cmd) return run_mark(file, mark_ratio, mark_seed, out);
        if (*validate_cmd) return run_validate(instance, decomposition, special, validate_preprocess);
        if (*bench_cmd) return run_bench(corpus, methods, bench_common, jobs, out, scatter, width_filter);
        if (*gen_cmd) return run_gen(kind, count, n, p, m, arity, gen_ratio, gen_seed, out);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::InvalidArgument ? kUsage : kFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
