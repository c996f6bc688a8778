#include "ttw/bench.hpp"

#include "ttw/covers.hpp"
#include "ttw/heuristics.hpp"
#include "ttw/io.hpp"
#include "ttw/validation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace ttw {

namespace fs = std::filesystem;

namespace {

std::vector<int> pick_marked(int count, double ratio, std::uint64_t seed) {
    if (!(ratio >= 0.0 && ratio <= 1.0)) throw Error(ErrorCode::InvalidArgument, "ratio must lie in [0, 1]");
    const int marked = static_cast<int>(std::floor(ratio * count + 1e-9));
    std::vector<int> ids(static_cast<std::size_t>(count));
    std::iota(ids.begin(), ids.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(static_cast<std::size_t>(marked));
    return ids;
}

struct MethodInfo {
    Method method;
    std::string_view name;
};

constexpr MethodInfo kMethods[] = {
    {Method::TwExactObl, "TW-X-Obl"},   {Method::TwExactWL, "TW-X-W->L"},   {Method::TwExactLW, "TW-X-L->W"},
    {Method::TwHeurObl, "TW-H-Obl"},    {Method::TwHeurWL, "TW-H-W->L"},    {Method::TwHeurLW, "TW-H-L->W"},
    {Method::HtExactObl, "HT-X-Obl"},   {Method::HtExactWL, "HT-X-W->L"},   {Method::HtExactLW, "HT-X-L->W"},
    {Method::HtBnbObl, "HT-H-Obl"},     {Method::HtBnbWL, "HT-H-W->L"},     {Method::HtBnbLW, "HT-H-L->W"},
    {Method::HtGreedyObl, "HT-G-Obl"},  {Method::HtGreedyWL, "HT-G-W->L"},
};

Strategy strategy_of(Method m) {
    switch (m) {
        case Method::TwExactWL:
        case Method::TwHeurWL:
        case Method::HtExactWL:
        case Method::HtBnbWL:
        case Method::HtGreedyWL: return Strategy::WidthThenLoad;
        case Method::TwExactLW:
        case Method::TwHeurLW:
        case Method::HtExactLW:
        case Method::HtBnbLW: return Strategy::LoadThenWidth;
        default: return Strategy::Obl;
    }
}

CoverObjective objective_of(Strategy s) {
    switch (s) {
        case Strategy::Obl: return CoverObjective::WidthOnly;
        case Strategy::WidthThenLoad: return CoverObjective::WidthThenLoad;
        case Strategy::LoadThenWidth: return CoverObjective::LoadThenWidth;
    }
    return CoverObjective::WidthOnly;
}

/// Stable 64-bit FNV-1a so per-instance seeds do not depend on the standard library.
std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string format_time(double ms) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(3);
    os << ms;
    return os.str();
}

}  // namespace

LoadedHypergraph graph_as_hypergraph(const LoadedGraph& g) {
    LoadedHypergraph h(g.num_vertices());
    for (auto [u, v] : g.edges()) h.add_edge({u, v});
    h.cover_isolated_vertices();
    return h;
}

LoadedGraph mark_heavy(LoadedGraph g, double ratio, std::uint64_t seed) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) g.set_heavy(v, false);
    for (int v : pick_marked(g.num_vertices(), ratio, seed)) g.set_heavy(v, true);
    return g;
}

LoadedHypergraph mark_heavy(LoadedHypergraph h, double ratio, std::uint64_t seed) {
    for (int e = 0; e < h.num_edges(); ++e) h.set_heavy(e, false);
    for (int e : pick_marked(h.num_edges(), ratio, seed)) h.set_heavy(e, true);
    return h;
}

const std::vector<Method>& all_methods() {
    static const std::vector<Method> methods = [] {
        std::vector<Method> out;
        for (const auto& info : kMethods) out.push_back(info.method);
        return out;
    }();
    return methods;
}

std::string_view method_name(Method m) {
    for (const auto& info : kMethods)
        if (info.method == m) return info.name;
    return "?";
}

std::optional<Method> parse_method(std::string_view name) {
    std::string ascii;
    for (std::size_t i = 0; i < name.size(); ++i) {
        if (name.substr(i, 3) == "\xE2\x86\x92") {  // U+2192 RIGHTWARDS ARROW
            ascii += "->";
            i += 2;
        } else {
            ascii += name[i];
        }
    }
    for (const auto& info : kMethods)
        if (info.name == ascii) return info.method;
    return std::nullopt;
}

bool is_tree_method(Method m) { return method_name(m).substr(0, 2) == "TW"; }

bool is_exact_method(Method m) { return method_name(m).substr(2, 3) == "-X-"; }

int width_filter_threshold(Method m) { return is_tree_method(m) ? 13 : 4; }

DecomposeResult decompose(Method m, const LoadedGraph* g, const LoadedHypergraph* h, const ExactOptions& exact) {
    DecomposeResult r;
    const Strategy strategy = strategy_of(m);
    if (is_tree_method(m)) {
        if (!g) throw Error(ErrorCode::InvalidArgument, "tree method needs a graph");
        if (is_exact_method(m)) {
            auto res = solve_exact(*g, strategy, exact);
            r.td = std::move(res.td);
        } else {
            const auto ord = strategy == Strategy::Obl             ? min_degree_obl(*g)
                             : strategy == Strategy::WidthThenLoad ? min_degree_bounded_load(*g)
                                                                   : min_degree_load_first(*g);
            r.td = ordering_to_td(*g, ord);
        }
        r.width = r.td->width();
        r.load = r.td->load(*g);
        return r;
    }
    if (!h) throw Error(ErrorCode::InvalidArgument, "hypertree method needs a hypergraph");
    if (is_exact_method(m)) {
        auto res = solve_exact(*h, strategy, exact);
        r.htd = std::move(*res.htd);
    } else {
        const auto ord = min_degree_obl(primal_graph(*h));
        const bool greedy = m == Method::HtGreedyObl || m == Method::HtGreedyWL;
        r.htd = ghtw_from_ordering(*h, ord, greedy ? CoverMethod::Greedy : CoverMethod::BranchAndBound,
                                   objective_of(strategy));
    }
    r.width = r.htd->width();
    r.load = r.htd->load(*h);
    return r;
}

std::string csv_header() { return "instance,method,width,load,time_ms,status"; }

std::string to_csv_line(const BenchmarkRecord& r) {
    return r.instance + "," + r.method + "," + std::to_string(r.width) + "," + std::to_string(r.load) + "," +
           format_time(r.time_ms) + "," + r.status;
}

std::vector<BenchmarkRecord> parse_csv(std::string_view text) {
    std::vector<BenchmarkRecord> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || (line_no == 1 && line == csv_header())) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (fields.size() != 6) throw ParseError(ErrorCode::SyntaxError, line_no, 0, "expected 6 CSV fields");
        BenchmarkRecord r;
        r.instance = fields[0];
        r.method = fields[1];
        try {
            r.width = std::stoi(fields[2]);
            r.load = std::stoi(fields[3]);
            r.time_ms = std::stod(fields[4]);
        } catch (const std::exception&) {
            throw ParseError(ErrorCode::SyntaxError, line_no, 0, "bad numeric CSV field");
        }
        r.status = fields[5];
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BenchmarkRecord> run_matrix(const MatrixOptions& options) {
    std::vector<std::string> files;
    if (!fs::is_directory(options.corpus_dir))
        throw Error(ErrorCode::InvalidArgument, "corpus '" + options.corpus_dir + "' is not a directory");
    for (const auto& entry : fs::directory_iterator(options.corpus_dir)) {
        const auto ext = entry.path().extension().string();
        if (entry.is_regular_file() && (ext == ".gr" || ext == ".hg"))
            files.push_back(entry.path().filename().string());
    }
    std::sort(files.begin(), files.end());

    struct Task {
        std::size_t file;
        std::size_t method;
    };
    std::vector<Task> tasks;
    for (std::size_t f = 0; f < files.size(); ++f)
        for (std::size_t m = 0; m < options.methods.size(); ++m) tasks.push_back({f, m});
    std::vector<BenchmarkRecord> records(tasks.size());

    ExactOptions exact{options.solver, options.timeout};
    auto run_task = [&](const Task& task) {
        const auto& file = files[task.file];
        const Method method = options.methods[task.method];
        BenchmarkRecord rec;
        rec.instance = file;
        rec.method = std::string(method_name(method));
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const auto text = read_file((fs::path(options.corpus_dir) / file).string());
            const std::uint64_t seed = options.seed ^ fnv1a(file);
            std::optional<LoadedGraph> g;
            std::optional<LoadedHypergraph> h;
            if (fs::path(file).extension() == ".gr") {
                g = parse_loaded_graph(text);
                if (options.ratio) g = mark_heavy(*g, *options.ratio, seed);
                if (!is_tree_method(method)) {
                    h = graph_as_hypergraph(*g);
                    if (options.ratio) h = mark_heavy(*h, *options.ratio, seed);
                }
            } else {
                h = parse_loaded_hypergraph(text, HypergraphParseOptions{options.preprocess});
                if (options.ratio) h = mark_heavy(*h, *options.ratio, seed);
                if (is_tree_method(method)) {
                    g = primal_graph(*h);
                    if (options.ratio) g = mark_heavy(*g, *options.ratio, seed);
                }
            }
            const auto res = decompose(method, g ? &*g : nullptr, h ? &*h : nullptr, exact);
            // Re-validate before emitting.
            const auto report = res.td && !res.htd ? check_td(*g, *res.td) : check_htd(*h, *res.htd, false);
            if (!report.ok() || report.width != res.width || report.load != res.load) {
                rec.status = "error";
            } else {
                rec.width = res.width;
                rec.load = res.load;
                rec.status = "ok";
            }
        } catch (const ExactTimeout& e) {
            rec.width = e.incumbent().width;
            rec.load = e.incumbent().load;
            rec.status = "timeout";
        } catch (const std::bad_alloc&) {
            rec.status = "memout";
        } catch (const Error& e) {
            switch (e.code()) {
                case ErrorCode::InfeasibleBound: rec.status = "infeasible"; break;
                case ErrorCode::SolverTimeout: rec.status = "timeout"; break;
                default: rec.status = "error"; break;
            }
        }
        rec.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return rec;
    };

    const int jobs = std::max(1, options.jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) records[i] = run_task(tasks[i]);
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return records;  // tasks were laid out in (instance, method) order
}

std::vector<std::pair<std::string, std::string>> existing_keys(const std::string& path) {
    std::vector<std::pair<std::string, std::string>> keys;
    if (!fs::exists(path)) return keys;
    for (const auto& r : parse_csv(read_file(path))) keys.emplace_back(r.instance, r.method);
    return keys;
}

std::size_t append_csv(const std::string& path, const std::vector<BenchmarkRecord>& records) {
    const bool fresh = !fs::exists(path) || fs::file_size(path) == 0;
    std::set<std::pair<std::string, std::string>> seen;
    for (auto& k : existing_keys(path)) seen.insert(std::move(k));
    std::ofstream out(path, std::ios::app | std::ios::binary);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    if (fresh) out << csv_header() << '\n';
    std::size_t appended = 0;
    for (const auto& r : records)
        if (seen.insert({r.instance, r.method}).second) {
            out << to_csv_line(r) << '\n';
            ++appended;
        }
    return appended;
}

std::string scatter_data(const std::vector<BenchmarkRecord>& records, Method x, Method y, ScatterMetric metric,
                         int min_width) {
    std::map<std::string, const BenchmarkRecord*> xs, ys;
    for (const auto& r : records) {
        if (r.status != "ok") continue;
        if (r.method == method_name(x)) xs[r.instance] = &r;
        if (r.method == method_name(y)) ys[r.instance] = &r;
    }
    std::map<std::pair<int, int>, int> counts;
    for (const auto& [inst, rx] : xs) {
        auto it = ys.find(inst);
        if (it == ys.end() || rx->width < min_width) continue;
        const auto* ry = it->second;
        const auto point = metric == ScatterMetric::Width ? std::pair(rx->width, ry->width) : std::pair(rx->load, ry->load);
        ++counts[point];
    }
    std::ostringstream os;
    for (const auto& [p, n] : counts) os << p.first << ' ' << p.second << ' ' << n << '\n';
    return os.str();
}

}  // namespace ttw
