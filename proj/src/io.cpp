#include "ttw/io.hpp"

#include "ttw/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace ttw {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

/// Splits text into lines, dropping a trailing '\r' from each.
std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        if (i >= line.size()) break;
        std::size_t j = i;
        while (j < line.size() && !is_space(line[j])) ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
    if (s.empty()) return false;
    const char* first = s.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

template <class Int>
Int expect_int(const Token& t, std::size_t line, const char* what) {
    Int v{};
    if (!parse_int(t.text, v))
        throw ParseError(ErrorCode::SyntaxError, line, t.column,
                         std::string("expected ") + what + ", got '" + std::string(t.text) + "'");
    return v;
}

bool valid_name(std::string_view name) {
    if (name.empty()) return false;
    return std::none_of(name.begin(), name.end(), [](char c) {
        return is_space(c) || c == '\n' || c == '(' || c == ')' || c == ',' || c == '%' || c == ':' || c == ';';
    });
}

}  // namespace

// ---------------------------------------------------------------- graphs

LoadedGraph parse_loaded_graph(std::string_view text) {
    const auto lines = split_lines(text);
    LoadedGraph g;
    bool have_header = false;
    std::size_t declared_edges = 0, edge_lines = 0;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        const auto toks = tokenize(lines[ln]);
        if (toks.empty() || toks[0].text == "c" || toks[0].text.front() == 'c') continue;
        if (toks[0].text == "p") {
            if (have_header) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "duplicate problem line");
            if (toks.size() != 4 || toks[1].text != "tw")
                throw ParseError(ErrorCode::SyntaxError, line_no, 1, "expected 'p tw <n> <m>'");
            const int n = expect_int<int>(toks[2], line_no, "vertex count");
            declared_edges = expect_int<std::size_t>(toks[3], line_no, "edge count");
            if (n < 0) throw ParseError(ErrorCode::SyntaxError, line_no, toks[2].column, "negative vertex count");
            g = LoadedGraph(n);
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "content before 'p tw' line");
        auto vertex = [&](const Token& t) {
            const long long v = expect_int<long long>(t, line_no, "vertex id");
            if (v < 1 || v > g.num_vertices())
                throw ParseError(ErrorCode::BadVertexId, line_no, t.column, "vertex " + std::string(t.text) + " out of range");
            return static_cast<Vertex>(v - 1);
        };
        if (toks[0].text == "h") {
            if (toks.size() != 2) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "expected 'h <v>'");
            g.set_heavy(vertex(toks[1]), true);
            continue;
        }
        if (toks.size() != 2) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "expected '<u> <v>'");
        const Vertex u = vertex(toks[0]);
        const Vertex v = vertex(toks[1]);
        if (u == v) throw ParseError(ErrorCode::BadVertexId, line_no, toks[1].column, "self-loop");
        g.add_edge(u, v);
        ++edge_lines;
    }
    if (!have_header) throw ParseError(ErrorCode::SyntaxError, lines.size(), 0, "missing 'p tw' line");
    if (edge_lines != declared_edges)
        throw ParseError(ErrorCode::CountMismatch, lines.size(), 0,
                         "declared " + std::to_string(declared_edges) + " edges, found " + std::to_string(edge_lines));
    return g;
}

std::string write_loaded_graph(const LoadedGraph& g) {
    std::ostringstream os;
    os << "p tw " << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (g.heavy(v)) os << "h " << v + 1 << '\n';
    return os.str();
}

// ---------------------------------------------------------------- hypergraphs

LoadedHypergraph parse_loaded_hypergraph(std::string_view text, const HypergraphParseOptions& options) {
    struct RawEdge {
        std::string name;
        std::vector<std::string> vertices;
        std::size_t line, column;
    };
    std::vector<RawEdge> raw;
    std::vector<std::pair<std::string, std::pair<std::size_t, std::size_t>>> heavy_marks;
    std::vector<std::string> declared_vertices;

    std::size_t i = 0, line = 1, line_start = 0;
    auto col = [&] { return i - line_start + 1; };
    auto advance = [&] {
        if (text[i] == '\n') {
            ++line;
            line_start = i + 1;
        }
        ++i;
    };
    auto skip_ws = [&] {
        while (i < text.size()) {
            const char c = text[i];
            if (is_space(c) || c == '\n') {
                advance();
            } else if (c == '%') {
                const std::size_t dl = line, dc = col();
                std::size_t end = text.find('\n', i);
                if (end == std::string_view::npos) end = text.size();
                auto comment = text.substr(i + 1, end - i - 1);
                const auto toks = tokenize(comment);
                if (!toks.empty() && toks[0].text == "heavy") {
                    if (toks.size() < 2) throw ParseError(ErrorCode::SyntaxError, dl, dc, "'%heavy' needs a name");
                    for (std::size_t k = 1; k < toks.size(); ++k)
                        heavy_marks.push_back({std::string(toks[k].text), {dl, dc + toks[k].column}});
                } else if (!toks.empty() && toks[0].text == "vertices") {
                    for (std::size_t k = 1; k < toks.size(); ++k) declared_vertices.emplace_back(toks[k].text);
                }
                while (i < end) ++i;
            } else {
                break;
            }
        }
    };
    auto read_ident = [&]() -> std::string {
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j]) && text[j] != '\n' && text[j] != '(' && text[j] != ')' &&
               text[j] != ',' && text[j] != '%')
            ++j;
        std::string id(text.substr(i, j - i));
        while (i < j) ++i;
        return id;
    };

    skip_ws();
    while (i < text.size()) {
        RawEdge e;
        e.line = line;
        e.column = col();
        e.name = read_ident();
        if (e.name.empty()) throw ParseError(ErrorCode::SyntaxError, line, col(), "expected hyperedge name");
        skip_ws();
        if (i >= text.size() || text[i] != '(') throw ParseError(ErrorCode::SyntaxError, line, col(), "expected '('");
        advance();
        skip_ws();
        if (i < text.size() && text[i] == ')') {
            throw ParseError(ErrorCode::EmptyEdge, e.line, e.column, "hyperedge '" + e.name + "' is empty");
        }
        while (true) {
            skip_ws();
            auto v = read_ident();
            if (v.empty()) throw ParseError(ErrorCode::SyntaxError, line, col(), "expected vertex name");
            e.vertices.push_back(std::move(v));
            skip_ws();
            if (i >= text.size()) throw ParseError(ErrorCode::SyntaxError, line, col(), "unterminated hyperedge");
            if (text[i] == ',') {
                advance();
                continue;
            }
            if (text[i] == ')') {
                advance();
                break;
            }
            throw ParseError(ErrorCode::SyntaxError, line, col(), "expected ',' or ')'");
        }
        skip_ws();
        if (i < text.size() && (text[i] == ',' || text[i] == '.')) advance();
        skip_ws();
        raw.push_back(std::move(e));
    }

    std::map<std::string, int> vertex_ids;
    std::vector<std::string> names;
    for (const auto& v : declared_vertices)
        if (vertex_ids.emplace(v, static_cast<int>(names.size())).second) names.push_back(v);
    for (const auto& e : raw)
        for (const auto& v : e.vertices)
            if (vertex_ids.emplace(v, static_cast<int>(names.size())).second) names.push_back(v);

    LoadedHypergraph h(static_cast<int>(names.size()));
    h.set_vertex_names(names);
    std::map<std::string, std::vector<int>> edge_by_name;
    for (const auto& e : raw) {
        std::vector<Vertex> vs;
        for (const auto& v : e.vertices) vs.push_back(vertex_ids.at(v));
        const int id = h.add_edge(std::move(vs), false, e.name);
        edge_by_name[e.name].push_back(id);
    }
    for (const auto& [name, pos] : heavy_marks) {
        auto it = edge_by_name.find(name);
        if (it == edge_by_name.end())
            throw ParseError(ErrorCode::SyntaxError, pos.first, pos.second, "'%heavy' names unknown hyperedge '" + name + "'");
        for (int id : it->second) h.set_heavy(id, true);
    }
    h.cover_isolated_vertices();
    if (options.remove_subsumed) h.remove_subsumed_edges();
    return h;
}

std::string write_loaded_hypergraph(const LoadedHypergraph& h) {
    std::ostringstream os;
    os << "%vertices";
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        const auto name = h.vertex_name(v);
        if (!valid_name(name)) throw Error(ErrorCode::InvalidArgument, "vertex name '" + name + "' cannot be written");
        os << ' ' << name;
    }
    os << '\n';
    std::set<std::string> used;
    for (int id = 0; id < h.num_edges(); ++id) {
        const auto& e = h.edge(id);
        if (!valid_name(e.name) || !used.insert(e.name).second)
            throw Error(ErrorCode::InvalidArgument, "hyperedge name '" + e.name + "' cannot be written");
        if (e.heavy) os << "%heavy " << e.name << '\n';
    }
    for (int id = 0; id < h.num_edges(); ++id) {
        const auto& e = h.edge(id);
        os << e.name << '(';
        for (std::size_t k = 0; k < e.vertices.size(); ++k) os << (k ? "," : "") << h.vertex_name(e.vertices[k]);
        os << (id + 1 == h.num_edges() ? ").\n" : "),\n");
    }
    return os.str();
}

// ---------------------------------------------------------------- CSP

CspInstance parse_csp(std::string_view text) {
    const auto lines = split_lines(text);
    CspInstance csp;
    std::map<std::string, int, std::less<>> ids;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        const auto toks = tokenize(lines[ln]);
        if (toks.empty() || toks[0].text == "c") continue;
        if (toks[0].text == "v") {
            if (toks.size() < 2) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "expected 'v <name> <values...>'");
            std::string name(toks[1].text);
            if (!valid_name(name)) throw ParseError(ErrorCode::SyntaxError, line_no, toks[1].column, "bad variable name");
            if (ids.count(name)) throw ParseError(ErrorCode::SyntaxError, line_no, toks[1].column, "variable redeclared");
            CspVariable var{name, {}};
            std::set<Value> seen;
            for (std::size_t k = 2; k < toks.size(); ++k) {
                const Value val = expect_int<Value>(toks[k], line_no, "domain value");
                if (!seen.insert(val).second)
                    throw ParseError(ErrorCode::SyntaxError, line_no, toks[k].column, "duplicate domain value");
                var.domain.push_back(val);
            }
            ids.emplace(name, csp.num_variables());
            csp.variables.push_back(std::move(var));
            continue;
        }
        if (toks[0].text != "ct")
            throw ParseError(ErrorCode::SyntaxError, line_no, toks[0].column, "unknown line type '" + std::string(toks[0].text) + "'");

        Constraint c;
        std::size_t k = 1;
        for (; k < toks.size() && toks[k].text != ":"; ++k) {
            auto it = ids.find(toks[k].text);
            if (it == ids.end())
                throw ParseError(ErrorCode::SyntaxError, line_no, toks[k].column, "unknown variable '" + std::string(toks[k].text) + "'");
            if (std::find(c.scope.begin(), c.scope.end(), it->second) != c.scope.end())
                throw ParseError(ErrorCode::SyntaxError, line_no, toks[k].column, "variable repeated in scope");
            c.scope.push_back(it->second);
        }
        if (k == toks.size()) throw ParseError(ErrorCode::SyntaxError, line_no, 0, "missing ':' after scope");
        if (c.scope.empty()) throw ParseError(ErrorCode::ArityMismatch, line_no, toks[k].column, "empty scope");
        ++k;
        std::set<Tuple> seen;
        bool any_weight = false, any_unweighted = false;
        // Segments separated by ';' (standalone or glued to a token end).
        std::vector<std::vector<Token>> segments(1);
        for (; k < toks.size(); ++k) {
            std::string_view t = toks[k].text;
            if (t == ";") {
                segments.emplace_back();
                continue;
            }
            bool split = false;
            if (t.size() > 1 && t.back() == ';') {
                t.remove_suffix(1);
                split = true;
            }
            segments.back().push_back({t, toks[k].column});
            if (split) segments.emplace_back();
        }
        for (const auto& seg : segments) {
            if (seg.empty()) continue;
            std::size_t s = 0;
            Tuple tuple;
            std::optional<Rational> weight;
            while (s < seg.size()) {
                if (seg[s].text == "w" || seg[s].text == "dflt") {
                    if (s + 1 >= seg.size())
                        throw ParseError(ErrorCode::SyntaxError, line_no, seg[s].column, "missing rational after '" + std::string(seg[s].text) + "'");
                    auto q = parse_rational(seg[s + 1].text);
                    if (!q) throw ParseError(ErrorCode::SyntaxError, line_no, seg[s + 1].column, "bad rational");
                    if (seg[s].text == "w") {
                        if (weight) throw ParseError(ErrorCode::SyntaxError, line_no, seg[s].column, "duplicate weight");
                        weight = *q;
                    } else {
                        if (c.default_value) throw ParseError(ErrorCode::SyntaxError, line_no, seg[s].column, "duplicate default");
                        c.default_value = *q;
                    }
                    s += 2;
                    continue;
                }
                if (weight) throw ParseError(ErrorCode::SyntaxError, line_no, seg[s].column, "value after weight");
                tuple.push_back(expect_int<Value>(seg[s], line_no, "tuple value"));
                ++s;
            }
            if (tuple.empty()) {
                if (weight) throw ParseError(ErrorCode::SyntaxError, line_no, seg.front().column, "weight without tuple");
                continue;
            }
            if (tuple.size() != c.scope.size())
                throw ParseError(ErrorCode::ArityMismatch, line_no, seg.front().column,
                                 "tuple has " + std::to_string(tuple.size()) + " values for scope of " +
                                     std::to_string(c.scope.size()));
            for (std::size_t p = 0; p < tuple.size(); ++p) {
                const auto& dom = csp.variables[c.scope[p]].domain;
                if (std::find(dom.begin(), dom.end(), tuple[p]) == dom.end())
                    throw ParseError(ErrorCode::ValueOutOfDomain, line_no, seg[p].column,
                                     "value " + std::to_string(tuple[p]) + " not in D(" + csp.variables[c.scope[p]].name + ")");
            }
            if (!seen.insert(tuple).second)
                throw ParseError(ErrorCode::SyntaxError, line_no, seg.front().column, "duplicate tuple");
            if (weight) {
                any_weight = true;
                c.weights.push_back(*weight);
            } else {
                any_unweighted = true;
            }
            c.tuples.push_back(std::move(tuple));
        }
        if (any_weight && any_unweighted)
            throw ParseError(ErrorCode::SyntaxError, line_no, 0, "either every tuple or no tuple carries a weight");
        csp.constraints.push_back(std::move(c));
        try {
            csp.validate();
        } catch (const Error& e) {
            throw ParseError(e.code(), line_no, 0, e.what());
        }
    }
    return csp;
}

std::string write_csp(const CspInstance& csp) {
    std::ostringstream os;
    for (const auto& v : csp.variables) {
        if (!valid_name(v.name)) throw Error(ErrorCode::InvalidArgument, "variable name '" + v.name + "' cannot be written");
        os << "v " << v.name;
        for (Value x : v.domain) os << ' ' << x;
        os << '\n';
    }
    for (const auto& c : csp.constraints) {
        os << "ct";
        for (int v : c.scope) os << ' ' << csp.variables.at(v).name;
        os << " :";
        for (std::size_t t = 0; t < c.tuples.size(); ++t) {
            if (t) os << " ;";
            for (Value x : c.tuples[t]) os << ' ' << x;
            if (!c.weights.empty()) os << " w " << format_rational(c.weights[t]);
        }
        if (c.default_value) os << (c.tuples.empty() ? "" : " ;") << " dflt " << format_rational(*c.default_value);
        os << '\n';
    }
    return os.str();
}

// ---------------------------------------------------------------- decompositions

namespace {

std::string write_decomposition(const TreeDecomposition& td, const std::vector<std::vector<int>>* covers, int n) {
    std::ostringstream os;
    std::size_t max_bag = 0;
    for (const auto& b : td.bags) max_bag = std::max(max_bag, b.size());
    os << "s td " << td.num_nodes() << ' ' << max_bag << ' ' << n << '\n';
    for (int t = 0; t < td.num_nodes(); ++t) {
        os << "b " << t + 1;
        for (Vertex v : td.bags[t]) os << ' ' << v + 1;
        os << '\n';
    }
    for (int t = 0; t < td.num_nodes(); ++t)
        if (td.parent[t] >= 0) os << td.parent[t] + 1 << ' ' << t + 1 << '\n';
    if (covers)
        for (int t = 0; t < td.num_nodes(); ++t) {
            os << "l " << t + 1;
            for (int e : (*covers)[t]) os << ' ' << e + 1;
            os << '\n';
        }
    return os.str();
}

struct RawDecomposition {
    TreeDecomposition td;
    std::vector<std::vector<int>> covers;
    std::vector<char> has_cover;
    int n = 0;
};

RawDecomposition parse_decomposition(std::string_view text, bool allow_covers) {
    const auto lines = split_lines(text);
    RawDecomposition out;
    bool have_header = false;
    int nodes = 0;
    std::size_t declared_max = 0;
    std::vector<char> seen_bag;
    std::vector<std::vector<int>> adj;
    std::size_t edge_count = 0;
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        const auto toks = tokenize(lines[ln]);
        if (toks.empty() || toks[0].text == "c") continue;
        if (toks[0].text == "s") {
            if (have_header) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "duplicate solution line");
            if (toks.size() != 5 || toks[1].text != "td")
                throw ParseError(ErrorCode::SyntaxError, line_no, 1, "expected 's td <bags> <maxbag> <n>'");
            nodes = expect_int<int>(toks[2], line_no, "bag count");
            declared_max = expect_int<std::size_t>(toks[3], line_no, "bag size");
            out.n = expect_int<int>(toks[4], line_no, "vertex count");
            if (nodes < 1 || out.n < 0)
                throw ParseError(ErrorCode::SyntaxError, line_no, 1, "need at least one bag and n >= 0");
            out.td.bags.assign(static_cast<std::size_t>(nodes), {});
            out.td.parent.assign(static_cast<std::size_t>(nodes), -1);
            out.covers.assign(static_cast<std::size_t>(nodes), {});
            out.has_cover.assign(static_cast<std::size_t>(nodes), 0);
            seen_bag.assign(static_cast<std::size_t>(nodes), 0);
            adj.assign(static_cast<std::size_t>(nodes), {});
            have_header = true;
            continue;
        }
        if (!have_header) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "content before 's td' line");
        auto node_id = [&](const Token& t) {
            const long long id = expect_int<long long>(t, line_no, "bag id");
            if (id < 1 || id > nodes) throw ParseError(ErrorCode::SyntaxError, line_no, t.column, "bag id out of range");
            return static_cast<int>(id - 1);
        };
        if (toks[0].text == "b" || toks[0].text == "l") {
            const bool is_bag = toks[0].text == "b";
            if (!is_bag && !allow_covers) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "cover line in a tree decomposition");
            if (toks.size() < 2) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "missing bag id");
            const int t = node_id(toks[1]);
            auto& seen = is_bag ? seen_bag[t] : out.has_cover[t];
            if (seen) throw ParseError(ErrorCode::SyntaxError, line_no, toks[1].column, "bag listed twice");
            seen = 1;
            std::vector<int> items;
            for (std::size_t k = 2; k < toks.size(); ++k) {
                const long long v = expect_int<long long>(toks[k], line_no, is_bag ? "vertex id" : "hyperedge id");
                if (v < 1 || (is_bag && v > out.n))
                    throw ParseError(is_bag ? ErrorCode::BadVertexId : ErrorCode::SyntaxError, line_no, toks[k].column, "id out of range");
                items.push_back(static_cast<int>(v - 1));
            }
            std::sort(items.begin(), items.end());
            if (std::adjacent_find(items.begin(), items.end()) != items.end())
                throw ParseError(ErrorCode::SyntaxError, line_no, 0, "repeated id");
            (is_bag ? out.td.bags[t] : out.covers[t]) = std::move(items);
            continue;
        }
        if (toks.size() != 2) throw ParseError(ErrorCode::SyntaxError, line_no, 1, "expected tree edge '<a> <b>'");
        const int a = node_id(toks[0]), b = node_id(toks[1]);
        if (a == b) throw ParseError(ErrorCode::SyntaxError, line_no, toks[1].column, "tree self-loop");
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++edge_count;
    }
    if (!have_header) throw ParseError(ErrorCode::SyntaxError, lines.size(), 0, "missing 's td' line");
    for (int t = 0; t < nodes; ++t)
        if (!seen_bag[t]) throw ParseError(ErrorCode::SyntaxError, lines.size(), 0, "bag " + std::to_string(t + 1) + " missing");
    std::size_t max_bag = 0;
    for (const auto& b : out.td.bags) max_bag = std::max(max_bag, b.size());
    if (max_bag != declared_max)
        throw ParseError(ErrorCode::CountMismatch, lines.size(), 0, "declared bag size differs from largest bag");
    if (edge_count + 1 != static_cast<std::size_t>(nodes))
        throw ParseError(ErrorCode::SyntaxError, lines.size(), 0, "tree must have #bags - 1 edges");
    std::vector<char> visited(static_cast<std::size_t>(nodes), 0);
    std::vector<int> queue{0};
    visited[0] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (int nb : adj[queue[q]])
            if (!visited[nb]) {
                visited[nb] = 1;
                out.td.parent[nb] = queue[q];
                queue.push_back(nb);
            }
    if (static_cast<int>(queue.size()) != nodes)
        throw ParseError(ErrorCode::SyntaxError, lines.size(), 0, "tree edges do not connect all bags");
    return out;
}

}  // namespace

std::string write_td(const TreeDecomposition& td, int num_vertices) {
    return write_decomposition(td, nullptr, num_vertices);
}

ParsedTd parse_td(std::string_view text) {
    auto raw = parse_decomposition(text, false);
    return ParsedTd{std::move(raw.td), raw.n};
}

std::string write_htd(const HypertreeDecomposition& htd, int num_vertices) {
    return write_decomposition(htd.td, &htd.covers, num_vertices);
}

ParsedHtd parse_htd(std::string_view text) {
    auto raw = parse_decomposition(text, true);
    for (std::size_t t = 0; t < raw.has_cover.size(); ++t)
        if (!raw.has_cover[t])
            throw ParseError(ErrorCode::SyntaxError, 0, 0, "bag " + std::to_string(t + 1) + " has no cover line");
    ParsedHtd out;
    out.htd.td = std::move(raw.td);
    out.htd.covers = std::move(raw.covers);
    out.num_vertices = raw.n;
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << contents;
}

}  // namespace ttw
