#include "ttw/csp.hpp"

#include "ttw/error.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ttw {

std::optional<Rational> parse_rational(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    bool negative = false;
    std::size_t pos = 0;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) return std::nullopt;
    auto all_digits = [](std::string_view part) {
        return !part.empty() && std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    std::string_view body(s.data() + pos, s.size() - pos);
    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash), den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) return std::nullopt;
        mpz_class n(std::string(num), 10), d(std::string(den), 10);
        if (d == 0) return std::nullopt;
        result = Rational(n, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto whole = body.substr(0, dot), frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) return std::nullopt;
        mpz_class n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
        mpz_class d;
        mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
        result = Rational(n, d);
    } else {
        if (!all_digits(body)) return std::nullopt;
        result = Rational(mpz_class(std::string(body), 10));
    }
    result.canonicalize();
    if (negative) result = -result;
    return result;
}

std::string format_rational(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_str();
}

int CspInstance::variable_id(std::string_view name) const {
    for (int i = 0; i < num_variables(); ++i)
        if (variables[i].name == name) return i;
    return -1;
}

void CspInstance::validate() const {
    std::set<std::string> names;
    for (const auto& v : variables) {
        if (!names.insert(v.name).second)
            throw Error(ErrorCode::InvalidArgument, "duplicate variable '" + v.name + "'");
        std::set<Value> seen(v.domain.begin(), v.domain.end());
        if (seen.size() != v.domain.size())
            throw Error(ErrorCode::InvalidArgument, "duplicate domain value for '" + v.name + "'");
    }
    std::set<std::vector<int>> scope_sets;
    for (std::size_t ci = 0; ci < constraints.size(); ++ci) {
        const auto& c = constraints[ci];
        if (c.scope.empty()) throw Error(ErrorCode::ArityMismatch, "constraint with empty scope");
        for (int v : c.scope)
            if (v < 0 || v >= num_variables())
                throw Error(ErrorCode::InvalidArgument, "constraint refers to unknown variable");
        std::vector<int> key = c.scope;
        std::sort(key.begin(), key.end());
        if (std::adjacent_find(key.begin(), key.end()) != key.end())
            throw Error(ErrorCode::InvalidArgument, "variable repeated in a scope");
        if (!scope_sets.insert(key).second)
            throw Error(ErrorCode::DuplicateScope, "two constraints share scope set #" + std::to_string(ci + 1));
        if (!c.weights.empty() && c.weights.size() != c.tuples.size())
            throw Error(ErrorCode::ArityMismatch, "weight count differs from tuple count");
        std::set<Tuple> distinct(c.tuples.begin(), c.tuples.end());
        if (distinct.size() != c.tuples.size())
            throw Error(ErrorCode::InvalidArgument, "constraint #" + std::to_string(ci + 1) + " repeats a tuple");
        for (const auto& t : c.tuples) {
            if (t.size() != c.scope.size()) throw Error(ErrorCode::ArityMismatch, "tuple arity differs from scope");
            for (std::size_t i = 0; i < t.size(); ++i) {
                const auto& dom = variables[c.scope[i]].domain;
                if (std::find(dom.begin(), dom.end(), t[i]) == dom.end())
                    throw Error(ErrorCode::ValueOutOfDomain, "value " + std::to_string(t[i]) + " not in D(" +
                                                                 variables[c.scope[i]].name + ")");
            }
        }
    }
}

bool satisfies(const CspInstance& csp, const Assignment& a) {
    if (static_cast<int>(a.size()) != csp.num_variables()) return false;
    for (int v = 0; v < csp.num_variables(); ++v) {
        const auto& dom = csp.variables[v].domain;
        if (std::find(dom.begin(), dom.end(), a[v]) == dom.end()) return false;
    }
    for (const auto& c : csp.constraints) {
        Tuple t;
        t.reserve(c.scope.size());
        for (int v : c.scope) t.push_back(a[v]);
        if (std::find(c.tuples.begin(), c.tuples.end(), t) == c.tuples.end()) return false;
    }
    return true;
}

LoadedGraph primal_graph(const CspInstance& csp, int domain_threshold) {
    if (domain_threshold < 0) throw Error(ErrorCode::InvalidArgument, "negative domain threshold");
    LoadedGraph g(csp.num_variables());
    for (int v = 0; v < csp.num_variables(); ++v)
        g.set_heavy(v, static_cast<int>(csp.variables[v].domain.size()) > domain_threshold);
    for (const auto& c : csp.constraints)
        for (std::size_t i = 0; i < c.scope.size(); ++i)
            for (std::size_t j = i + 1; j < c.scope.size(); ++j) g.add_edge(c.scope[i], c.scope[j]);
    return g;
}

LoadedHypergraph csp_hypergraph(const CspInstance& csp, int tuple_threshold) {
    if (tuple_threshold < 0) throw Error(ErrorCode::InvalidArgument, "negative tuple threshold");
    LoadedHypergraph h(csp.num_variables());
    std::vector<std::string> names;
    for (const auto& v : csp.variables) names.push_back(v.name);
    h.set_vertex_names(std::move(names));
    for (std::size_t ci = 0; ci < csp.constraints.size(); ++ci) {
        const auto& c = csp.constraints[ci];
        const bool heavy = static_cast<int>(c.tuples.size()) > tuple_threshold;
        const int id = h.add_edge(c.scope, heavy, "c" + std::to_string(ci + 1));
        if (id != static_cast<int>(ci))
            throw Error(ErrorCode::DuplicateScope, "constraint #" + std::to_string(ci + 1) + " repeats a scope set");
    }
    h.cover_isolated_vertices();
    return h;
}

}  // namespace ttw
