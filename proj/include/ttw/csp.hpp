#pragma once

#include "ttw/graph.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ttw {

using Value = std::int64_t;
using Rational = mpq_class;
using Tuple = std::vector<Value>;

/// Parses "p", "-p/q" or a decimal like "0.25" into an exact rational. Returns nullopt on junk.
std::optional<Rational> parse_rational(std::string_view text);
/// Canonical "p" or "p/q" form.
std::string format_rational(const Rational& q);

struct CspVariable {
    std::string name;
    std::vector<Value> domain;  // explicit, duplicate-free, in file order

    friend bool operator==(const CspVariable&, const CspVariable&) = default;
};

/// Table constraint. Unweighted constraints have empty `weights`; a weighted one carries
/// one weight per tuple and an optional default value for assignments outside the support.
struct Constraint {
    std::vector<int> scope;  // variable ids, ordered
    std::vector<Tuple> tuples;
    std::vector<Rational> weights;
    std::optional<Rational> default_value;

    bool weighted() const noexcept { return !weights.empty() || default_value.has_value(); }
    /// Weight of tuple i: its explicit weight, or 1 for unweighted constraints.
    Rational weight(std::size_t i) const { return weights.empty() ? Rational(1) : weights[i]; }
    Rational default_or_zero() const { return default_value.value_or(Rational(0)); }

    friend bool operator==(const Constraint&, const Constraint&) = default;
};

struct CspInstance {
    std::vector<CspVariable> variables;
    std::vector<Constraint> constraints;

    int num_variables() const noexcept { return static_cast<int>(variables.size()); }
    int variable_id(std::string_view name) const;  // -1 if absent

    /// Throws ArityMismatch, ValueOutOfDomain, DuplicateScope or InvalidArgument.
    void validate() const;

    friend bool operator==(const CspInstance&, const CspInstance&) = default;
};

using Assignment = std::vector<Value>;  // indexed by variable id

/// True iff `a` assigns every variable a domain value and satisfies every constraint's relation.
bool satisfies(const CspInstance& csp, const Assignment& a);

/// Primal graph of the instance; a variable is heavy iff |D(v)| > d.
LoadedGraph primal_graph(const CspInstance& csp, int domain_threshold);

/// One hyperedge per constraint scope (edge id == constraint index), heavy iff |R| > d.
/// Variables in no scope get trailing singleton light hyperedges, which stand for the unary
/// full-domain relation of that variable.
LoadedHypergraph csp_hypergraph(const CspInstance& csp, int tuple_threshold);

}  // namespace ttw
