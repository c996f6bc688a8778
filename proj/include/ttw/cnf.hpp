#pragma once

#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace ttw {

/// Clause database over named variables. Variables are numbered 1..num_vars() as in DIMACS.
class CnfFormula {
public:
    /// Registers a fresh variable; names must be unique.
    int new_var(const std::string& name);
    /// Auxiliary variable named "<prefix>#<id>".
    int new_aux(const std::string& prefix = "aux");
    /// Id of a registered name, or 0 if absent.
    int find(const std::string& name) const;
    int var(const std::string& name) const;  // throws if absent
    const std::string& name(int var) const { return names_.at(static_cast<std::size_t>(var) - 1); }

    /// Throws on an empty clause or an unregistered variable.
    void add_clause(std::vector<int> literals);
    /// Sequential-counter encoding of Σ literals ≤ k. A negative k makes the formula unsatisfiable.
    void at_most_k(std::span<const int> literals, int k, const std::string& prefix = "ctr");

    int num_vars() const noexcept { return static_cast<int>(names_.size()); }
    std::size_t num_clauses() const noexcept { return clauses_.size(); }
    const std::vector<std::vector<int>>& clauses() const noexcept { return clauses_; }

    std::string to_dimacs() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> ids_;
    std::vector<std::vector<int>> clauses_;
};

}  // namespace ttw
