#include "ttw/cnf.hpp"

#include "ttw/error.hpp"

#include <cstdlib>
#include <sstream>

namespace ttw {

int CnfFormula::new_var(const std::string& name) {
    const int id = num_vars() + 1;
    if (!ids_.emplace(name, id).second) throw Error(ErrorCode::InvalidArgument, "variable '" + name + "' registered twice");
    names_.push_back(name);
    return id;
}

int CnfFormula::new_aux(const std::string& prefix) { return new_var(prefix + "#" + std::to_string(num_vars() + 1)); }

int CnfFormula::find(const std::string& name) const {
    auto it = ids_.find(name);
    return it == ids_.end() ? 0 : it->second;
}

int CnfFormula::var(const std::string& name) const {
    const int id = find(name);
    if (id == 0) throw Error(ErrorCode::InvalidArgument, "unknown variable '" + name + "'");
    return id;
}

void CnfFormula::add_clause(std::vector<int> literals) {
    if (literals.empty()) throw Error(ErrorCode::InvalidArgument, "empty clause");
    for (int l : literals)
        if (l == 0 || std::abs(l) > num_vars()) throw Error(ErrorCode::InvalidArgument, "literal of unregistered variable");
    clauses_.push_back(std::move(literals));
}

void CnfFormula::at_most_k(std::span<const int> x, int k, const std::string& prefix) {
    const int n = static_cast<int>(x.size());
    if (k < 0) {
        const int f = new_aux(prefix);
        add_clause({f});
        add_clause({-f});
        return;
    }
    if (k >= n) return;
    if (k == 0) {
        for (int l : x) add_clause({-l});
        return;
    }
    // s[i][j]: at least j+1 of x[0..i] are true (Sinz 2005).
    std::vector<std::vector<int>> s(static_cast<std::size_t>(n - 1), std::vector<int>(static_cast<std::size_t>(k)));
    for (auto& row : s)
        for (int& v : row) v = new_aux(prefix);
    add_clause({-x[0], s[0][0]});
    for (int j = 1; j < k; ++j) add_clause({-s[0][j]});
    for (int i = 1; i < n - 1; ++i) {
        add_clause({-x[i], s[i][0]});
        add_clause({-s[i - 1][0], s[i][0]});
        for (int j = 1; j < k; ++j) {
            add_clause({-x[i], -s[i - 1][j - 1], s[i][j]});
            add_clause({-s[i - 1][j], s[i][j]});
        }
        add_clause({-x[i], -s[i - 1][k - 1]});
    }
    add_clause({-x[n - 1], -s[n - 2][k - 1]});
}

std::string CnfFormula::to_dimacs() const {
    std::ostringstream os;
    os << "p cnf " << num_vars() << ' ' << num_clauses() << '\n';
    for (const auto& c : clauses_) {
        for (int l : c) os << l << ' ';
        os << "0\n";
    }
    return os.str();
}

}  // namespace ttw
