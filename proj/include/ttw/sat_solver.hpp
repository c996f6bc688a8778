#pragma once

#include "ttw/cnf.hpp"

#include <chrono>
#include <string>
#include <vector>

namespace ttw {

struct SolverConfig {
    std::string path;               // solver binary; empty means $TTW_SAT_SOLVER
    std::vector<std::string> args;  // extra arguments placed before the CNF path
    bool model_file = false;        // pass a second path and read `SAT` / literals from it
};

/// Resolves an empty path from the environment. Throws InvalidArgument when nothing is configured.
SolverConfig resolve_solver(SolverConfig config);

struct SolverVerdict {
    enum class Status { Sat, Unsat, Unknown };
    Status status = Status::Unknown;
    std::vector<char> model;  // model[v] for v in 1..num_vars (index 0 unused)
    std::string reason;       // for Unknown

    bool sat() const noexcept { return status == Status::Sat; }
    bool value(int var) const { return model.at(static_cast<std::size_t>(var)) != 0; }
};

/// Runs one solver process on the formula. A zero timeout means no limit.
/// Throws SolverTimeout when the deadline passes and SolverCrash (with stderr) on unusable output.
SolverVerdict run_solver(const CnfFormula& cnf, const SolverConfig& config,
                         std::chrono::milliseconds timeout = std::chrono::milliseconds{0});

}  // namespace ttw
