#include "ttw/sat_solver.hpp"

#include "ttw/error.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

namespace ttw {

namespace fs = std::filesystem;

namespace {

/// Scratch directory removed on scope exit.
class TempDir {
public:
    TempDir() {
        std::string templ = (fs::temp_directory_path() / "ttw-sat-XXXXXX").string();
        if (!mkdtemp(templ.data())) throw Error(ErrorCode::SolverCrash, "cannot create temporary directory");
        path_ = templ;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    fs::path operator/(const char* name) const { return path_ / name; }

private:
    fs::path path_;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void read_literals(std::istream& in, std::vector<char>& model) {
    long long lit;
    while (in >> lit) {
        if (lit == 0) continue;
        const auto v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
        if (v < model.size()) model[v] = lit > 0 ? 1 : 0;
    }
}

}  // namespace

SolverConfig resolve_solver(SolverConfig config) {
    if (config.path.empty()) {
        if (const char* env = std::getenv("TTW_SAT_SOLVER"); env && *env) config.path = env;
    }
    if (config.path.empty())
        throw Error(ErrorCode::InvalidArgument, "no SAT solver configured (use --sat-solver or TTW_SAT_SOLVER)");
    // minisat and glucose only report models through a result file.
    const auto base = fs::path(config.path).filename().string();
    if (base.find("minisat") != std::string::npos || base.find("glucose") != std::string::npos)
        config.model_file = true;
    return config;
}

SolverVerdict run_solver(const CnfFormula& cnf, const SolverConfig& raw_config, std::chrono::milliseconds timeout) {
    const SolverConfig config = resolve_solver(raw_config);
    TempDir dir;
    const auto cnf_path = dir / "formula.cnf";
    const auto model_path = dir / "model.txt";
    const auto out_path = dir / "stdout.txt";
    const auto err_path = dir / "stderr.txt";
    {
        std::ofstream out(cnf_path, std::ios::binary);
        out << cnf.to_dimacs();
        if (!out) throw Error(ErrorCode::SolverCrash, "cannot write CNF file");
    }

    std::vector<std::string> args{config.path};
    args.insert(args.end(), config.args.begin(), config.args.end());
    args.push_back(cnf_path.string());
    if (config.model_file) args.push_back(model_path.string());
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    argv.push_back(nullptr);
    const std::string out_str = out_path.string(), err_str = err_path.string();

    const pid_t pid = fork();
    if (pid < 0) throw Error(ErrorCode::SolverCrash, "fork failed");
    if (pid == 0) {
        setpgid(0, 0);
        const int out_fd = open(out_str.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
        const int err_fd = open(err_str.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0600);
        if (out_fd < 0 || err_fd < 0) _exit(127);
        dup2(out_fd, STDOUT_FILENO);
        dup2(err_fd, STDERR_FILENO);
        execvp(argv[0], argv.data());
        _exit(127);
    }

    const auto deadline = std::chrono::steady_clock::now() + timeout;
    auto nap = std::chrono::microseconds(200);
    int status = 0;
    while (true) {
        const pid_t r = waitpid(pid, &status, WNOHANG);
        if (r == pid) break;
        if (r < 0) throw Error(ErrorCode::SolverCrash, "waitpid failed");
        if (timeout.count() > 0 && std::chrono::steady_clock::now() >= deadline) {
            kill(-pid, SIGKILL);
            kill(pid, SIGKILL);
            waitpid(pid, &status, 0);
            throw Error(ErrorCode::SolverTimeout, "SAT solver exceeded " + std::to_string(timeout.count()) + " ms");
        }
        std::this_thread::sleep_for(nap);
        nap = std::min(nap * 2, std::chrono::microseconds(10'000));
    }

    const std::string out = slurp(out_path);
    auto crash = [&](const std::string& why) {
        return Error(ErrorCode::SolverCrash, why + "; stderr: " + slurp(err_path));
    };
    if (WIFSIGNALED(status)) throw crash("solver killed by signal " + std::to_string(WTERMSIG(status)));
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (code == 127) throw crash("cannot execute '" + config.path + "'");

    SolverVerdict verdict;
    verdict.model.assign(static_cast<std::size_t>(cnf.num_vars()) + 1, 0);
    bool have_status = false, have_values = false;

    if (config.model_file && fs::exists(model_path)) {
        std::ifstream in(model_path);
        std::string head;
        if (in >> head) {
            have_status = true;
            if (head == "SAT" || head == "SATISFIABLE") {
                verdict.status = SolverVerdict::Status::Sat;
                read_literals(in, verdict.model);
                have_values = true;
            } else if (head == "UNSAT" || head == "UNSATISFIABLE") {
                verdict.status = SolverVerdict::Status::Unsat;
            } else {
                verdict.status = SolverVerdict::Status::Unknown;
                verdict.reason = head;
            }
        }
    }
    if (!have_status) {
        std::istringstream lines(out);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.rfind("s ", 0) == 0) {
                const auto word = line.substr(2);
                have_status = true;
                if (word.rfind("SATISFIABLE", 0) == 0) {
                    verdict.status = SolverVerdict::Status::Sat;
                } else if (word.rfind("UNSATISFIABLE", 0) == 0) {
                    verdict.status = SolverVerdict::Status::Unsat;
                } else {
                    verdict.status = SolverVerdict::Status::Unknown;
                    verdict.reason = word;
                }
            } else if (line.rfind("v ", 0) == 0 || line == "v") {
                std::istringstream lits(line.substr(1));
                read_literals(lits, verdict.model);
                have_values = true;
            }
        }
    }
    if (!have_status) {
        if (code == 10) {
            verdict.status = SolverVerdict::Status::Sat;
        } else if (code == 20) {
            verdict.status = SolverVerdict::Status::Unsat;
        } else {
            throw crash("no verdict from solver (exit code " + std::to_string(code) + ")");
        }
    }
    if (verdict.sat() && !have_values) throw crash("solver reported SAT without a model");
    return verdict;
}

}  // namespace ttw
