#pragma once

#include "ttw/sat_solver.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace ttw::test {

/// Solver configured for the test run through TTW_SAT_SOLVER.
inline bool have_solver() {
    const char* env = std::getenv("TTW_SAT_SOLVER");
    return env && *env;
}

/// Executable shell script in the temp directory, for simulating solver behaviour.
inline std::string write_script(const std::string& name, const std::string& body) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << "#!/bin/sh\n" << body << '\n';
    std::filesystem::permissions(path, std::filesystem::perms::owner_all);
    return path.string();
}

}  // namespace ttw::test

#define REQUIRE_SOLVER()                                                   \
    do {                                                                   \
        if (!::ttw::test::have_solver()) {                                 \
            MESSAGE("TTW_SAT_SOLVER not set; solver-backed checks skipped"); \
            return;                                                        \
        }                                                                  \
    } while (0)
