#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace unipy::process {

struct Spec {
    std::vector<std::string> argv;  // argv[0] is the executable path
    std::optional<std::string> stdin_data;  // piped when set
    bool inherit_stdin = false;             // otherwise stdin is /dev/null unless data is given
    bool capture_stdout = true;             // otherwise inherited
    bool capture_stderr = true;
};

struct Result {
    int exit_code = 0;  // 128 + signal number when killed by a signal
    std::string out;
    std::string err;
    double wall_ms = 0.0;  // spawn to reap
};

/// Runs a child to completion. Throws SpawnError if it cannot be started.
Result run(const Spec& spec);

/// Resolves a bare program name against PATH; paths are returned as-is when
/// they name an executable file.
std::optional<std::filesystem::path> find_executable(const std::string& name);

}  // namespace unipy::process
