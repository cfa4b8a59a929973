#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "unipy/process.hpp"

namespace unipy::testing {

std::filesystem::path source_dir();
std::filesystem::path corpus_dir();
std::filesystem::path fixtures_dir();
std::filesystem::path fixture(std::string_view relative);
std::filesystem::path unipy_binary();

/// Every English program in the corpus, sorted.
std::vector<std::filesystem::path> corpus_programs();

/// Runs the unipy CLI with the given arguments.
process::Result run_cli(const std::vector<std::string>& args, std::optional<std::string> stdin_data = {});

std::size_t count_lines(std::string_view text);

/// Random source-like text drawn from a pool that mixes ASCII code, Arabic
/// and Devanagari letters, localized digits, quotes, comment markers, line
/// breaks of every style, and the odd malformed byte.
class SourceFuzzer {
public:
    explicit SourceFuzzer(std::uint32_t seed) : rng_(seed) {}
    std::string next(std::size_t max_pieces = 40);

private:
    std::mt19937 rng_;
};

}  // namespace unipy::testing
