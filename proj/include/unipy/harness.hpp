#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unipy/translator.hpp"

namespace unipy::harness {

enum class Status { Pass, Fail };

enum class FailureStage { ReverseTranslation, ForwardTranslation, OutputMismatch, ExitMismatch };

struct RoundTripResult {
    std::filesystem::path program;
    Status status = Status::Pass;
    std::optional<FailureStage> failure_stage;  // set iff status == Fail
    std::optional<std::string> diff_excerpt;
    std::optional<std::string> detail;       // e.g. spawn failure text
    std::optional<std::string> attribution;  // pack ambiguity blamed for the failure
};

struct CorpusReport {
    int total = 0;
    int passed = 0;
    int failed = 0;
    std::vector<RoundTripResult> results;  // sorted by program path
    std::vector<std::filesystem::path> expected_failures;
    double elapsed_ms = 0.0;

    double pass_rate() const { return total == 0 ? 0.0 : static_cast<double>(passed) / total; }
};

struct BenchResult {
    std::filesystem::path program;
    double direct_mean_ms = 0.0;
    double direct_stddev_ms = 0.0;
    double transpiled_mean_ms = 0.0;
    double transpiled_stddev_ms = 0.0;
    double translate_mean_ms = 0.0;  // the translation share of each transpiled run
    int runs = 0;
    int warmups = 0;
};

struct Summary {
    double mean = 0.0;
    double stddev = 0.0;  // sample (n - 1) standard deviation; 0 for n < 2
};

Summary summarize(std::span<const double> samples);

/// Tokens whose round trip a pack cannot preserve: the secondary English
/// tokens of conflated rows, and local keys that are themselves English text.
std::vector<std::string> round_trip_hazards(const langpack::LanguagePack& pack);

/// Reverse-translates an English program, runs both versions, and compares
/// stdout and exit code. A passing check also requires the reverse output to
/// forward-translate back to the original text. A sibling `<name>.stdin`
/// file, when present, is fed to both runs.
RoundTripResult roundtrip_check(const std::filesystem::path& english_program,
                                const translator::Translator& translator,
                                const std::filesystem::path& interpreter);

/// Every *.py under `dir` (recursively), checked with up to `jobs` workers
/// (0 = hardware concurrency). Throws EmptyCorpus.
CorpusReport corpus_run(const std::filesystem::path& dir, const translator::Translator& translator,
                        const std::filesystem::path& interpreter, unsigned jobs = 0);

struct BenchOptions {
    int runs = 10;
    int warmups = 3;
};

/// Times the English program under the interpreter against its localized
/// form under the translate-then-run pipeline. Throws PreflightFailure if
/// either version fails its first run, std::invalid_argument if runs < 3.
BenchResult bench(const std::filesystem::path& english_program, const translator::Translator& translator,
                  const std::filesystem::path& interpreter, const BenchOptions& options = {});

std::string_view to_string(Status s);
std::string_view to_string(FailureStage s);

/// First divergence between two texts, at most `context` lines from each.
std::string diff_excerpt(std::string_view expected, std::string_view actual, int context = 5);

}  // namespace unipy::harness
