#include "unipy/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "unipy/error.hpp"
#include "unipy/io.hpp"
#include "unipy/lexer.hpp"
#include "unipy/process.hpp"
#include "unipy/runner.hpp"

namespace unipy::harness {

namespace {

using translator::Direction;

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto nl = text.find('\n', start);
        if (nl == std::string_view::npos) nl = text.size();
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    return lines;
}

std::optional<std::string> stdin_fixture(const std::filesystem::path& program) {
    auto path = program;
    path.replace_extension(".stdin");
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
    return io::read_file(path);
}

std::string local_name(const std::filesystem::path& program, std::string_view code) {
    return program.stem().string() + "." + std::string(code) + ".py";
}

std::optional<std::string> find_hazard(std::string_view source, const std::vector<std::string>& hazards) {
    if (hazards.empty()) return std::nullopt;
    for (const auto& tok : lexer::tokenize(source)) {
        if (lexer::is_opaque(tok)) continue;
        if (std::find(hazards.begin(), hazards.end(), tok.text) != hazards.end()) return tok.text;
    }
    return std::nullopt;
}

RoundTripResult fail(const std::filesystem::path& program, FailureStage stage) {
    RoundTripResult r;
    r.program = program;
    r.status = Status::Fail;
    r.failure_stage = stage;
    return r;
}

}  // namespace

Summary summarize(std::span<const double> samples) {
    Summary s;
    if (samples.empty()) return s;
    s.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
    if (samples.size() < 2) return s;
    double sq = 0.0;
    for (double x : samples) sq += (x - s.mean) * (x - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(samples.size() - 1));
    return s;
}

std::vector<std::string> round_trip_hazards(const langpack::LanguagePack& pack) {
    std::set<std::string> english;
    for (const auto& row : pack.keywords)
        for (const auto& e : row.english) english.insert(e);

    std::vector<std::string> out;
    auto add = [&](const std::string& s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    for (const auto& row : pack.keywords) {
        for (std::size_t i = 1; i < row.english.size(); ++i) add(row.english[i]);
        if (langpack::is_python_keyword(row.local) || english.count(row.local) > 0) add(row.local);
    }
    return out;
}

std::string diff_excerpt(std::string_view expected, std::string_view actual, int context) {
    const auto a = split_lines(expected);
    const auto b = split_lines(actual);
    std::size_t first = 0;
    while (first < a.size() && first < b.size() && a[first] == b[first]) ++first;
    if (first == a.size() && first == b.size()) return {};

    std::ostringstream os;
    auto side = [&](const char* label, const std::vector<std::string_view>& lines) {
        os << label << " (from line " << (first + 1) << ")\n";
        for (std::size_t i = first; i < lines.size() && i < first + static_cast<std::size_t>(context); ++i) {
            os << "  " << lines[i] << '\n';
        }
        if (first >= lines.size()) os << "  <end of output>\n";
    };
    side("--- expected", a);
    side("+++ actual", b);
    return os.str();
}

RoundTripResult roundtrip_check(const std::filesystem::path& english_program,
                                const translator::Translator& translator,
                                const std::filesystem::path& interpreter) {
    const std::string original = io::read_file(english_program);
    const auto stdin_data = stdin_fixture(english_program);

    translator::TranslationResult local;
    try {
        local = translator.translate(original, Direction::Reverse);
    } catch (const Error& e) {
        auto r = fail(english_program, FailureStage::ReverseTranslation);
        r.detail = e.what();
        return r;
    }

    runner::RunOptions options;
    options.interpreter = interpreter;
    options.stdin_data = stdin_data;
    options.source_name = local_name(english_program, translator.pack().code);
    runner::RunReport localized;
    process::Result direct;
    try {
        localized = runner::run(local.output, translator, options);
        direct = process::run({{interpreter.string(), english_program.string()}, stdin_data});
    } catch (const Error& e) {
        auto r = fail(english_program, FailureStage::ExitMismatch);
        r.detail = e.what();
        return r;
    }

    RoundTripResult result;
    result.program = english_program;
    if (localized.stdout_text != direct.out) {
        result = fail(english_program, FailureStage::OutputMismatch);
        result.diff_excerpt = diff_excerpt(direct.out, localized.stdout_text);
    } else if (localized.exit_code != direct.exit_code) {
        result = fail(english_program, FailureStage::ExitMismatch);
        result.detail = "exit " + std::to_string(direct.exit_code) + " directly, " +
                        std::to_string(localized.exit_code) + " localized";
    } else if (localized.translated_source != original) {
        result = fail(english_program, FailureStage::ForwardTranslation);
        result.diff_excerpt = diff_excerpt(original, localized.translated_source);
    }
    if (result.status == Status::Fail) {
        result.attribution = find_hazard(original, round_trip_hazards(translator.pack()));
        if (!result.detail && !localized.stderr_text.empty()) {
            result.detail = localized.stderr_text.substr(0, 2000);
        }
    }
    return result;
}

CorpusReport corpus_run(const std::filesystem::path& dir, const translator::Translator& translator,
                        const std::filesystem::path& interpreter, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::filesystem::path> programs;
    std::error_code ec;
    for (auto it = std::filesystem::recursive_directory_iterator(dir, ec);
         !ec && it != std::filesystem::recursive_directory_iterator(); it.increment(ec)) {
        if (it->is_regular_file() && it->path().extension() == ".py") programs.push_back(it->path());
    }
    if (ec) throw IoError("cannot list corpus " + dir.string() + ": " + ec.message());
    if (programs.empty()) throw EmptyCorpus("no .py programs under " + dir.string());
    std::sort(programs.begin(), programs.end());

    CorpusReport report;
    report.results.resize(programs.size());
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(programs.size()));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < programs.size(); i = next++) {
            try {
                report.results[i] = roundtrip_check(programs[i], translator, interpreter);
            } catch (const Error& e) {
                auto r = fail(programs[i], FailureStage::ReverseTranslation);
                r.detail = e.what();
                report.results[i] = std::move(r);
            }
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    pool.clear();

    for (const auto& r : report.results) {
        ++report.total;
        if (r.status == Status::Pass) {
            ++report.passed;
        } else {
            ++report.failed;
            if (r.attribution) report.expected_failures.push_back(r.program);
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

BenchResult bench(const std::filesystem::path& english_program, const translator::Translator& translator,
                  const std::filesystem::path& interpreter, const BenchOptions& options) {
    if (options.runs < 3) throw std::invalid_argument("bench needs at least 3 runs");
    if (options.warmups < 0) throw std::invalid_argument("warmups must be non-negative");

    const std::string original = io::read_file(english_program);
    const auto stdin_data = stdin_fixture(english_program);
    const std::string local = translator.translate(original, Direction::Reverse).output;

    runner::RunOptions run_options;
    run_options.interpreter = interpreter;
    run_options.stdin_data = stdin_data;
    run_options.source_name = local_name(english_program, translator.pack().code);
    const process::Spec direct_spec{{interpreter.string(), english_program.string()}, stdin_data};

    auto time_direct = [&] { return process::run(direct_spec); };
    auto time_transpiled = [&] {
        const auto t0 = std::chrono::steady_clock::now();
        auto report = runner::run(local, translator, run_options);
        const double wall =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        return std::pair{std::move(report), wall};
    };

    if (const auto pre = time_direct(); pre.exit_code != 0) {
        throw PreflightFailure(english_program.string() + " exits with " + std::to_string(pre.exit_code));
    }
    if (const auto pre = time_transpiled(); pre.first.exit_code != 0) {
        throw PreflightFailure("localized " + english_program.string() + " exits with " +
                               std::to_string(pre.first.exit_code) + ":\n" + pre.first.stderr_text);
    }

    for (int i = 0; i < options.warmups; ++i) {
        time_direct();
        time_transpiled();
    }

    std::vector<double> direct, transpiled, translate;
    for (int i = 0; i < options.runs; ++i) {
        direct.push_back(time_direct().wall_ms);
        auto [report, wall] = time_transpiled();
        transpiled.push_back(wall);
        translate.push_back(report.timings.translate_ms);
    }

    BenchResult result;
    result.program = english_program;
    result.runs = options.runs;
    result.warmups = options.warmups;
    const auto d = summarize(direct);
    const auto t = summarize(transpiled);
    result.direct_mean_ms = d.mean;
    result.direct_stddev_ms = d.stddev;
    result.transpiled_mean_ms = t.mean;
    result.transpiled_stddev_ms = t.stddev;
    result.translate_mean_ms = summarize(translate).mean;
    return result;
}

std::string_view to_string(Status s) { return s == Status::Pass ? "PASS" : "FAIL"; }

std::string_view to_string(FailureStage s) {
    switch (s) {
        case FailureStage::ReverseTranslation: return "reverse_translation";
        case FailureStage::ForwardTranslation: return "forward_translation";
        case FailureStage::OutputMismatch: return "output_mismatch";
        case FailureStage::ExitMismatch: return "exit_mismatch";
    }
    return "?";
}

}  // namespace unipy::harness
