// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// Exit status is the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "test_support.hpp"
#include "unipy/harness.hpp"
#include "unipy/io.hpp"
#include "unipy/langpack.hpp"
#include "unipy/lexer.hpp"
#include "unipy/runner.hpp"
#include "unipy/translator.hpp"

namespace {

using namespace unipy;
using translator::Direction;
using translator::Translator;
using Clock = std::chrono::steady_clock;

constexpr double kCorpusMinPassRate = 0.98;
constexpr double kCorpusBudgetMs = 5 * 60 * 1000.0;
constexpr double kTableBudgetMs = 1000.0;
constexpr int kFuzzCases = 10'000;
constexpr int kBenchRuns = 10;
constexpr int kBenchWarmups = 3;
constexpr double kBenchNoiseFraction = 0.20;

struct Outcome {
    bool pass = true;
    std::ostringstream notes;

    void check(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes << "    violated: " << what << '\n';
        }
    }
};

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

const Translator& urdu() {
    static const Translator t(langpack::resolve_pack("ur"));
    return t;
}

std::filesystem::path python() {
    static const auto p = runner::resolve_interpreter();
    return p;
}

// The keyword table every localized front end starts from.
const std::vector<std::pair<std::string, std::string>>& keyword_table() {
    static const std::vector<std::pair<std::string, std::string>> rows = {
        {"لکھو", "print"}, {"اگر", "if"},       {"ورنہاگر", "elif"}, {"ورنہ", "else"},
        {"جب تک", "while"}, {"جو", "for"},       {"اندر", "in"},      {"داخلہ", "input"},
        {"ٹوڑ", "break"},   {"جاری", "continue"}, {"گزر", "pass"},     {"حق", "True"},
        {"باطل", "False"},
    };
    return rows;
}

void table_fidelity(Outcome& o) {
    const auto t0 = Clock::now();
    for (const auto& [local, english] : keyword_table()) {
        const std::string local_program = "x = 1\n" + local + "\n";
        const std::string english_program = "x = 1\n" + english + "\n";
        const auto there = urdu().translate(local_program, Direction::Forward).output;
        const auto back = urdu().translate(english_program, Direction::Reverse).output;
        o.check(there == english_program, local + " -> " + english + " (got " + there + ")");
        o.check(back == "x = ۱\n" + local + "\n", english + " -> " + local + " (got " + back + ")");
    }
    const double ms = ms_since(t0);
    o.check(ms < kTableBudgetMs, "table took " + std::to_string(ms) + " ms");
    o.notes << "    " << keyword_table().size() << " rows in " << ms << " ms\n";
}

void digits(Outcome& o) {
    const std::pair<const char*, const char*> cases[] = {
        {"۵", "5"}, {"۹۰", "90"}, {"۱۰", "10"}, {"۲۰۲۵", "2025"}};
    for (auto [local, ascii] : cases) {
        const auto got = urdu().translate(local, Direction::Forward).output;
        o.check(got == ascii, std::string(local) + " -> " + ascii + " (got " + got + ")");
    }
    // U+06F0..U+06F9, built here rather than read from the pack.
    std::vector<std::string> seen;
    for (int d = 0; d < 10; ++d) {
        const std::string local = {'\xDB', static_cast<char>(0xB0 + d)};
        const std::string ascii(1, static_cast<char>('0' + d));
        const auto there = urdu().translate(local, Direction::Forward).output;
        const auto back = urdu().translate(ascii, Direction::Reverse).output;
        o.check(there == ascii, "digit " + ascii + " forward");
        o.check(back == local, "digit " + ascii + " reverse");
        seen.push_back(there);
    }
    std::sort(seen.begin(), seen.end());
    o.check(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), "digit table is injective");
}

void walkthrough(Outcome& o) {
    const std::string src = "کچھ = ۲\nاگر کچھ == ۱:\n    لکھو(\"سلام دنیا\")\nورنہ:\n    لکھو(\"خدا حافظ\")\n";
    runner::RunOptions opts;
    opts.source_name = "walkthrough.ur.py";
    const auto r = runner::run(src, urdu(), opts);
    o.check(r.exit_code == 0, "exit code " + std::to_string(r.exit_code) + ": " + r.stderr_text);
    o.check(r.stdout_text == "خدا حافظ\n", "stdout was [" + r.stdout_text + "]");
    o.check(r.translated_source.find("\"سلام دنیا\"") != std::string::npos &&
                r.translated_source.find("\"خدا حافظ\"") != std::string::npos,
            "string literals preserved byte-for-byte");
}

void corpus_rate(Outcome& o) {
    const auto report = harness::corpus_run(testing::corpus_dir(), urdu(), python());
    o.notes << "    ur: PASS " << report.passed << " / FAIL " << report.failed << " of " << report.total
            << " in " << report.elapsed_ms / 1000.0 << " s\n";
    o.check(report.total >= 100, "corpus has " + std::to_string(report.total) + " programs");
    o.check(report.pass_rate() >= kCorpusMinPassRate, "pass rate " + std::to_string(report.pass_rate()));
    o.check(report.expected_failures.size() == static_cast<std::size_t>(report.failed),
            "every failure traced to a declared ambiguity");
    o.check(report.elapsed_ms < kCorpusBudgetMs, "runtime " + std::to_string(report.elapsed_ms) + " ms");
    for (const auto& r : report.results) {
        if (r.status == harness::Status::Fail) o.notes << "    failed: " << r.program.filename().string() << '\n';
    }
}

void ambiguity(Outcome& o) {
    const auto pack = langpack::parse_pack(testing::fixture("packs/ur_is_eq.yaml"));
    const auto report = langpack::validate_pack(pack);
    const langpack::InversionAmbiguity want{{"==", "is"}, {"ہے"}};
    const auto n = std::count(report.ambiguities.begin(), report.ambiguities.end(), want);
    o.check(n == 1, "validate_pack reports {[==, is], [ہے]} once");
    std::size_t touching_is = 0;
    for (const auto& a : report.ambiguities) {
        if (std::find(a.english.begin(), a.english.end(), "is") != a.english.end() ||
            std::find(a.english.begin(), a.english.end(), "==") != a.english.end()) {
            ++touching_is;
        }
    }
    o.check(touching_is == 1, "no other ambiguity mentions is or ==");

    const Translator conflated(pack);
    const auto r = harness::roundtrip_check(testing::fixture("ambiguous/identity_check.py"), conflated, python());
    o.check(r.status == harness::Status::Fail, "fixture program fails the round trip");
    o.check(r.attribution == "is", "failure attributed to `is`");

    const auto corpus = harness::corpus_run(testing::corpus_dir(), conflated, python());
    o.notes << "    conflated pack over the corpus: PASS " << corpus.passed << " / FAIL " << corpus.failed
            << ", " << corpus.expected_failures.size() << " attributed\n";
}

void pivot(Outcome& o) {
    const auto hi = Translator(langpack::resolve_pack("hi"));
    const auto src = io::read_file(testing::fixture("pivot.ur.py"));
    const auto hindi = translator::pivot(src, urdu(), hi).output;
    const auto english = urdu().translate(src, Direction::Forward).output;

    runner::RunOptions ur_opts;
    ur_opts.source_name = "pivot.ur.py";
    runner::RunOptions hi_opts;
    hi_opts.source_name = "pivot.hi.py";
    const auto ur_run = runner::run(src, urdu(), ur_opts);
    const auto hi_run = runner::run(hindi, hi, hi_opts);
    const auto en_run = process::run({{python().string(), "-c", english}});

    o.check(ur_run.exit_code == 0 && hi_run.exit_code == 0 && en_run.exit_code == 0, "all three variants exit 0");
    o.check(!ur_run.stdout_text.empty(), "program prints something");
    o.check(ur_run.stdout_text == en_run.out, "ur and en stdout match");
    o.check(hi_run.stdout_text == en_run.out, "hi and en stdout match");
    o.check(hindi.find("अगर") != std::string::npos, "hindi output uses hindi keywords");
}

void properties(Outcome& o) {
    // (a) lossless lexing
    testing::SourceFuzzer fuzz(0xC0FFEE);
    std::mt19937 bytes_rng(17);
    int lossy = 0;
    for (int i = 0; i < kFuzzCases; ++i) {
        std::string s = fuzz.next();
        if (i % 4 == 0) {
            std::uniform_int_distribution<int> byte(0, 255);
            for (int k = 0; k < 12; ++k) s += static_cast<char>(byte(bytes_rng));
        }
        if (lexer::concat(lexer::tokenize(s)) != s) ++lossy;
    }
    o.check(lossy == 0, std::to_string(lossy) + " lossy inputs of " + std::to_string(kFuzzCases));

    // (b) empty pack and (c) line counts over the corpus
    const Translator none(langpack::load_pack_text("code: en\nname: English\nkeywords: {}\n"));
    int identity_violations = 0, line_violations = 0, programs = 0;
    for (const auto& path : testing::corpus_programs()) {
        ++programs;
        const auto src = io::read_file(path);
        if (none.translate(src, Direction::Forward).output != src ||
            none.translate(src, Direction::Reverse).output != src) {
            ++identity_violations;
        }
        const auto local = urdu().translate(src, Direction::Reverse).output;
        const auto english = urdu().translate(local, Direction::Forward).output;
        const auto lines = testing::count_lines(src);
        if (testing::count_lines(local) != lines || testing::count_lines(english) != lines) ++line_violations;
    }
    o.check(identity_violations == 0, std::to_string(identity_violations) + " empty-pack identity violations");
    o.check(line_violations == 0, std::to_string(line_violations) + " line-count violations");

    // (d) keywords inside literals and comments survive untouched
    std::vector<std::string> keys;
    for (const auto& row : urdu().pack().keywords) keys.push_back(row.local);
    std::mt19937 rng(2025);
    std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
    std::uniform_int_distribution<int> count(1, 4);
    const char* quotes[] = {"\"", "'", "\"\"\"", "'''"};
    int opacity_violations = 0;
    for (int i = 0; i < 2000; ++i) {
        std::vector<std::string> literals;
        std::string program;
        for (int stmt = count(rng); stmt > 0; --stmt) {
            std::string body;
            for (int w = count(rng); w > 0; --w) body += keys[pick(rng)] + " ۲ ";
            const std::string q = quotes[pick(rng) % 4];
            literals.push_back(q + body + q);
            literals.push_back("# " + keys[pick(rng)] + " ۳");
            program += keys[pick(rng)] + "(" + literals[literals.size() - 2] + ")  " + literals.back() + "\n";
        }
        const auto out = urdu().translate(program, Direction::Forward).output;
        std::size_t from = 0;
        for (const auto& lit : literals) {
            const auto at = out.find(lit, from);
            if (at == std::string::npos) {
                ++opacity_violations;
                break;
            }
            from = at + lit.size();
        }
    }
    o.check(opacity_violations == 0, std::to_string(opacity_violations) + " opacity violations");
    o.notes << "    " << kFuzzCases << " lexer inputs, " << programs << " corpus programs, 2000 opacity programs\n";
}

void bench(Outcome& o) {
    harness::BenchOptions opts;
    opts.runs = kBenchRuns;
    opts.warmups = kBenchWarmups;
    const auto r = harness::bench(testing::corpus_dir() / "maths" / "prime_sieve_benchmark.py", urdu(), python(), opts);
    const double overhead = r.transpiled_mean_ms - r.direct_mean_ms;
    const double allowance = r.translate_mean_ms + kBenchNoiseFraction * r.direct_mean_ms;
    o.notes << "    direct " << r.direct_mean_ms << " ms (sd " << r.direct_stddev_ms << "), transpiled "
            << r.transpiled_mean_ms << " ms (sd " << r.transpiled_stddev_ms << "), translate "
            << r.translate_mean_ms << " ms\n";
    o.check(r.direct_mean_ms > 100.0, "program is compute-bound (direct mean > 100 ms)");
    o.check(overhead <= allowance,
            "overhead " + std::to_string(overhead) + " ms exceeds " + std::to_string(allowance) + " ms");
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
        {"keyword table fidelity", table_fidelity},
        {"digit translation", digits},
        {"walkthrough end-to-end", walkthrough},
        {"corpus round-trip rate", corpus_rate},
        {"ambiguity reproduction", ambiguity},
        {"pivot ur -> hi", pivot},
        {"property suite", properties},
        {"benchmark sanity", bench},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        const auto t0 = Clock::now();
        try {
            fn(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes << "    error: " << e.what() << '\n';
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << static_cast<long>(ms_since(t0))
                  << " ms)\n"
                  << o.notes.str() << std::flush;
    }
    std::cout << (failed == 0 ? "all criteria met" : std::to_string(failed) + " criteria failed") << '\n';
    return failed;
}
