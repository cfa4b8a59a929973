#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"
#include "unipy/error.hpp"
#include "unipy/harness.hpp"
#include "unipy/io.hpp"
#include "unipy/langpack.hpp"
#include "unipy/runner.hpp"

using namespace unipy::harness;
using unipy::testing::fixture;
using unipy::translator::Translator;

namespace {

const Translator& urdu() {
    static const Translator t(unipy::langpack::resolve_pack("ur"));
    return t;
}

const Translator& conflated() {
    static const Translator t(unipy::langpack::parse_pack(fixture("packs/ur_is_eq.yaml")));
    return t;
}

std::filesystem::path python() { return unipy::runner::resolve_interpreter(); }

}  // namespace

TEST(Harness, RoundTripPasses) {
    const auto r = roundtrip_check(fixture("mini_corpus/square.py"), urdu(), python());
    EXPECT_EQ(r.status, Status::Pass);
    EXPECT_FALSE(r.failure_stage.has_value());
}

TEST(Harness, StdinFixtureIsUsed) {
    const auto r = roundtrip_check(fixture("mini_corpus/grade_calculator.py"), urdu(), python());
    EXPECT_EQ(r.status, Status::Pass) << r.detail.value_or("");
}

TEST(Harness, IdentityConflationFails) {
    const auto r = roundtrip_check(fixture("ambiguous/identity_check.py"), conflated(), python());
    EXPECT_EQ(r.status, Status::Fail);
    EXPECT_EQ(r.failure_stage, FailureStage::OutputMismatch);
    EXPECT_EQ(r.attribution, "is");
    ASSERT_TRUE(r.diff_excerpt.has_value());
    EXPECT_NE(r.diff_excerpt->find("False"), std::string::npos);
}

TEST(Harness, SameProgramPassesUnderCleanPack) {
    const auto r = roundtrip_check(fixture("ambiguous/identity_check.py"), urdu(), python());
    EXPECT_EQ(r.status, Status::Pass);
}

TEST(Harness, EmptyProgramPasses) {
    const auto dir = std::filesystem::temp_directory_path() / "unipy-empty-program";
    std::filesystem::create_directories(dir);
    unipy::io::write_file(dir / "empty.py", "");
    const auto r = roundtrip_check(dir / "empty.py", urdu(), python());
    EXPECT_EQ(r.status, Status::Pass);
    const auto report = corpus_run(dir, urdu(), python(), 1);
    EXPECT_EQ(report.total, 1);
    EXPECT_EQ(report.passed, 1);
    std::filesystem::remove_all(dir);
}

TEST(Harness, CorpusRunCountsAndOrders) {
    const auto report = corpus_run(fixture("mini_corpus"), urdu(), python(), 2);
    EXPECT_EQ(report.total, 2);
    EXPECT_EQ(report.passed, 2);
    EXPECT_DOUBLE_EQ(report.pass_rate(), 1.0);
    EXPECT_TRUE(std::is_sorted(report.results.begin(), report.results.end(),
                               [](const auto& a, const auto& b) { return a.program < b.program; }));
}

TEST(Harness, AmbiguityFailuresAreExpected) {
    const auto report = corpus_run(fixture("ambiguous"), conflated(), python(), 1);
    EXPECT_EQ(report.failed, 1);
    ASSERT_EQ(report.expected_failures.size(), 1u);
    EXPECT_EQ(report.expected_failures[0].filename(), "identity_check.py");
}

TEST(Harness, EmptyCorpusThrows) {
    const auto dir = std::filesystem::temp_directory_path() / "unipy-no-programs";
    std::filesystem::create_directories(dir);
    EXPECT_THROW(corpus_run(dir, urdu(), python()), unipy::EmptyCorpus);
    std::filesystem::remove_all(dir);
}

TEST(Harness, HazardsOfConflatedPack) {
    const auto hazards = round_trip_hazards(conflated().pack());
    EXPECT_EQ(hazards, std::vector<std::string>{"is"});
    EXPECT_TRUE(round_trip_hazards(urdu().pack()).empty());
}

TEST(Harness, BenchReportsEveryRun) {
    BenchOptions opts;
    opts.runs = 3;
    opts.warmups = 0;
    const auto r = bench(fixture("mini_corpus/square.py"), urdu(), python(), opts);
    EXPECT_EQ(r.runs, 3);
    EXPECT_GT(r.direct_mean_ms, 0.0);
    EXPECT_GT(r.transpiled_mean_ms, 0.0);
    EXPECT_GE(r.translate_mean_ms, 0.0);
    EXPECT_THROW(bench(fixture("mini_corpus/square.py"), urdu(), python(), {2, 0}), std::invalid_argument);
}

TEST(Harness, BenchPreflightCatchesFailingPrograms) {
    const auto dir = std::filesystem::temp_directory_path() / "unipy-bench-fail";
    std::filesystem::create_directories(dir);
    unipy::io::write_file(dir / "boom.py", "raise SystemExit(4)\n");
    EXPECT_THROW(bench(dir / "boom.py", urdu(), python(), {3, 0}), unipy::PreflightFailure);
    std::filesystem::remove_all(dir);
}

TEST(Harness, SummaryUsesSampleDeviation) {
    const std::vector<double> xs = {2, 4, 4, 4, 5, 5, 7, 9};
    const auto s = summarize(xs);
    EXPECT_DOUBLE_EQ(s.mean, 5.0);
    EXPECT_NEAR(s.stddev, 2.138089935, 1e-9);  // sqrt(32 / 7)
    EXPECT_EQ(summarize(std::vector<double>{3.0}).stddev, 0.0);
}

TEST(Harness, DiffExcerpt) {
    EXPECT_EQ(diff_excerpt("a\nb\n", "a\nb\n"), "");
    const auto d = diff_excerpt("a\nb\nc\n", "a\nx\n");
    EXPECT_NE(d.find("from line 2"), std::string::npos);
    EXPECT_NE(d.find("  b"), std::string::npos);
    EXPECT_NE(d.find("  x"), std::string::npos);
}
