#include <gtest/gtest.h>

#include <cstdlib>

#include "test_support.hpp"
#include "unipy/error.hpp"
#include "unipy/io.hpp"
#include "unipy/langpack.hpp"
#include "unipy/runner.hpp"

using namespace unipy::runner;
using unipy::translator::Translator;

namespace {

const Translator& urdu() {
    static const Translator t(unipy::langpack::resolve_pack("ur"));
    return t;
}

}  // namespace

TEST(Runner, PrintsLocalizedNumber) {
    const auto r = run("لکھو(۲)", urdu());
    EXPECT_EQ(r.stdout_text, "2\n");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.translated_source, "print(2)");
}

TEST(Runner, WalkthroughProgram) {
    const auto src = unipy::io::read_file(unipy::testing::fixture("hello.ur.py"));
    const auto r = run(src, urdu());
    EXPECT_EQ(r.stdout_text, "خدا حافظ\n");
}

TEST(Runner, EmptySourceRunsCleanly) {
    const auto r = run("", urdu());
    EXPECT_EQ(r.stdout_text, "");
    EXPECT_EQ(r.exit_code, 0);
}

TEST(Runner, ChildExitCodeIsReported) {
    const auto r = run("درآمد sys\nsys۔exit(۳)", urdu());
    EXPECT_EQ(r.exit_code, 3);
}

TEST(Runner, StdoutIsVerbatim) {
    const auto r = run("لکھو('if x in y: print')", urdu());
    EXPECT_EQ(r.stdout_text, "if x in y: print\n");
}

TEST(Runner, StdinIsForwarded) {
    RunOptions opts;
    opts.stdin_data = "41\n";
    const auto r = run("لکھو(int(داخلہ()) + ۱)", urdu(), opts);
    EXPECT_EQ(r.stdout_text, "42\n");
}

TEST(Runner, ArgumentsReachTheProgram) {
    RunOptions opts;
    opts.args = {"alpha", "beta"};
    const auto r = run("درآمد sys\nلکھو(sys۔argv[۱:])", urdu(), opts);
    EXPECT_EQ(r.stdout_text, "['alpha', 'beta']\n");
}

TEST(Runner, ErrorsAreBackTranslatedAndNameTheSource) {
    RunOptions opts;
    opts.source_name = "demo.ur.py";
    const auto r = run("اگر باطل:\n    گزر\nلکھو(undefined_name)", urdu(), opts);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.stderr_text.find("demo.ur.py"), std::string::npos) << r.stderr_text;
    EXPECT_NE(r.stderr_text.find("اندر <module>"), std::string::npos) << r.stderr_text;
    EXPECT_EQ(r.stderr_text.find("unipy-"), std::string::npos) << r.stderr_text;
}

TEST(Runner, KeepsArtifactOnRequest) {
    RunOptions opts;
    opts.keep_artifacts = true;
    opts.source_name = "walk.ur.py";
    const auto r = run("لکھو(۱)", urdu(), opts);
    ASSERT_TRUE(r.artifact.has_value());
    EXPECT_EQ(r.artifact->filename(), "walk.translated.py");
    EXPECT_EQ(unipy::io::read_file(*r.artifact), "print(1)");
    std::filesystem::remove_all(r.artifact->parent_path());
}

TEST(Runner, MissingInterpreter) {
    RunOptions opts;
    opts.interpreter = "/nonexistent/python9";
    EXPECT_THROW(run("لکھو(۱)", urdu(), opts), unipy::InterpreterNotFound);
}

TEST(Runner, InterpreterFromEnvironment) {
    const char* old = std::getenv("UNIPY_PYTHON");
    std::optional<std::string> saved = old ? std::optional<std::string>(old) : std::nullopt;
    ::setenv("UNIPY_PYTHON", "/nonexistent/python9", 1);
    EXPECT_THROW(resolve_interpreter(), unipy::InterpreterNotFound);
    ::setenv("UNIPY_PYTHON", "python3", 1);
    EXPECT_EQ(resolve_interpreter().filename(), "python3");
    if (saved) ::setenv("UNIPY_PYTHON", saved->c_str(), 1);
    else ::unsetenv("UNIPY_PYTHON");
}

TEST(BackTranslate, WholeWordsOnly) {
    const auto& rev = urdu().reverse_pack();
    EXPECT_EQ(back_translate_output("if", rev), "اگر");
    EXPECT_EQ(back_translate_output("myelif", rev), "myelif");
    EXPECT_EQ(back_translate_output("line 3, in <module>", rev), "line 3, اندر <module>");
    EXPECT_EQ(back_translate_output("File \"/tmp/in/print.py\"", rev), "File \"/tmp/in/print.py\"");
    EXPECT_EQ(back_translate_output("", rev), "");
}

TEST(BackTranslate, EmptyPackIsIdentity) {
    const auto pack = unipy::langpack::load_pack_text("code: en\nkeywords: {}\n");
    EXPECT_EQ(back_translate_output("if x in y", pack), "if x in y");
}

TEST(Runner, ArtifactNames) {
    EXPECT_EQ(artifact_name("dir/hello.ur.py", "ur"), "hello.translated.py");
    EXPECT_EQ(artifact_name("-", "ur"), "program.translated.py");
    EXPECT_EQ(artifact_name("<stdin>", "ur"), "program.translated.py");
    EXPECT_EQ(artifact_name("notes.txt", "hi"), "notes.txt.translated.py");
}
