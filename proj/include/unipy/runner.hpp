#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "unipy/diagnostic.hpp"
#include "unipy/langpack.hpp"
#include "unipy/translator.hpp"

namespace unipy::runner {

struct RunOptions {
    /// Explicit interpreter; see resolve_interpreter for the fallback order.
    std::optional<std::filesystem::path> interpreter;
    std::vector<std::string> args;          // appended after the script path
    std::optional<std::string> stdin_data;  // piped to the child when set
    bool inherit_stdin = false;             // used when stdin_data is empty
    bool stream_stdout = false;             // child writes straight to our stdout
    bool keep_artifacts = false;
    /// Name of the localized program; drives the temp file stem and replaces
    /// the temp path in the child's error output.
    std::string source_name = "program.py";
    translator::TranslateOptions translate;
};

struct Timings {
    double translate_ms = 0.0;  // translation plus writing the temp file
    double execute_ms = 0.0;    // spawn to exit
};

struct RunReport {
    std::string stdout_text;  // verbatim; empty when streamed
    std::string stderr_text;  // keywords back-translated
    int exit_code = 0;
    std::string translated_source;
    Timings timings;
    std::vector<Diagnostic> warnings;
    std::optional<std::filesystem::path> artifact;  // set when keep_artifacts
};

/// Explicit path, then $UNIPY_PYTHON, then `python3`, then `python` on PATH.
/// Throws InterpreterNotFound.
std::filesystem::path resolve_interpreter(const std::optional<std::filesystem::path>& explicit_path = {});

/// Translates forward, executes under the interpreter, and back-translates
/// stderr. A nonzero child exit is reported, not thrown. Throws
/// InterpreterNotFound, SpawnError, IoError, or PackError.
RunReport run(std::string_view source, const translator::Translator& translator, const RunOptions& options = {});
RunReport run(std::string_view source, const langpack::LanguagePack& pack, const RunOptions& options = {});

/// Replaces English keywords that stand alone as words with their local
/// forms. Path-like chunks (containing '/' or '\') are left alone, as are
/// digits and punctuation.
std::string back_translate_output(std::string_view text, const langpack::ReversePack& reverse);
std::string back_translate_output(std::string_view text, const langpack::LanguagePack& pack);

/// "<stem>.translated.py" for a program name such as "dir/hello.ur.py".
std::string artifact_name(std::string_view source_name, std::string_view pack_code);

}  // namespace unipy::runner
