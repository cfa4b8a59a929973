#include "unipy/runner.hpp"

#include <stdlib.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <unordered_map>

#include "unipy/error.hpp"
#include "unipy/lexer.hpp"
#include "unipy/process.hpp"
#include "unipy/unicode.hpp"

namespace unipy::runner {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Owns a private temp directory; removes it unless released.
class ScratchDir {
public:
    ScratchDir() {
        std::string pattern = (std::filesystem::temp_directory_path() / "unipy-XXXXXX").string();
        if (::mkdtemp(pattern.data()) == nullptr) throw IoError("cannot create temporary directory");
        path_ = pattern;
    }
    ScratchDir(const ScratchDir&) = delete;
    ScratchDir& operator=(const ScratchDir&) = delete;
    ~ScratchDir() {
        if (!keep_) {
            std::error_code ec;
            std::filesystem::remove_all(path_, ec);
        }
    }

    const std::filesystem::path& path() const { return path_; }
    void keep() { keep_ = true; }

private:
    std::filesystem::path path_;
    bool keep_ = false;
};

void replace_all(std::string& text, std::string_view from, std::string_view to) {
    if (from.empty()) return;
    for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos + to.size())) {
        text.replace(pos, from.size(), to);
    }
}

}  // namespace

std::filesystem::path resolve_interpreter(const std::optional<std::filesystem::path>& explicit_path) {
    if (explicit_path && !explicit_path->empty()) {
        if (auto found = process::find_executable(explicit_path->string())) return *found;
        throw InterpreterNotFound("interpreter not found: " + explicit_path->string());
    }
    if (const char* env = std::getenv("UNIPY_PYTHON"); env != nullptr && *env != '\0') {
        if (auto found = process::find_executable(env)) return *found;
        throw InterpreterNotFound(std::string("interpreter from UNIPY_PYTHON not found: ") + env);
    }
    for (const char* name : {"python3", "python"}) {
        if (auto found = process::find_executable(name)) return *found;
    }
    throw InterpreterNotFound("no python3 or python on PATH; pass --interpreter or set UNIPY_PYTHON");
}

std::string artifact_name(std::string_view source_name, std::string_view pack_code) {
    std::string stem = std::filesystem::path(std::string(source_name)).filename().string();
    if (stem.ends_with(".py")) stem.resize(stem.size() - 3);
    const std::string lang_ext = "." + std::string(pack_code);
    if (!pack_code.empty() && stem.ends_with(lang_ext)) stem.resize(stem.size() - lang_ext.size());
    if (stem.empty() || stem == "-" || stem.front() == '<') stem = "program";
    return stem + ".translated.py";
}

RunReport run(std::string_view source, const translator::Translator& translator, const RunOptions& options) {
    const auto interpreter = resolve_interpreter(options.interpreter);

    RunReport report;
    const auto t0 = Clock::now();
    auto translated = translator.translate(source, translator::Direction::Forward, options.translate);
    ScratchDir scratch;
    const auto script = scratch.path() / artifact_name(options.source_name, translator.pack().code);
    {
        std::ofstream out(script, std::ios::binary);
        out << translated.output;
        if (!out) throw IoError("cannot write " + script.string());
    }
    report.timings.translate_ms = ms_since(t0);
    report.translated_source = std::move(translated.output);
    report.warnings = std::move(translated.warnings);

    process::Spec spec;
    spec.argv = {interpreter.string(), script.string()};
    spec.argv.insert(spec.argv.end(), options.args.begin(), options.args.end());
    spec.stdin_data = options.stdin_data;
    spec.inherit_stdin = options.inherit_stdin;
    spec.capture_stdout = !options.stream_stdout;
    auto child = process::run(spec);

    report.timings.execute_ms = child.wall_ms;
    report.exit_code = child.exit_code;
    report.stdout_text = std::move(child.out);
    replace_all(child.err, script.string(), options.source_name);
    report.stderr_text = back_translate_output(child.err, translator.reverse_pack());

    if (options.keep_artifacts) {
        scratch.keep();
        report.artifact = script;
    }
    return report;
}

RunReport run(std::string_view source, const langpack::LanguagePack& pack, const RunOptions& options) {
    return run(source, translator::Translator(pack), options);
}

std::string back_translate_output(std::string_view text, const langpack::ReversePack& reverse) {
    std::unordered_map<std::string, std::string> words;
    for (const auto& entry : reverse.keywords) {
        const auto tokens = lexer::tokenize(entry.english);
        if (tokens.size() == 1 && tokens.front().kind == lexer::TokenKind::Word) {
            words.emplace(entry.english, entry.local);
        }
    }
    if (words.empty()) return std::string(text);

    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        // whitespace-delimited chunk
        std::size_t end = pos;
        while (end < text.size() && text[end] != ' ' && text[end] != '\t' && text[end] != '\n' &&
               text[end] != '\r') {
            ++end;
        }
        const std::string_view chunk = text.substr(pos, end - pos);
        if (chunk.find('/') != std::string_view::npos || chunk.find('\\') != std::string_view::npos) {
            out += chunk;
        } else {
            for (std::size_t i = 0; i < chunk.size();) {
                const auto d = unicode::decode(chunk, i);
                if (!d.valid || !unicode::is_identifier_char(d.cp)) {
                    out += chunk.substr(i, d.length);
                    i += d.length;
                    continue;
                }
                std::size_t j = i;
                while (j < chunk.size()) {
                    const auto n = unicode::decode(chunk, j);
                    if (!n.valid || !unicode::is_identifier_char(n.cp)) break;
                    j += n.length;
                }
                const std::string word(chunk.substr(i, j - i));
                if (auto it = words.find(word); it != words.end()) out += it->second;
                else out += word;
                i = j;
            }
        }
        if (end < text.size()) out += text[end++];
        pos = end;
    }
    return out;
}

std::string back_translate_output(std::string_view text, const langpack::LanguagePack& pack) {
    return back_translate_output(text, langpack::invert_pack(pack));
}

}  // namespace unipy::runner
