// unipy: translate, run, and evaluate localized Python programs.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "unipy/error.hpp"
#include "unipy/harness.hpp"
#include "unipy/io.hpp"
#include "unipy/langpack.hpp"
#include "unipy/report.hpp"
#include "unipy/runner.hpp"
#include "unipy/translator.hpp"

namespace {

using namespace unipy;
namespace fs = std::filesystem;

constexpr int kUsageError = 2;
constexpr int kToolError = 1;

struct Config {
    std::string language;
    std::string to_language;
    bool reverse = false;
    bool translate_identifiers = false;
    std::string output;
    std::string interpreter;
    bool json = false;
    bool keep_artifacts = false;
    bool verbose = false;
    bool error_text = false;
    std::string input = "-";
    std::vector<std::string> inputs;
    std::vector<std::string> child_args;
    int runs = 10;
    int warmups = 3;
    unsigned jobs = 0;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SourceText {
    std::string text;
    bool had_bom = false;
    std::string name;
};

SourceText read_source(const std::string& path) {
    SourceText src;
    if (path == "-") {
        src.text.assign(std::istreambuf_iterator<char>(std::cin), {});
        src.name = "<stdin>";
    } else {
        src.text = io::read_file(path);
        src.name = path;
    }
    src.had_bom = io::strip_bom(src.text);
    return src;
}

void write_output(const Config& cfg, std::string_view text) {
    if (cfg.output.empty() || cfg.output == "-") {
        std::cout << text;
        std::cout.flush();
    } else {
        io::write_file(cfg.output, text);
    }
}

void print_json(const nlohmann::json& doc) { std::cout << report::document(doc).dump(2) << '\n'; }

// `name.<code>.py` names its language when --language is omitted.
std::string language_for(const Config& cfg, const std::string& file) {
    if (!cfg.language.empty()) return cfg.language;
    const fs::path p(file);
    if (p.extension() == ".py") {
        const std::string inner = p.stem().extension().string();
        if (inner.size() > 1) {
            const std::string code = inner.substr(1);
            for (const auto& known : langpack::available_pack_codes()) {
                if (known == code) return code;
            }
        }
    }
    throw UsageError("--language is required (could not infer it from \"" + file + "\")");
}

void report_warnings(const Config& cfg, const std::string& name, const std::vector<Diagnostic>& warnings) {
    for (const auto& w : warnings) {
        if (w.kind == DiagnosticKind::OpaqueKeySkip && !cfg.verbose) continue;
        std::cerr << "unipy: warning: " << name << ':' << format(w) << '\n';
    }
}

std::optional<fs::path> interpreter_flag(const Config& cfg) {
    if (cfg.interpreter.empty()) return std::nullopt;
    return fs::path(cfg.interpreter);
}

int cmd_translate(const Config& cfg) {
    if (cfg.reverse && !cfg.to_language.empty()) throw UsageError("--reverse and --to are mutually exclusive");
    const auto src = read_source(cfg.input);
    const auto pack = langpack::resolve_pack(language_for(cfg, src.name));

    if (cfg.error_text) {
        const auto text = runner::back_translate_output(src.text, pack);
        if (cfg.json) print_json({{"output", text}});
        else write_output(cfg, text);
        return 0;
    }

    translator::TranslationResult result;
    if (!cfg.to_language.empty()) {
        result = translator::pivot(src.text, pack, langpack::resolve_pack(cfg.to_language));
    } else {
        const auto direction = cfg.reverse ? translator::Direction::Reverse : translator::Direction::Forward;
        result = translator::translate(src.text, pack, direction, cfg.translate_identifiers);
    }
    report_warnings(cfg, src.name, result.warnings);
    if (src.had_bom) result.output.insert(0, io::kUtf8Bom);
    if (cfg.json) {
        auto doc = report::to_json(result);
        doc["language"] = pack.code;
        doc["direction"] = !cfg.to_language.empty() ? "pivot" : (cfg.reverse ? "reverse" : "forward");
        print_json(doc);
    } else {
        write_output(cfg, result.output);
    }
    return 0;
}

int cmd_pivot(const Config& cfg) {
    if (cfg.to_language.empty()) throw UsageError("pivot needs --to");
    return cmd_translate(cfg);
}

int cmd_run(const Config& cfg) {
    const auto src = read_source(cfg.input);
    const translator::Translator tr(langpack::resolve_pack(language_for(cfg, src.name)));

    runner::RunOptions options;
    options.interpreter = interpreter_flag(cfg);
    options.args = cfg.child_args;
    options.inherit_stdin = cfg.input != "-";
    options.stream_stdout = !cfg.json;
    options.keep_artifacts = cfg.keep_artifacts;
    options.source_name = src.name;
    options.translate.translate_identifiers = cfg.translate_identifiers;

    const auto rep = runner::run(src.text, tr, options);
    report_warnings(cfg, src.name, rep.warnings);
    if (rep.artifact) std::cerr << "unipy: kept " << rep.artifact->string() << '\n';
    if (cfg.json) {
        print_json(report::to_json(rep));
    } else {
        std::cerr << rep.stderr_text;
    }
    return rep.exit_code;
}

int cmd_validate(const Config& cfg) {
    if (cfg.language.empty()) throw UsageError("validate needs --language (a pack code or file)");
    const auto pack = langpack::resolve_pack_unchecked(cfg.language);
    const auto rep = langpack::validate_pack(pack);
    if (cfg.json) {
        auto doc = report::to_json(rep);
        doc["language"] = pack.code;
        print_json(doc);
    } else {
        std::cout << report::render(rep, pack);
    }
    return rep.usable() ? 0 : kToolError;
}

int cmd_roundtrip(const Config& cfg) {
    if (cfg.language.empty()) throw UsageError("roundtrip needs --language");
    const translator::Translator tr(langpack::resolve_pack(cfg.language));
    const auto interpreter = runner::resolve_interpreter(interpreter_flag(cfg));

    nlohmann::json results = nlohmann::json::array();
    bool ok = true;
    for (const auto& program : cfg.inputs) {
        const auto r = harness::roundtrip_check(program, tr, interpreter);
        if (r.status == harness::Status::Fail && !r.attribution) ok = false;
        if (cfg.json) results.push_back(report::to_json(r));
        else std::cout << report::render(r);
    }
    if (cfg.json) print_json({{"results", results}});
    return ok ? 0 : kToolError;
}

int cmd_corpus(const Config& cfg) {
    if (cfg.language.empty()) throw UsageError("corpus needs --language");
    const translator::Translator tr(langpack::resolve_pack(cfg.language));
    const auto interpreter = runner::resolve_interpreter(interpreter_flag(cfg));
    const auto rep = harness::corpus_run(cfg.input, tr, interpreter, cfg.jobs);
    if (cfg.json) print_json(report::to_json(rep));
    else std::cout << report::render(rep);
    const auto unexpected = rep.failed - static_cast<int>(rep.expected_failures.size());
    return unexpected == 0 ? 0 : kToolError;
}

int cmd_bench(const Config& cfg) {
    if (cfg.language.empty()) throw UsageError("bench needs --language");
    if (cfg.runs < 3) throw UsageError("--runs must be at least 3");
    if (cfg.warmups < 0) throw UsageError("--warmups must be non-negative");
    const translator::Translator tr(langpack::resolve_pack(cfg.language));
    const auto interpreter = runner::resolve_interpreter(interpreter_flag(cfg));
    const auto rep = harness::bench(cfg.input, tr, interpreter, {cfg.runs, cfg.warmups});
    if (cfg.json) print_json(report::to_json(rep));
    else std::cout << report::render(rep);
    return 0;
}

int cmd_packs(const Config& cfg) {
    if (!cfg.language.empty()) {
        const auto pack = langpack::resolve_pack(cfg.language);
        if (cfg.json) {
            print_json(report::to_json(pack));
        } else {
            std::cout << pack.code << "  " << pack.name << "  " << langpack::to_string(pack.direction) << '\n';
            for (const auto& k : pack.keywords) {
                std::cout << "  " << k.local << " -> ";
                for (std::size_t i = 0; i < k.english.size(); ++i) std::cout << (i ? ", " : "") << k.english[i];
                std::cout << '\n';
            }
        }
        return 0;
    }
    nlohmann::json list = nlohmann::json::array();
    for (const auto& code : langpack::available_pack_codes()) {
        const auto pack = langpack::resolve_pack_unchecked(code);
        if (cfg.json) {
            list.push_back({{"code", pack.code},
                            {"name", pack.name},
                            {"direction", langpack::to_string(pack.direction)},
                            {"keywords", pack.keywords.size()}});
        } else {
            std::cout << pack.code << "  " << pack.name << "  (" << pack.keywords.size() << " keywords)\n";
        }
    }
    if (cfg.json) print_json({{"packs", list}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"unipy - write Python in your own language"};
    app.require_subcommand(1);

    auto add_language = [&](CLI::App* sub, const char* help) {
        sub->add_option("-l,--language", cfg.language, help);
    };
    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", cfg.json, "Emit a machine-readable JSON report");
    };
    auto add_interpreter = [&](CLI::App* sub) {
        sub->add_option("--interpreter", cfg.interpreter,
                        "Python interpreter (default: $UNIPY_PYTHON, then python3, then python)");
    };

    auto* run = app.add_subcommand("run", "Translate a localized program and execute it");
    add_language(run, "Pack code or pack file (default: from a name.<code>.py file name)");
    add_interpreter(run);
    add_json(run);
    run->add_flag("--keep-artifacts", cfg.keep_artifacts, "Keep the translated temporary file");
    run->add_flag("--translate-identifiers", cfg.translate_identifiers, "Romanize non-ASCII identifiers");
    run->add_flag("-v,--verbose", cfg.verbose, "Also report keywords skipped inside strings and comments");
    run->add_option("program", cfg.input, "Localized program ('-' for stdin)")->required();
    run->add_option("args", cfg.child_args, "Arguments passed to the program (after --)");

    auto* translate = app.add_subcommand("translate", "Translate between a local language and English");
    add_language(translate, "Pack code or pack file");
    add_json(translate);
    auto* reverse_opt = translate->add_flag("-r,--reverse", cfg.reverse, "English to the local language");
    auto* to_opt = translate->add_option("--to", cfg.to_language, "Pivot to this language through English");
    reverse_opt->excludes(to_opt);
    translate->add_flag("--translate-identifiers", cfg.translate_identifiers, "Romanize non-ASCII identifiers");
    translate->add_flag("--error-text", cfg.error_text,
                        "Input is interpreter error output; localize its keywords");
    translate->add_flag("-v,--verbose", cfg.verbose, "Also report keywords skipped inside strings and comments");
    translate->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
    translate->add_option("file", cfg.input, "Input file ('-' or omitted for stdin)");

    auto* pivot = app.add_subcommand("pivot", "Translate between two local languages through English");
    add_language(pivot, "Source pack code or file");
    pivot->add_option("--to", cfg.to_language, "Target pack code or file")->required();
    add_json(pivot);
    pivot->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
    pivot->add_option("file", cfg.input, "Input file ('-' or omitted for stdin)");

    auto* validate = app.add_subcommand("validate", "Check a language pack");
    add_language(validate, "Pack code or pack file");
    add_json(validate);

    auto* roundtrip = app.add_subcommand("roundtrip", "Round-trip English programs through a language");
    add_language(roundtrip, "Pack code or pack file");
    add_interpreter(roundtrip);
    add_json(roundtrip);
    roundtrip->add_option("programs", cfg.inputs, "English programs")->required()->check(CLI::ExistingFile);

    auto* corpus = app.add_subcommand("corpus", "Round-trip every program in a directory");
    add_language(corpus, "Pack code or pack file");
    add_interpreter(corpus);
    add_json(corpus);
    corpus->add_option("-j,--jobs", cfg.jobs, "Parallel checks (default: all cores)");
    corpus->add_option("dir", cfg.input, "Corpus directory")->required()->check(CLI::ExistingDirectory);

    auto* bench = app.add_subcommand("bench", "Time an English program against its localized version");
    add_language(bench, "Pack code or pack file");
    add_interpreter(bench);
    add_json(bench);
    bench->add_option("--runs", cfg.runs, "Measured runs (>= 3)")->capture_default_str();
    bench->add_option("--warmups", cfg.warmups, "Discarded runs")->capture_default_str();
    bench->add_option("program", cfg.input, "English program")->required()->check(CLI::ExistingFile);

    auto* packs = app.add_subcommand("packs", "List language packs, or show one");
    add_json(packs);
    packs->add_option("code", cfg.language, "Pack to show");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (run->parsed()) return cmd_run(cfg);
        if (translate->parsed()) return cmd_translate(cfg);
        if (pivot->parsed()) return cmd_pivot(cfg);
        if (validate->parsed()) return cmd_validate(cfg);
        if (roundtrip->parsed()) return cmd_roundtrip(cfg);
        if (corpus->parsed()) return cmd_corpus(cfg);
        if (bench->parsed()) return cmd_bench(cfg);
        if (packs->parsed()) return cmd_packs(cfg);
    } catch (const UsageError& e) {
        std::cerr << "unipy: " << e.what() << "\nRun with --help for usage.\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "unipy: error: " << e.what() << '\n';
        return kToolError;
    }
    return kUsageError;
}
