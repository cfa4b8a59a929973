#include "unipy/report.hpp"

#include <cstdio>
#include <sstream>

namespace unipy::report {

using nlohmann::json;

namespace {

std::string fixed(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

json document(json body) {
    body["schema"] = kSchemaVersion;
    return body;
}

json to_json(const Diagnostic& d) {
    return {{"kind", to_string(d.kind)}, {"line", d.line}, {"col", d.col}, {"message", d.message}};
}

json to_json(const translator::TranslationResult& r) {
    json subs = json::array();
    for (const auto& s : r.substitutions) {
        subs.push_back({{"line", s.line},
                        {"col", s.col},
                        {"original", s.original},
                        {"replacement", s.replacement},
                        {"category", translator::to_string(s.kind)}});
    }
    json warnings = json::array();
    for (const auto& w : r.warnings) warnings.push_back(to_json(w));
    return {{"output", r.output}, {"substitutions", subs}, {"warnings", warnings}};
}

json to_json(const langpack::PackValidationReport& r) {
    json amb = json::array();
    for (const auto& a : r.ambiguities) amb.push_back({{"english", a.english}, {"local_keys", a.local_keys}});
    return {{"usable", r.usable()}, {"errors", r.errors}, {"ambiguities", amb}, {"warnings", r.warnings}};
}

json to_json(const langpack::LanguagePack& pack) {
    json keywords = json::array();
    for (const auto& k : pack.keywords) keywords.push_back({{"local", k.local}, {"english", k.english}});
    auto char_map = [](const std::vector<langpack::CharMapping>& m) {
        json out = json::array();
        for (const auto& c : m) out.push_back({{"local", c.local}, {"ascii", c.ascii}});
        return out;
    };
    return {{"code", pack.code},
            {"name", pack.name},
            {"direction", langpack::to_string(pack.direction)},
            {"keywords", keywords},
            {"digits", char_map(pack.digits)},
            {"punctuation", char_map(pack.punctuation)}};
}

json to_json(const harness::RoundTripResult& r) {
    json j = {{"program", r.program.string()}, {"status", harness::to_string(r.status)}};
    j["failure_stage"] = r.failure_stage ? json(harness::to_string(*r.failure_stage)) : json(nullptr);
    j["diff_excerpt"] = r.diff_excerpt ? json(*r.diff_excerpt) : json(nullptr);
    j["detail"] = r.detail ? json(*r.detail) : json(nullptr);
    j["attribution"] = r.attribution ? json(*r.attribution) : json(nullptr);
    return j;
}

json to_json(const harness::CorpusReport& r) {
    json results = json::array();
    for (const auto& x : r.results) results.push_back(to_json(x));
    json expected = json::array();
    for (const auto& p : r.expected_failures) expected.push_back(p.string());
    return {{"total", r.total},         {"passed", r.passed},
            {"failed", r.failed},       {"pass_rate", r.pass_rate()},
            {"expected_failures", expected}, {"elapsed_ms", r.elapsed_ms},
            {"results", results}};
}

json to_json(const harness::BenchResult& r) {
    return {{"program", r.program.string()},
            {"direct_mean_ms", r.direct_mean_ms},
            {"direct_stddev_ms", r.direct_stddev_ms},
            {"transpiled_mean_ms", r.transpiled_mean_ms},
            {"transpiled_stddev_ms", r.transpiled_stddev_ms},
            {"translate_mean_ms", r.translate_mean_ms},
            {"runs", r.runs},
            {"warmups", r.warmups}};
}

json to_json(const runner::RunReport& r) {
    json warnings = json::array();
    for (const auto& w : r.warnings) warnings.push_back(to_json(w));
    return {{"stdout", r.stdout_text},
            {"stderr", r.stderr_text},
            {"exit_code", r.exit_code},
            {"translated_source", r.translated_source},
            {"timings", {{"translate_ms", r.timings.translate_ms}, {"execute_ms", r.timings.execute_ms}}},
            {"warnings", warnings}};
}

std::string render(const langpack::PackValidationReport& r, const langpack::LanguagePack& pack) {
    std::ostringstream os;
    os << pack.code << " (" << pack.name << "): " << pack.keywords.size() << " keywords, "
       << pack.digits.size() << " digits, " << pack.punctuation.size() << " punctuation marks\n";
    for (const auto& e : r.errors) os << "error: " << e << '\n';
    for (const auto& a : r.ambiguities) {
        os << "ambiguity:";
        for (std::size_t i = 0; i < a.english.size(); ++i) os << (i ? ", " : " ") << '"' << a.english[i] << '"';
        os << " <->";
        for (std::size_t i = 0; i < a.local_keys.size(); ++i) os << (i ? ", " : " ") << '"' << a.local_keys[i] << '"';
        os << '\n';
    }
    for (const auto& w : r.warnings) os << "warning: " << w << '\n';
    os << (r.usable() ? "ok\n" : "invalid\n");
    return os.str();
}

std::string render(const harness::RoundTripResult& r) {
    std::ostringstream os;
    os << harness::to_string(r.status) << "  " << r.program.string();
    if (r.failure_stage) os << "  [" << harness::to_string(*r.failure_stage) << "]";
    if (r.attribution) os << "  (ambiguous: " << *r.attribution << ")";
    os << '\n';
    if (r.diff_excerpt) os << *r.diff_excerpt;
    return os.str();
}

std::string render(const harness::CorpusReport& r) {
    std::ostringstream os;
    for (const auto& x : r.results) {
        if (x.status == harness::Status::Fail) os << render(x);
    }
    os << "\nExecution Status  Number of Programs\n"
       << "PASS              " << r.passed << '\n'
       << "FAIL              " << r.failed << '\n'
       << "pass rate " << fixed(100.0 * r.pass_rate(), 1) << "%, " << r.expected_failures.size()
       << " expected failure(s), " << fixed(r.elapsed_ms / 1000.0, 1) << " s\n";
    return os.str();
}

std::string render(const harness::BenchResult& r) {
    std::ostringstream os;
    os << r.program.string() << "  (" << r.runs << " runs, " << r.warmups << " warmups)\n"
       << "  python      " << fixed(r.direct_mean_ms) << " ms +- " << fixed(r.direct_stddev_ms) << '\n'
       << "  transpiled  " << fixed(r.transpiled_mean_ms) << " ms +- " << fixed(r.transpiled_stddev_ms) << '\n'
       << "  translation " << fixed(r.translate_mean_ms) << " ms\n"
       << "  difference  " << fixed(r.transpiled_mean_ms - r.direct_mean_ms) << " ms\n";
    return os.str();
}

}  // namespace unipy::report
