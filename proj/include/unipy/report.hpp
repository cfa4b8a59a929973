#pragma once

#include <string>

#include "json.hpp"
#include "unipy/harness.hpp"
#include "unipy/langpack.hpp"
#include "unipy/runner.hpp"
#include "unipy/translator.hpp"

// Machine-readable and human-readable renderings of library results. Every
// JSON document handed to a user carries "schema": kSchemaVersion.
namespace unipy::report {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Diagnostic& d);
nlohmann::json to_json(const translator::TranslationResult& r);
nlohmann::json to_json(const langpack::PackValidationReport& r);
nlohmann::json to_json(const langpack::LanguagePack& pack);
nlohmann::json to_json(const harness::RoundTripResult& r);
nlohmann::json to_json(const harness::CorpusReport& r);
nlohmann::json to_json(const harness::BenchResult& r);
nlohmann::json to_json(const runner::RunReport& r);

/// Adds the schema field to an object document.
nlohmann::json document(nlohmann::json body);

std::string render(const langpack::PackValidationReport& r, const langpack::LanguagePack& pack);
std::string render(const harness::RoundTripResult& r);
std::string render(const harness::CorpusReport& r);
std::string render(const harness::BenchResult& r);

}  // namespace unipy::report
