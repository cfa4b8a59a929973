#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unipy::langpack {

enum class TextDirection { Ltr, Rtl };

/// One keyword row. `english` holds the English token(s) this local word
/// stands for; forward translation always emits the first. A row with more
/// than one English token is a deliberate conflation (e.g. `is` and `==`
/// sharing one local word) and is reported as an inversion ambiguity.
struct KeywordEntry {
    std::string local;
    std::vector<std::string> english;
    int line = 0;  // source line in the pack file, 0 when built in code

    const std::string& primary() const { return english.front(); }
    bool operator==(const KeywordEntry&) const = default;
};

/// Single code point to single code point.
struct CharMapping {
    std::string local;
    std::string ascii;

    bool operator==(const CharMapping&) const = default;
};

struct LanguagePack {
    std::string code;
    std::string name;
    TextDirection direction = TextDirection::Ltr;
    std::vector<KeywordEntry> keywords;  // file order
    std::vector<CharMapping> digits;
    std::vector<CharMapping> punctuation;
    std::vector<std::string> load_warnings;

    /// Forward target of a local keyword, if any.
    std::optional<std::string_view> keyword(std::string_view local) const;
    std::optional<std::string_view> digit(std::string_view local) const;
    std::optional<std::string_view> punct(std::string_view local) const;

    bool operator==(const LanguagePack&) const = default;
};

/// A set of keyword rows that cannot be inverted uniquely: either several
/// local keys for one English token, or one local key for several English
/// tokens.
struct InversionAmbiguity {
    std::vector<std::string> english;
    std::vector<std::string> local_keys;

    bool operator==(const InversionAmbiguity&) const = default;
};

struct PackValidationReport {
    std::vector<std::string> errors;
    std::vector<InversionAmbiguity> ambiguities;
    std::vector<std::string> warnings;

    bool usable() const { return errors.empty(); }
};

struct DroppedInversion {
    std::string english;
    std::vector<std::string> losing_local_keys;

    bool operator==(const DroppedInversion&) const = default;
};

struct ReverseEntry {
    std::string english;
    std::string local;

    bool operator==(const ReverseEntry&) const = default;
};

struct ReversePack {
    std::string source_pack_code;
    std::vector<ReverseEntry> keywords;  // order of first appearance in the pack
    std::vector<CharMapping> digits;       // ascii -> local, stored as {local, ascii}
    std::vector<CharMapping> punctuation;  // same orientation as digits
    std::vector<DroppedInversion> dropped;

    std::optional<std::string_view> keyword(std::string_view english) const;

    bool operator==(const ReversePack&) const = default;
};

/// Reads and structurally decodes a pack file without checking invariants.
/// Throws PackError (NotFound, Parse, Schema).
LanguagePack parse_pack(const std::filesystem::path& path);
LanguagePack parse_pack_text(std::string_view yaml, std::string_view origin = "<memory>");

/// parse_pack followed by validate_pack; a pack with errors throws
/// PackError::Kind::Invalid listing every error.
LanguagePack load_pack(const std::filesystem::path& path);
LanguagePack load_pack_text(std::string_view yaml, std::string_view origin = "<memory>");

PackValidationReport validate_pack(const LanguagePack& pack);

/// First local key in file order wins each contested English token.
/// Throws PackError::Kind::Invalid when the pack has validation errors.
ReversePack invert_pack(const LanguagePack& pack);

/// Digit tables used when a pack of a known language omits `digits`.
std::optional<std::vector<CharMapping>> builtin_digits(std::string_view code);

/// Hard keywords plus the `match`/`case` soft keywords.
bool is_python_keyword(std::string_view word);

struct BundledPack {
    std::string_view code;
    std::string_view yaml;
};

std::span<const BundledPack> bundled_packs();

/// Pack lookup: an existing file path wins, then `<UNIPY_PACKS>/<code>.yaml`,
/// then the packs compiled into the binary.
LanguagePack resolve_pack(std::string_view code_or_path);

/// Like resolve_pack but returns the raw, unvalidated pack.
LanguagePack resolve_pack_unchecked(std::string_view code_or_path);

/// Codes of every pack resolvable by code (UNIPY_PACKS plus bundled), sorted.
std::vector<std::string> available_pack_codes();

std::string_view to_string(TextDirection d);

}  // namespace unipy::langpack
