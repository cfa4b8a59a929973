#include "unipy/langpack.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "unipy/error.hpp"
#include "unipy/lexer.hpp"
#include "unipy/unicode.hpp"

namespace unipy::langpack {

namespace {

constexpr std::array<std::string_view, 37> kPythonKeywords = {
    "False", "None",   "True",    "and",      "as",     "assert", "async", "await",
    "break", "class",  "continue", "def",     "del",    "elif",   "else",  "except",
    "finally", "for",  "from",    "global",   "if",     "import", "in",    "is",
    "lambda", "nonlocal", "not",  "or",       "pass",   "raise",  "return", "try",
    "while", "with",   "yield",   "match",    "case",
};

std::string where(std::string_view origin, const YAML::Node& node) {
    const auto mark = node.Mark();
    std::ostringstream os;
    os << origin;
    if (mark.line >= 0) os << ':' << (mark.line + 1);
    return os.str();
}

std::string scalar_or_throw(const YAML::Node& node, std::string_view origin, std::string_view what) {
    if (!node.IsScalar()) {
        throw PackError(PackError::Kind::Schema,
                        where(origin, node) + ": " + std::string(what) + " must be a string");
    }
    return node.Scalar();
}

std::vector<CharMapping> parse_char_map(const YAML::Node& node, std::string_view origin,
                                        std::string_view field) {
    if (node.IsNull()) return {};
    if (!node.IsMap()) {
        throw PackError(PackError::Kind::Schema,
                        where(origin, node) + ": `" + std::string(field) + "` must be a mapping");
    }
    std::vector<CharMapping> out;
    for (const auto& kv : node) {
        const std::string key = scalar_or_throw(kv.first, origin, std::string(field) + " key");
        const std::string value =
            scalar_or_throw(kv.second, origin, std::string(field) + " value for \"" + key + "\"");
        out.push_back({key, value});
    }
    return out;
}

// Token texts of a keyword, with single spaces as the only separators.
// Returns an error message when the text cannot be matched token-wise.
std::optional<std::string> check_matchable(std::string_view text) {
    const auto tokens = lexer::tokenize(text);
    bool expect_word = true;
    for (const auto& t : tokens) {
        if (t.kind == lexer::TokenKind::Whitespace) {
            if (t.text != " " || expect_word) return "contains irregular whitespace";
            expect_word = true;
            continue;
        }
        if (t.kind != lexer::TokenKind::Word && t.kind != lexer::TokenKind::Punct) {
            return "contains a " + std::string(lexer::to_string(t.kind)) +
                   " token and can never match source text";
        }
        expect_word = false;
    }
    if (expect_word) return "contains irregular whitespace";
    return std::nullopt;
}

bool has_line_break(std::string_view s) {
    return s.find('\n') != std::string_view::npos || s.find('\r') != std::string_view::npos;
}

void validate_char_map(const std::vector<CharMapping>& map, std::string_view field,
                       std::vector<std::string>& errors) {
    std::set<std::string> keys;
    std::set<std::string> values;
    for (const auto& m : map) {
        if (!unicode::is_single_code_point(m.local)) {
            errors.push_back(std::string(field) + " key \"" + m.local + "\" is not a single character");
        }
        if (!unicode::is_single_code_point(m.ascii) || !unicode::is_ascii(m.ascii)) {
            errors.push_back(std::string(field) + " value \"" + m.ascii + "\" for \"" + m.local +
                             "\" is not a single ASCII character");
        }
        if (!keys.insert(m.local).second) {
            errors.push_back(std::string(field) + " key \"" + m.local + "\" appears more than once");
        }
        if (!values.insert(m.ascii).second) {
            errors.push_back(std::string(field) + " value \"" + m.ascii +
                             "\" appears more than once; the table is not invertible");
        }
    }
}

}  // namespace

std::optional<std::string_view> LanguagePack::keyword(std::string_view local) const {
    for (const auto& k : keywords)
        if (k.local == local && !k.english.empty()) return k.primary();
    return std::nullopt;
}

std::optional<std::string_view> LanguagePack::digit(std::string_view local) const {
    for (const auto& d : digits)
        if (d.local == local) return d.ascii;
    return std::nullopt;
}

std::optional<std::string_view> LanguagePack::punct(std::string_view local) const {
    for (const auto& p : punctuation)
        if (p.local == local) return p.ascii;
    return std::nullopt;
}

std::optional<std::string_view> ReversePack::keyword(std::string_view english) const {
    for (const auto& k : keywords)
        if (k.english == english) return k.local;
    return std::nullopt;
}

std::string_view to_string(TextDirection d) { return d == TextDirection::Rtl ? "rtl" : "ltr"; }

bool is_python_keyword(std::string_view word) {
    return std::find(kPythonKeywords.begin(), kPythonKeywords.end(), word) != kPythonKeywords.end();
}

std::optional<std::vector<CharMapping>> builtin_digits(std::string_view code) {
    char32_t zero = 0;
    if (code == "ur" || code == "fa") zero = 0x06F0;       // Extended Arabic-Indic
    else if (code == "ar") zero = 0x0660;                  // Arabic-Indic
    else if (code == "hi" || code == "mr" || code == "ne") zero = 0x0966;  // Devanagari
    else if (code == "bn") zero = 0x09E6;
    else return std::nullopt;

    std::vector<CharMapping> table;
    for (char32_t i = 0; i < 10; ++i) {
        table.push_back({unicode::to_utf8(zero + i), std::string(1, static_cast<char>('0' + i))});
    }
    return table;
}

LanguagePack parse_pack_text(std::string_view yaml, std::string_view origin) {
    LanguagePack pack;
    if (yaml.substr(0, 3) == "\xEF\xBB\xBF") {
        yaml.remove_prefix(3);
        pack.load_warnings.push_back(std::string(origin) + ": byte-order mark ignored");
    }

    YAML::Node root;
    try {
        root = YAML::Load(std::string(yaml));
    } catch (const YAML::Exception& e) {
        std::ostringstream os;
        os << origin << ':' << (e.mark.line + 1) << ':' << (e.mark.column + 1) << ": " << e.msg;
        throw PackError(PackError::Kind::Parse, os.str());
    }
    if (!root.IsMap()) {
        throw PackError(PackError::Kind::Schema, std::string(origin) + ": top level must be a mapping");
    }

    bool have_code = false;
    bool have_keywords = false;
    bool have_digits = false;
    for (const auto& kv : root) {
        const std::string field = scalar_or_throw(kv.first, origin, "top-level key");
        const YAML::Node& value = kv.second;
        if (field == "code") {
            pack.code = scalar_or_throw(value, origin, "`code`");
            have_code = true;
        } else if (field == "name") {
            pack.name = scalar_or_throw(value, origin, "`name`");
        } else if (field == "direction") {
            const std::string dir = scalar_or_throw(value, origin, "`direction`");
            if (dir == "ltr") pack.direction = TextDirection::Ltr;
            else if (dir == "rtl") pack.direction = TextDirection::Rtl;
            else {
                throw PackError(PackError::Kind::Schema,
                                where(origin, value) + ": `direction` must be ltr or rtl, got \"" + dir + "\"");
            }
        } else if (field == "keywords") {
            have_keywords = true;
            if (value.IsNull()) continue;
            if (!value.IsMap()) {
                throw PackError(PackError::Kind::Schema, where(origin, value) + ": `keywords` must be a mapping");
            }
            for (const auto& entry : value) {
                KeywordEntry row;
                row.local = scalar_or_throw(entry.first, origin, "keyword");
                row.line = entry.first.Mark().line + 1;
                if (entry.second.IsSequence()) {
                    for (const auto& item : entry.second) {
                        row.english.push_back(
                            scalar_or_throw(item, origin, "translation of keyword \"" + row.local + "\""));
                    }
                } else {
                    row.english.push_back(
                        scalar_or_throw(entry.second, origin, "translation of keyword \"" + row.local + "\""));
                }
                pack.keywords.push_back(std::move(row));
            }
        } else if (field == "digits") {
            have_digits = true;
            pack.digits = parse_char_map(value, origin, "digits");
        } else if (field == "punctuation") {
            pack.punctuation = parse_char_map(value, origin, "punctuation");
        } else {
            pack.load_warnings.push_back(where(origin, kv.first) + ": unknown key `" + field + "` ignored");
        }
    }
    if (!have_code) throw PackError(PackError::Kind::Schema, std::string(origin) + ": missing `code`");
    if (!have_keywords) throw PackError(PackError::Kind::Schema, std::string(origin) + ": missing `keywords`");
    if (pack.name.empty()) pack.name = pack.code;
    if (!have_digits) {
        if (auto table = builtin_digits(pack.code)) pack.digits = std::move(*table);
    }
    return pack;
}

LanguagePack parse_pack(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw PackError(PackError::Kind::NotFound, "cannot open language pack " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pack_text(buf.str(), path.string());
}

namespace {

LanguagePack checked(LanguagePack pack, std::string_view origin) {
    const auto report = validate_pack(pack);
    if (!report.usable()) {
        std::string msg = std::string(origin) + ": invalid language pack";
        for (const auto& e : report.errors) msg += "\n  " + e;
        throw PackError(PackError::Kind::Invalid, msg);
    }
    return pack;
}

}  // namespace

LanguagePack load_pack(const std::filesystem::path& path) { return checked(parse_pack(path), path.string()); }

LanguagePack load_pack_text(std::string_view yaml, std::string_view origin) {
    return checked(parse_pack_text(yaml, origin), origin);
}

PackValidationReport validate_pack(const LanguagePack& pack) {
    PackValidationReport report;
    report.warnings = pack.load_warnings;

    if (pack.code.empty()) {
        report.errors.push_back("`code` is empty");
    } else if (!std::all_of(pack.code.begin(), pack.code.end(), [](char c) {
                   return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '-';
               })) {
        report.errors.push_back("`code` \"" + pack.code + "\" must be lowercase ASCII");
    }

    std::set<std::string> english_values;
    for (const auto& row : pack.keywords)
        for (const auto& e : row.english) english_values.insert(e);

    std::set<std::string> seen_keys;
    // english token -> local keys, in file order of first appearance
    std::vector<std::pair<std::string, std::vector<std::string>>> by_english;
    for (const auto& row : pack.keywords) {
        const std::string at = row.line > 0 ? " (line " + std::to_string(row.line) + ")" : "";
        if (row.local.empty()) {
            report.errors.push_back("empty keyword key" + at);
            continue;
        }
        if (has_line_break(row.local)) {
            report.errors.push_back("keyword \"" + row.local + "\"" + at + " contains a line break");
            continue;
        }
        if (auto why = check_matchable(row.local)) {
            report.errors.push_back("keyword \"" + row.local + "\"" + at + " " + *why);
        }
        if (!seen_keys.insert(row.local).second) {
            report.errors.push_back("keyword \"" + row.local + "\"" + at + " is defined more than once");
        }
        if (row.english.empty()) {
            report.errors.push_back("keyword \"" + row.local + "\"" + at + " has no translation");
        }
        for (const auto& e : row.english) {
            if (e.empty() || has_line_break(e)) {
                report.errors.push_back("keyword \"" + row.local + "\"" + at + " has an empty or multi-line translation");
                continue;
            }
            if (auto why = check_matchable(e)) {
                report.errors.push_back("translation \"" + e + "\" of \"" + row.local + "\"" + at + " " + *why);
            }
            auto it = std::find_if(by_english.begin(), by_english.end(),
                                   [&](const auto& p) { return p.first == e; });
            if (it == by_english.end()) by_english.push_back({e, {row.local}});
            else if (std::find(it->second.begin(), it->second.end(), row.local) == it->second.end())
                it->second.push_back(row.local);
        }
        if (is_python_keyword(row.local) || english_values.count(row.local) > 0) {
            report.warnings.push_back("keyword \"" + row.local +
                                      "\" is itself English Python text; forward translation is not idempotent");
        }
    }

    // Ambiguities are listed in order of first appearance.
    std::set<std::string> reported_rows;
    for (const auto& row : pack.keywords) {
        for (const auto& e : row.english) {
            auto it = std::find_if(by_english.begin(), by_english.end(),
                                   [&](const auto& p) { return p.first == e; });
            if (it != by_english.end() && it->second.size() >= 2 && reported_rows.insert("e:" + e).second) {
                report.ambiguities.push_back({{e}, it->second});
            }
        }
        if (row.english.size() >= 2 && reported_rows.insert("l:" + row.local).second) {
            report.ambiguities.push_back({row.english, {row.local}});
        }
    }

    if (!pack.digits.empty()) {
        if (pack.digits.size() != 10) {
            report.errors.push_back("digit table has " + std::to_string(pack.digits.size()) +
                                    " entries; exactly 10 are required");
        }
        validate_char_map(pack.digits, "digits", report.errors);
        for (const auto& d : pack.digits) {
            if (d.ascii.size() != 1 || d.ascii[0] < '0' || d.ascii[0] > '9') {
                report.errors.push_back("digit \"" + d.local + "\" maps to \"" + d.ascii + "\", not 0-9");
            }
        }
    }
    validate_char_map(pack.punctuation, "punctuation", report.errors);

    return report;
}

ReversePack invert_pack(const LanguagePack& pack) {
    const auto report = validate_pack(pack);
    if (!report.usable()) {
        throw PackError(PackError::Kind::Invalid,
                        "cannot invert invalid language pack \"" + pack.code + "\": " + report.errors.front());
    }

    ReversePack rev;
    rev.source_pack_code = pack.code;
    for (const auto& row : pack.keywords) {
        for (const auto& e : row.english) {
            auto hit = std::find_if(rev.keywords.begin(), rev.keywords.end(),
                                    [&](const ReverseEntry& r) { return r.english == e; });
            if (hit == rev.keywords.end()) {
                rev.keywords.push_back({e, row.local});
                continue;
            }
            if (hit->local == row.local) continue;
            auto drop = std::find_if(rev.dropped.begin(), rev.dropped.end(),
                                     [&](const DroppedInversion& d) { return d.english == e; });
            if (drop == rev.dropped.end()) rev.dropped.push_back({e, {row.local}});
            else drop->losing_local_keys.push_back(row.local);
        }
    }
    for (const auto& d : pack.digits) rev.digits.push_back(d);
    for (const auto& p : pack.punctuation) rev.punctuation.push_back(p);
    return rev;
}

}  // namespace unipy::langpack
