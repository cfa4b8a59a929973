#include "unipy/transliterate.hpp"

#include <unicode/translit.h>
#include <unicode/unistr.h>

#include <cctype>
#include <cstdio>
#include <optional>
#include <memory>

#include "unipy/langpack.hpp"
#include "unipy/unicode.hpp"

namespace unipy::translator {

namespace {

// Letters ICU's Arabic-Latin rules leave untouched or mark with modifier
// letters that do not survive the ASCII pass.
std::optional<std::string_view> supplement(char32_t cp) {
    switch (cp) {
        case 0x06BE: return "h";   // ھ do chashmi he
        case 0x06C1: return "h";   // ہ gol he
        case 0x06C3: return "h";   // ۃ
        case 0x06BA: return "n";   // ں noon ghunna
        case 0x06D2: return "e";   // ے bari ye
        case 0x06D3: return "e";   // ۓ
        case 0x0679: return "t";   // ٹ
        case 0x0688: return "d";   // ڈ
        case 0x0691: return "r";   // ڑ
        case 0x0639: return "a";   // ع
        case 0x0621: return "";    // ء
        default: return std::nullopt;
    }
}

icu::Transliterator* romanizer() {
    // Transliterator instances are not safe to share between threads.
    thread_local std::unique_ptr<icu::Transliterator> instance = [] {
        UErrorCode status = U_ZERO_ERROR;
        std::unique_ptr<icu::Transliterator> t(
            icu::Transliterator::createInstance("Any-Latin; Latin-ASCII", UTRANS_FORWARD, status));
        if (U_FAILURE(status)) t.reset();
        return t;
    }();
    return instance.get();
}

std::string hex_escape(char32_t cp) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "u%04x", static_cast<unsigned>(cp));
    return buf;
}

}  // namespace

std::string transliterate_identifier(std::string_view word) {
    if (unicode::is_ascii(word)) return std::string(word);

    std::string pre;
    for (std::size_t pos = 0; pos < word.size();) {
        const auto d = unicode::decode(word, pos);
        pos += d.length;
        if (auto latin = supplement(d.cp)) pre += *latin;
        else if (const int v = unicode::decimal_value(d.cp); v >= 0) pre += static_cast<char>('0' + v);
        else unicode::append_utf8(pre, d.cp);
    }

    std::string latin = pre;
    if (auto* t = romanizer()) {
        auto text = icu::UnicodeString::fromUTF8(pre);
        t->transliterate(text);
        latin.clear();
        text.toUTF8String(latin);
    }

    std::string out;
    for (std::size_t pos = 0; pos < latin.size();) {
        const auto d = unicode::decode(latin, pos);
        pos += d.length;
        const char32_t c = d.cp;
        if (c < 0x80) {
            if (std::isalnum(static_cast<int>(c)) || c == '_') out += static_cast<char>(c);
            else if (c == ' ' || c == '-') out += '_';
        } else if (unicode::is_identifier_char(c)) {
            out += hex_escape(c);
        }
    }
    if (out.empty()) {
        out = "_" + hex_escape(unicode::decode(word, 0).cp);
    }
    if (out[0] >= '0' && out[0] <= '9') out.insert(out.begin(), '_');
    if (langpack::is_python_keyword(out)) out += '_';
    return out;
}

void IdentifierRenamer::reserve(std::string_view name) { taken_.insert(std::string(name)); }

IdentifierRenamer::Assignment IdentifierRenamer::assign(std::string_view source_word) {
    const std::string key(source_word);
    if (auto it = by_source_.find(key); it != by_source_.end()) return {it->second, false, false};

    const std::string base = transliterate_identifier(source_word);
    std::string name = base;
    bool collided = false;
    for (int suffix = 2; taken_.count(name) > 0; ++suffix) {
        name = base + "_" + std::to_string(suffix);
        collided = true;
    }
    taken_.insert(name);
    by_source_.emplace(key, name);
    return {name, collided, true};
}

}  // namespace unipy::translator
