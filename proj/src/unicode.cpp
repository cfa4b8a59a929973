#include "unipy/unicode.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace unipy::unicode {

Decoded decode(std::string_view s, std::size_t pos) {
    const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
    int32_t i = static_cast<int32_t>(pos);
    const int32_t length = static_cast<int32_t>(s.size());
    UChar32 c = 0;
    U8_NEXT(bytes, i, length, c);
    if (c < 0) {
        return {U'\uFFFD', static_cast<std::size_t>(i) - pos, false};
    }
    return {static_cast<char32_t>(c), static_cast<std::size_t>(i) - pos, true};
}

void append_utf8(std::string& out, char32_t cp) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    UBool error = false;
    U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
    if (error) {
        out += "\xEF\xBF\xBD";
        return;
    }
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

std::string to_utf8(char32_t cp) {
    std::string out;
    append_utf8(out, cp);
    return out;
}

std::size_t count_code_points(std::string_view s) {
    std::size_t n = 0;
    for (std::size_t pos = 0; pos < s.size(); ++n) pos += decode(s, pos).length;
    return n;
}

bool is_ascii(std::string_view s) {
    for (unsigned char c : s)
        if (c >= 0x80) return false;
    return true;
}

bool is_identifier_char(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
               (cp >= '0' && cp <= '9') || cp == '_';
    }
    const auto mask = U_GET_GC_MASK(static_cast<UChar32>(cp));
    return (mask & (U_GC_L_MASK | U_GC_M_MASK | U_GC_ND_MASK)) != 0;
}

bool is_identifier_start(char32_t cp) { return is_identifier_char(cp) && !is_decimal_digit(cp); }

int decimal_value(char32_t cp) {
    if (cp >= '0' && cp <= '9') return static_cast<int>(cp - '0');
    if (cp < 0x80) return -1;
    if (u_charType(static_cast<UChar32>(cp)) != U_DECIMAL_DIGIT_NUMBER) return -1;
    return u_charDigitValue(static_cast<UChar32>(cp));
}

bool is_decimal_digit(char32_t cp) { return decimal_value(cp) >= 0; }

bool is_punctuation(char32_t cp) {
    return (U_GET_GC_MASK(static_cast<UChar32>(cp)) & U_GC_P_MASK) != 0;
}

bool is_inline_space(char32_t cp) {
    if (cp == ' ' || cp == '\t' || cp == '\f' || cp == '\v') return true;
    if (cp < 0x80) return false;
    return u_charType(static_cast<UChar32>(cp)) == U_SPACE_SEPARATOR;
}

bool is_single_code_point(std::string_view s) {
    if (s.empty()) return false;
    const auto d = decode(s, 0);
    return d.valid && d.length == s.size();
}

}  // namespace unipy::unicode
