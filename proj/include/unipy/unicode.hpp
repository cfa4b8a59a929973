#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// UTF-8 stepping and the handful of character classes the lexer needs.
// Classification is backed by ICU's general-category data.
namespace unipy::unicode {

struct Decoded {
    char32_t cp = 0;
    std::size_t length = 0;  // bytes consumed, always >= 1
    bool valid = false;      // false for a malformed sequence (cp is U+FFFD)
};

Decoded decode(std::string_view s, std::size_t pos);
void append_utf8(std::string& out, char32_t cp);
std::string to_utf8(char32_t cp);

std::size_t count_code_points(std::string_view s);
bool is_ascii(std::string_view s);

/// Letters, combining marks, decimal digits of any script, and '_'.
bool is_identifier_char(char32_t cp);
/// An identifier character that is not a decimal digit.
bool is_identifier_start(char32_t cp);
/// 0-9 for a decimal digit of any script, -1 otherwise.
int decimal_value(char32_t cp);
bool is_decimal_digit(char32_t cp);
/// Any Unicode punctuation category (Pc, Pd, Ps, Pe, Pi, Pf, Po).
bool is_punctuation(char32_t cp);
/// Horizontal whitespace: space, tab, form feed, vertical tab, and Zs.
bool is_inline_space(char32_t cp);

/// Exactly one code point?
bool is_single_code_point(std::string_view s);

}  // namespace unipy::unicode
