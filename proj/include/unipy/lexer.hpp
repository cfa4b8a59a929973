#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unipy/diagnostic.hpp"

namespace unipy::lexer {

enum class TokenKind { Word, Number, StringLit, Comment, Punct, Whitespace, Newline, Other };

/// A lossless slice of source text. Concatenating the texts of a token stream
/// reproduces the input exactly.
struct Token {
    TokenKind kind;
    std::string text;
    int line = 1;  // 1-based line of the first character
    int col = 1;   // 1-based column, counted in code points

    bool operator==(const Token&) const = default;
};

struct LexResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> warnings;
};

/// Never fails: unterminated strings and unknown characters still produce
/// tokens, with a warning for the former.
LexResult lex(std::string_view source);

std::vector<Token> tokenize(std::string_view source);

/// Strings and comments are never translated.
bool is_opaque(const Token& token);

std::string_view to_string(TokenKind kind);

std::string concat(const std::vector<Token>& tokens);

}  // namespace unipy::lexer
