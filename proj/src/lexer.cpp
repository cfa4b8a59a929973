#include "unipy/lexer.hpp"

#include <array>
#include <cctype>

#include "unipy/unicode.hpp"

namespace unipy::lexer {

namespace {

using unicode::decode;

// Longest first, so maximal munch is a linear scan.
constexpr std::array<std::string_view, 24> kOperators = {
    "**=", "//=", ">>=", "<<=", "...", "->", ":=", "==", "!=", "<=", ">=", "**",
    "//",  "<<",  ">>",  "+=",  "-=",  "*=", "/=", "%=", "&=", "|=", "^=", "@=",
};

constexpr std::string_view kSingleCharPunct = "()[]{},:;.=+-*/%<>&|^~@!";

bool is_newline_start(char c) { return c == '\n' || c == '\r'; }

bool is_string_prefix(std::string_view word) {
    if (word.empty() || word.size() > 2) return false;
    for (char c : word) {
        switch (c) {
            case 'r': case 'R': case 'b': case 'B':
            case 'f': case 'F': case 'u': case 'U':
                break;
            default:
                return false;
        }
    }
    return true;
}

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    LexResult run() {
        while (pos_ < src_.size()) step();
        return std::move(result_);
    }

private:
    char32_t peek(std::size_t offset_bytes = 0) const {
        const std::size_t at = pos_ + offset_bytes;
        if (at >= src_.size()) return 0;
        return decode(src_, at).cp;
    }

    void emit(TokenKind kind, std::size_t end) {
        Token tok{kind, std::string(src_.substr(pos_, end - pos_)), line_, col_};
        advance_position(tok.text);
        result_.tokens.push_back(std::move(tok));
        pos_ = end;
    }

    void advance_position(std::string_view text) {
        for (std::size_t i = 0; i < text.size();) {
            const char c = text[i];
            if (c == '\n' || (c == '\r' && (i + 1 >= text.size() || text[i + 1] != '\n'))) {
                ++line_;
                col_ = 1;
                ++i;
                continue;
            }
            if (c == '\r') {  // first half of CRLF; the LF bumps the line
                ++i;
                continue;
            }
            i += decode(text, i).length;
            ++col_;
        }
    }

    void warn(DiagnosticKind kind, std::string message) {
        result_.warnings.push_back({kind, line_, col_, std::move(message)});
    }

    void step() {
        const auto d = decode(src_, pos_);
        if (!d.valid) {
            emit(TokenKind::Other, pos_ + d.length);
            return;
        }
        const char32_t c = d.cp;

        if (c == '\r') {
            const bool crlf = pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n';
            emit(TokenKind::Newline, pos_ + (crlf ? 2 : 1));
            return;
        }
        if (c == '\n') {
            emit(TokenKind::Newline, pos_ + 1);
            return;
        }
        if (unicode::is_inline_space(c)) {
            std::size_t end = pos_;
            while (end < src_.size()) {
                const auto n = decode(src_, end);
                if (!n.valid || !unicode::is_inline_space(n.cp)) break;
                end += n.length;
            }
            emit(TokenKind::Whitespace, end);
            return;
        }
        if (c == '#') {
            std::size_t end = pos_;
            while (end < src_.size() && !is_newline_start(src_[end])) ++end;
            emit(TokenKind::Comment, end);
            return;
        }
        if (c == '\'' || c == '"') {
            lex_string(pos_);
            return;
        }
        if (unicode::is_identifier_start(c)) {
            std::size_t end = pos_;
            while (end < src_.size()) {
                const auto n = decode(src_, end);
                if (!n.valid || !unicode::is_identifier_char(n.cp)) break;
                end += n.length;
            }
            const char next = end < src_.size() ? src_[end] : '\0';
            if ((next == '\'' || next == '"') && is_string_prefix(src_.substr(pos_, end - pos_))) {
                lex_string(end);
                return;
            }
            emit(TokenKind::Word, end);
            return;
        }
        if (unicode::is_decimal_digit(c) ||
            (c == '.' && unicode::is_decimal_digit(peek(1)))) {
            lex_number();
            return;
        }
        if (c < 0x80) {
            for (auto op : kOperators) {
                if (src_.substr(pos_, op.size()) == op) {
                    emit(TokenKind::Punct, pos_ + op.size());
                    return;
                }
            }
            const bool punct = kSingleCharPunct.find(static_cast<char>(c)) != std::string_view::npos;
            emit(punct ? TokenKind::Punct : TokenKind::Other, pos_ + 1);
            return;
        }
        emit(unicode::is_punctuation(c) ? TokenKind::Punct : TokenKind::Other, pos_ + d.length);
    }

    // quote_at points at the opening quote; any prefix lies in [pos_, quote_at).
    void lex_string(std::size_t quote_at) {
        const char quote = src_[quote_at];
        const std::string closer(3, quote);
        const bool triple = src_.substr(quote_at, 3) == closer;
        std::size_t i = quote_at + (triple ? 3 : 1);
        while (i < src_.size()) {
            const char c = src_[i];
            if (c == '\\') {
                ++i;
                if (i < src_.size()) {
                    // an escaped CRLF is a single line continuation
                    if (src_[i] == '\r' && i + 1 < src_.size() && src_[i + 1] == '\n') i += 2;
                    else i += decode(src_, i).length;
                }
                continue;
            }
            if (triple) {
                if (src_.substr(i, 3) == closer) {
                    emit(TokenKind::StringLit, i + 3);
                    return;
                }
            } else {
                if (c == quote) {
                    emit(TokenKind::StringLit, i + 1);
                    return;
                }
                if (is_newline_start(c)) {
                    warn(DiagnosticKind::UnterminatedString,
                         "unterminated string literal (ends at end of line)");
                    emit(TokenKind::StringLit, i);
                    return;
                }
            }
            i += decode(src_, i).length;
        }
        warn(DiagnosticKind::UnterminatedString,
             triple ? "unterminated triple-quoted string literal (runs to end of input)"
                    : "unterminated string literal (runs to end of input)");
        emit(TokenKind::StringLit, src_.size());
    }

    void lex_number() {
        std::size_t end = pos_;
        bool seen_dot = false;
        bool prefixed = false;  // 0x / 0o / 0b: letters are digits, no exponent sign
        {
            const auto first = decode(src_, pos_);
            if (unicode::decimal_value(first.cp) == 0 && pos_ + first.length < src_.size()) {
                const char p = src_[pos_ + first.length];
                prefixed = p == 'x' || p == 'X' || p == 'o' || p == 'O' || p == 'b' || p == 'B';
            }
        }
        char32_t prev = 0;
        while (end < src_.size()) {
            const auto n = decode(src_, end);
            if (!n.valid) break;
            const char32_t c = n.cp;
            const bool ascii_alnum = c < 0x80 && (std::isalnum(static_cast<int>(c)) != 0);
            if (unicode::is_decimal_digit(c) || ascii_alnum || c == '_') {
                // fall through to consume
            } else if (c == '.' && !seen_dot && !prefixed) {
                seen_dot = true;
            } else if ((c == '+' || c == '-') && !prefixed && (prev == 'e' || prev == 'E') &&
                       end + 1 < src_.size() && unicode::is_decimal_digit(decode(src_, end + 1).cp)) {
                // exponent sign
            } else {
                break;
            }
            prev = c;
            end += n.length;
        }
        emit(TokenKind::Number, end);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    LexResult result_;
};

}  // namespace

LexResult lex(std::string_view source) { return Lexer(source).run(); }

std::vector<Token> tokenize(std::string_view source) { return lex(source).tokens; }

bool is_opaque(const Token& token) {
    return token.kind == TokenKind::StringLit || token.kind == TokenKind::Comment;
}

std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::Word: return "Word";
        case TokenKind::Number: return "Number";
        case TokenKind::StringLit: return "StringLit";
        case TokenKind::Comment: return "Comment";
        case TokenKind::Punct: return "Punct";
        case TokenKind::Whitespace: return "Whitespace";
        case TokenKind::Newline: return "Newline";
        case TokenKind::Other: return "Other";
    }
    return "?";
}

std::string concat(const std::vector<Token>& tokens) {
    std::string out;
    for (const auto& t : tokens) out += t.text;
    return out;
}

}  // namespace unipy::lexer
