#include "unipy/translator.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "unipy/error.hpp"
#include "unipy/lexer.hpp"
#include "unipy/transliterate.hpp"
#include "unipy/unicode.hpp"

namespace unipy::translator {

using langpack::LanguagePack;
using langpack::ReversePack;
using lexer::Token;
using lexer::TokenKind;

namespace {

struct Rule {
    std::vector<std::string> tokens;  // token texts, single-space tokens included
    std::string replacement;
    std::optional<std::string> note;  // emitted as a DroppedAmbiguity warning on use
};

using RuleIndex = std::unordered_map<std::string, std::vector<Rule>>;

std::vector<std::string> token_texts(std::string_view text) {
    std::vector<std::string> out;
    for (auto& t : lexer::tokenize(text)) out.push_back(std::move(t.text));
    return out;
}

void add_rule(RuleIndex& index, Rule rule) {
    auto& bucket = index[rule.tokens.front()];
    bucket.push_back(std::move(rule));
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const Rule& a, const Rule& b) { return a.tokens.size() > b.tokens.size(); });
}

bool is_radix_prefixed(std::string_view number) {
    const auto first = unicode::decode(number, 0);
    if (unicode::decimal_value(first.cp) != 0 || first.length >= number.size()) return false;
    const char p = number[first.length];
    return p == 'x' || p == 'X' || p == 'o' || p == 'O' || p == 'b' || p == 'B';
}

// Inner text of a string literal or comment, for spotting keys the
// translator deliberately leaves alone.
std::string_view opaque_body(const Token& t) {
    std::string_view s = t.text;
    if (t.kind == TokenKind::Comment) return s.substr(1);
    const auto q = s.find_first_of("'\"");
    if (q == std::string_view::npos) return s;
    const std::string triple(3, s[q]);
    const std::size_t n = s.substr(q).starts_with(triple) ? 3 : 1;
    s.remove_prefix(q + n);
    const std::string_view closer = std::string_view(triple).substr(0, n);
    if (s.ends_with(closer)) s.remove_suffix(n);
    return s;
}

std::string dq(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

struct Translator::Tables {
    LanguagePack pack;
    ReversePack reverse;
    RuleIndex forward_rules;
    RuleIndex reverse_rules;
    std::unordered_map<std::string, std::string> forward_digits;   // local -> ascii
    std::unordered_map<char, std::string> reverse_digits;          // ascii -> local
    std::unordered_map<std::string, std::string> forward_punct;
    std::unordered_map<std::string, std::string> reverse_punct;
    std::unordered_set<std::string> local_words;    // every word appearing in a local key
    std::unordered_set<std::string> english_words;  // every word appearing in an English value
};

Translator::Translator(LanguagePack pack) : tables_(std::make_unique<Tables>()) {
    auto& t = *tables_;
    t.reverse = langpack::invert_pack(pack);  // validates
    t.pack = std::move(pack);

    std::unordered_map<std::string, std::vector<std::string>> losers;
    for (const auto& d : t.reverse.dropped) losers[d.english] = d.losing_local_keys;

    for (const auto& row : t.pack.keywords) {
        Rule rule{token_texts(row.local), row.primary(), std::nullopt};
        if (row.english.size() > 1) {
            std::string others;
            for (std::size_t i = 1; i < row.english.size(); ++i)
                others += (i > 1 ? ", " : "") + dq(row.english[i]);
            rule.note = dq(row.local) + " also stands for " + others + "; translated as " +
                        dq(row.primary());
        } else if (auto it = losers.find(row.primary()); it != losers.end() &&
                   std::find(it->second.begin(), it->second.end(), row.local) != it->second.end()) {
            rule.note = dq(row.local) + " will reverse-translate as " +
                        dq(*t.reverse.keyword(row.primary()));
        }
        for (const auto& w : rule.tokens)
            if (w != " ") t.local_words.insert(w);
        add_rule(t.forward_rules, std::move(rule));
        for (const auto& e : row.english)
            for (auto& w : token_texts(e))
                if (w != " ") t.english_words.insert(std::move(w));
    }

    for (const auto& entry : t.reverse.keywords) {
        Rule rule{token_texts(entry.english), entry.local, std::nullopt};
        const auto row = std::find_if(t.pack.keywords.begin(), t.pack.keywords.end(),
                                      [&](const auto& r) { return r.local == entry.local; });
        if (row != t.pack.keywords.end() && row->primary() != entry.english) {
            rule.note = dq(entry.english) + " becomes " + dq(entry.local) + ", which reads back as " +
                        dq(row->primary());
        } else if (auto it = losers.find(entry.english); it != losers.end()) {
            std::string alts;
            for (const auto& l : it->second) alts += (alts.empty() ? "" : ", ") + dq(l);
            rule.note = dq(entry.english) + " has several local forms; chose " + dq(entry.local) +
                        " over " + alts;
        }
        add_rule(t.reverse_rules, std::move(rule));
    }

    for (const auto& d : t.pack.digits) {
        t.forward_digits.emplace(d.local, d.ascii);
        t.reverse_digits.emplace(d.ascii[0], d.local);
    }
    for (const auto& p : t.pack.punctuation) {
        t.forward_punct.emplace(p.local, p.ascii);
        t.reverse_punct.emplace(p.ascii, p.local);
    }
}

Translator::~Translator() = default;
Translator::Translator(Translator&&) noexcept = default;
Translator& Translator::operator=(Translator&&) noexcept = default;

const LanguagePack& Translator::pack() const { return tables_->pack; }
const ReversePack& Translator::reverse_pack() const { return tables_->reverse; }

TranslationResult Translator::translate(std::string_view source, Direction direction,
                                        const TranslateOptions& options) const {
    const auto& t = *tables_;
    const bool forward = direction == Direction::Forward;
    const RuleIndex& rules = forward ? t.forward_rules : t.reverse_rules;

    auto lexed = lexer::lex(source);
    const auto& tokens = lexed.tokens;
    TranslationResult result;
    result.warnings = std::move(lexed.warnings);
    result.output.reserve(source.size() + source.size() / 4);

    const bool rename = forward && options.translate_identifiers;
    IdentifierRenamer renamer;
    if (rename) {
        for (const auto& tok : tokens)
            if (tok.kind == TokenKind::Word && unicode::is_ascii(tok.text)) renamer.reserve(tok.text);
        for (const auto& w : t.english_words) renamer.reserve(w);
    }

    auto warn = [&](DiagnosticKind kind, const Token& at, std::string message) {
        result.warnings.push_back({kind, at.line, at.col, std::move(message)});
    };
    auto substitute = [&](const Token& at, std::string original, const std::string& replacement,
                          SubstitutionKind kind) {
        result.output += replacement;
        result.substitutions.push_back({at.line, at.col, std::move(original), replacement, kind});
    };

    for (std::size_t i = 0; i < tokens.size();) {
        const Token& tok = tokens[i];

        if (lexer::is_opaque(tok)) {
            result.output += tok.text;
            if (forward && !t.local_words.empty()) {
                for (const auto& inner : lexer::tokenize(opaque_body(tok))) {
                    if (inner.kind == TokenKind::Word && t.local_words.count(inner.text) > 0) {
                        warn(DiagnosticKind::OpaqueKeySkip, tok,
                             "keyword " + dq(inner.text) + " inside a " +
                                 (tok.kind == TokenKind::Comment ? "comment" : "string") + " left as is");
                        break;
                    }
                }
            }
            ++i;
            continue;
        }

        if (tok.kind == TokenKind::Word || tok.kind == TokenKind::Punct) {
            const Rule* matched = nullptr;
            if (auto bucket = rules.find(tok.text); bucket != rules.end()) {
                for (const auto& rule : bucket->second) {
                    if (i + rule.tokens.size() > tokens.size()) continue;
                    bool ok = true;
                    for (std::size_t k = 1; k < rule.tokens.size() && ok; ++k)
                        ok = tokens[i + k].text == rule.tokens[k];
                    if (ok) {
                        matched = &rule;
                        break;
                    }
                }
            }
            if (matched != nullptr) {
                std::string original;
                for (std::size_t k = 0; k < matched->tokens.size(); ++k) original += tokens[i + k].text;
                substitute(tok, std::move(original), matched->replacement, SubstitutionKind::Keyword);
                if (matched->note) warn(DiagnosticKind::DroppedAmbiguity, tok, *matched->note);
                i += matched->tokens.size();
                continue;
            }
        }

        if (tok.kind == TokenKind::Number) {
            std::string out;
            if (forward) {
                bool local = false, ascii = false, foreign = false;
                for (std::size_t pos = 0; pos < tok.text.size();) {
                    const auto d = unicode::decode(tok.text, pos);
                    const std::string_view ch = std::string_view(tok.text).substr(pos, d.length);
                    pos += d.length;
                    if (auto it = t.forward_digits.find(std::string(ch)); it != t.forward_digits.end()) {
                        out += it->second;
                        local = true;
                        continue;
                    }
                    if (d.cp >= '0' && d.cp <= '9') ascii = true;
                    else if (unicode::is_decimal_digit(d.cp)) foreign = true;
                    out += ch;
                }
                if (local && ascii) {
                    warn(DiagnosticKind::MixedScriptNumber, tok,
                         "number " + dq(tok.text) + " mixes ASCII and local digits");
                }
                if (foreign) {
                    warn(DiagnosticKind::ForeignDigits, tok,
                         "number " + dq(tok.text) + " has digits this pack does not translate");
                }
            } else if (!t.reverse_digits.empty() && !is_radix_prefixed(tok.text)) {
                for (char c : tok.text) {
                    if (auto it = t.reverse_digits.find(c); it != t.reverse_digits.end()) out += it->second;
                    else out += c;
                }
            } else {
                out = tok.text;
            }
            if (out != tok.text) substitute(tok, tok.text, out, SubstitutionKind::Digit);
            else result.output += tok.text;
            ++i;
            continue;
        }

        if (tok.kind == TokenKind::Punct) {
            const auto& map = forward ? t.forward_punct : t.reverse_punct;
            if (auto it = map.find(tok.text); it != map.end()) {
                substitute(tok, tok.text, it->second, SubstitutionKind::Punctuation);
                ++i;
                continue;
            }
        }

        if (rename && tok.kind == TokenKind::Word && !unicode::is_ascii(tok.text)) {
            auto assigned = renamer.assign(tok.text);
            if (assigned.collided && assigned.first_use) {
                warn(DiagnosticKind::IdentifierCollision, tok,
                     "identifier " + dq(tok.text) + " renamed to " + dq(assigned.name) +
                         " to avoid a clash");
            }
            substitute(tok, tok.text, assigned.name, SubstitutionKind::Identifier);
            ++i;
            continue;
        }

        result.output += tok.text;
        ++i;
    }
    return result;
}

TranslationResult translate(std::string_view source, const LanguagePack& pack, Direction direction,
                            bool translate_identifiers) {
    return Translator(pack).translate(source, direction, {translate_identifiers});
}

TranslationResult pivot(std::string_view source, const Translator& from, const Translator& to) {
    auto first = from.translate(source, Direction::Forward);
    auto second = to.translate(first.output, Direction::Reverse);
    TranslationResult out;
    out.output = std::move(second.output);
    out.substitutions = std::move(first.substitutions);
    out.substitutions.insert(out.substitutions.end(), second.substitutions.begin(), second.substitutions.end());
    out.warnings = std::move(first.warnings);
    for (auto& w : second.warnings) {
        if (std::find(out.warnings.begin(), out.warnings.end(), w) == out.warnings.end())
            out.warnings.push_back(std::move(w));
    }
    return out;
}

TranslationResult pivot(std::string_view source, const LanguagePack& from, const LanguagePack& to) {
    return pivot(source, Translator(from), Translator(to));
}

std::string_view to_string(SubstitutionKind kind) {
    switch (kind) {
        case SubstitutionKind::Keyword: return "keyword";
        case SubstitutionKind::Digit: return "digit";
        case SubstitutionKind::Punctuation: return "punctuation";
        case SubstitutionKind::Identifier: return "identifier";
    }
    return "?";
}

std::string_view to_string(Direction direction) {
    return direction == Direction::Forward ? "forward" : "reverse";
}

}  // namespace unipy::translator
