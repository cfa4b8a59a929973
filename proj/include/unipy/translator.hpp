#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "unipy/diagnostic.hpp"
#include "unipy/langpack.hpp"

namespace unipy::translator {

enum class Direction {
    Forward,  // local -> English
    Reverse,  // English -> local
};

enum class SubstitutionKind { Keyword, Digit, Punctuation, Identifier };

struct Substitution {
    int line = 0;
    int col = 0;
    std::string original;
    std::string replacement;
    SubstitutionKind kind = SubstitutionKind::Keyword;

    bool operator==(const Substitution&) const = default;
};

struct TranslationResult {
    std::string output;
    std::vector<Substitution> substitutions;
    std::vector<Diagnostic> warnings;
};

struct TranslateOptions {
    /// Romanize non-ASCII identifiers that match no keyword (forward only).
    bool translate_identifiers = false;
};

/// A language pack validated and compiled for both directions. Immutable
/// after construction, so one instance can serve concurrent translations.
class Translator {
public:
    /// Throws PackError (Invalid) if the pack has validation errors.
    explicit Translator(langpack::LanguagePack pack);
    ~Translator();
    Translator(Translator&&) noexcept;
    Translator& operator=(Translator&&) noexcept;

    TranslationResult translate(std::string_view source, Direction direction,
                                const TranslateOptions& options = {}) const;

    const langpack::LanguagePack& pack() const;
    const langpack::ReversePack& reverse_pack() const;

private:
    struct Tables;
    std::unique_ptr<Tables> tables_;
};

TranslationResult translate(std::string_view source, const langpack::LanguagePack& pack,
                            Direction direction, bool translate_identifiers = false);

/// Forward through `from`, then reverse through `to`. Substitution positions
/// of the second pass refer to the intermediate English text.
TranslationResult pivot(std::string_view source, const langpack::LanguagePack& from,
                        const langpack::LanguagePack& to);
TranslationResult pivot(std::string_view source, const Translator& from, const Translator& to);

std::string_view to_string(SubstitutionKind kind);
std::string_view to_string(Direction direction);

}  // namespace unipy::translator
