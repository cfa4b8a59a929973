#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace unipy::translator {

/// Deterministic ASCII romanization of one identifier. ASCII identifiers are
/// returned unchanged. The result is always a valid Python identifier that is
/// not a keyword.
std::string transliterate_identifier(std::string_view word);

/// Assigns final ASCII names within one translation unit. Every occurrence of
/// a source identifier gets the same name; a later identifier whose
/// romanization is already taken gets "_2", "_3", ...
class IdentifierRenamer {
public:
    struct Assignment {
        std::string name;
        bool collided = false;
        bool first_use = false;
    };

    /// Names that already exist in the unit and must not be handed out.
    void reserve(std::string_view name);

    Assignment assign(std::string_view source_word);

private:
    std::unordered_map<std::string, std::string> by_source_;
    std::unordered_set<std::string> taken_;
};

}  // namespace unipy::translator
