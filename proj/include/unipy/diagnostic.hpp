#pragma once

#include <string>
#include <string_view>

namespace unipy {

enum class DiagnosticKind {
    UnterminatedString,
    DroppedAmbiguity,
    MixedScriptNumber,
    ForeignDigits,
    OpaqueKeySkip,
    IdentifierCollision,
};

/// A non-fatal note attached to a source position (1-based; 0 when the note
/// has no position).
struct Diagnostic {
    DiagnosticKind kind;
    int line = 0;
    int col = 0;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

std::string_view to_string(DiagnosticKind kind);

/// "line:col: message", or just the message when unpositioned.
std::string format(const Diagnostic& d);

}  // namespace unipy
