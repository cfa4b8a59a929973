#include "unipy/diagnostic.hpp"

namespace unipy {

std::string_view to_string(DiagnosticKind kind) {
    switch (kind) {
        case DiagnosticKind::UnterminatedString: return "unterminated-string";
        case DiagnosticKind::DroppedAmbiguity: return "ambiguity";
        case DiagnosticKind::MixedScriptNumber: return "mixed-script-number";
        case DiagnosticKind::ForeignDigits: return "foreign-digits";
        case DiagnosticKind::OpaqueKeySkip: return "opaque-key-skip";
        case DiagnosticKind::IdentifierCollision: return "identifier-collision";
    }
    return "?";
}

std::string format(const Diagnostic& d) {
    if (d.line <= 0) return d.message;
    return std::to_string(d.line) + ":" + std::to_string(d.col) + ": " + d.message;
}

}  // namespace unipy
