#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archdl/source_location.hpp"

namespace archdl {

enum class Severity { Error, Warning, Info };

inline std::string_view to_string(Severity severity) {
    switch (severity) {
        case Severity::Error: return "error";
        case Severity::Warning: return "warning";
        case Severity::Info: return "info";
    }
    return "error";
}

inline std::optional<Severity> severity_from_string(std::string_view text) {
    if (text == "error") return Severity::Error;
    if (text == "warning") return Severity::Warning;
    if (text == "info") return Severity::Info;
    return std::nullopt;
}

// One finding from the parser, lowering, model builder or validator.
struct Diagnostic {
    std::string code;
    Severity severity = Severity::Error;
    std::vector<std::string> subjects;
    std::string message;
    std::optional<SourceLocation> location;

    bool operator==(const Diagnostic&) const = default;
};

inline bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    for (const auto& d : diagnostics) {
        if (d.severity == Severity::Error) return true;
    }
    return false;
}

}  // namespace archdl
