#pragma once

#include <string>

namespace archdl {

// 1-based position inside an ADL source file.
struct SourceLocation {
    std::string file;
    int line = 1;
    int column = 1;

    bool operator==(const SourceLocation&) const = default;

    std::string to_string() const {
        return file + ":" + std::to_string(line) + ":" + std::to_string(column);
    }
};

}  // namespace archdl
