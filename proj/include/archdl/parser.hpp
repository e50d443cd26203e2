#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "archdl/ast.hpp"
#include "archdl/diagnostic.hpp"

namespace archdl {

// Parses ADL text. Syntax errors are reported as E-SYNTAX diagnostics and
// parsing resumes at the next top-level block; invalid UTF-8 yields a single
// E-ENCODING diagnostic and an empty AST.
std::pair<ast::ModelAst, std::vector<Diagnostic>> parse(std::string_view text,
                                                        std::string source_name);

}  // namespace archdl
