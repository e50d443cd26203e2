#pragma once

#include <utility>
#include <vector>

#include "archdl/ast.hpp"
#include "archdl/diagnostic.hpp"
#include "archdl/model.hpp"

namespace archdl {

// Resolves references, checks metamodel conformance and produces the frozen
// model. A model is produced even when errors exist; offending declarations
// are omitted so downstream tooling can still report.
std::pair<ArchitectureModel, std::vector<Diagnostic>> lower(const ast::ModelAst& ast);

}  // namespace archdl
