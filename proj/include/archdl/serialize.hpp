#pragma once

#include <string>

#include "archdl/model.hpp"

namespace archdl {

// Canonical ADL text: processes, dialogs, components/external systems,
// classes, nodes, then bind statements; each group ascending by element id;
// two-space indentation. Lowering the output reproduces the model.
std::string serialize(const ArchitectureModel& model);

}  // namespace archdl
