#pragma once

#include <optional>
#include <string>
#include <vector>

#include "archdl/diagnostic.hpp"
#include "archdl/model.hpp"
#include "archdl/tracer.hpp"
#include "archdl/validator.hpp"

namespace archdl {

enum class DiagnosticsFormat { Text, Json };

// One line per diagnostic: `SEVERITY CODE subject(s): message [file:line:col]`,
// or a JSON array with keys code, severity, subjects, message, location.
std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics,
                               DiagnosticsFormat format);

struct ExportScope {
    enum Kind { All, ByLayer, BySeam } kind = All;
    Layer layer = Layer::Business;
    std::size_t seam_index = 0;  // into seam_catalog()

    static ExportScope all() { return {}; }
    static ExportScope of_layer(Layer layer) { return {ByLayer, layer, 0}; }
    static ExportScope of_seam(std::size_t index) { return {BySeam, Layer::Business, index}; }

    // "all", a layer name ("business", ...) or "seam1".."seam4".
    static std::optional<ExportScope> parse(const std::string& token);
};

// Graphviz digraph; node label `kind: name`, edge label link kind.
std::string export_dot(const ArchitectureModel& model, const ExportScope& scope = {});

// PlantUML deployment diagram; undeployed components are emitted at top
// level so deployment gaps stay visible.
std::string export_plantuml_deployment(const ArchitectureModel& model);

// Generated architecture document (Markdown).
std::string render_archdoc(const ArchitectureModel& model,
                           const std::vector<Diagnostic>& diagnostics,
                           const CoverageReport& coverage);

// JSON interchange form; model_from_json is its inverse up to structural
// equality.
std::string model_to_json(const ArchitectureModel& model);
std::pair<ArchitectureModel, std::vector<Diagnostic>> model_from_json(const std::string& text);

// Text renderings used by the CLI.
std::string render_trace(const ArchitectureModel& model, const TraceResult& result);
std::string render_gap_report(const GapReport& report);
std::string render_coverage(const CoverageReport& report);

std::string trace_to_json(const TraceResult& result);
std::string gap_report_to_json(const GapReport& report);
std::string coverage_to_json(const CoverageReport& report);
std::string trace_to_dot(const ArchitectureModel& model, const TraceResult& result);

}  // namespace archdl
