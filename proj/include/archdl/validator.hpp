#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "archdl/diagnostic.hpp"
#include "archdl/model.hpp"
#include "archdl/tracer.hpp"

namespace archdl {

struct RuleInfo {
    std::string code;
    Severity default_severity;
    std::string description;
    std::string concern;
};

// The fixed rule catalog, in canonical order.
const std::vector<RuleInfo>& rule_catalog();

// Per-rule enable/disable and severity overrides.
class RuleConfig {
public:
    // Unknown rule codes are rejected.
    bool set(const std::string& code, bool enabled, std::optional<Severity> severity);

    bool enabled(const std::string& code) const;
    Severity severity(const std::string& code) const;

private:
    struct Entry {
        bool enabled = true;
        std::optional<Severity> severity;
    };
    std::map<std::string, Entry> entries_;
};

// Loads the line-oriented config format: `rule <CODE> off|error|warning|info`.
// Blank lines and `#` comments are ignored.
std::pair<RuleConfig, std::vector<Diagnostic>> parse_rule_config(std::string_view text,
                                                                 std::string source_name);

// Runs every enabled rule; findings ordered by rule code, then subject id.
std::vector<Diagnostic> validate(const ArchitectureModel& model,
                                 const RuleConfig& config = RuleConfig{});

struct SeamGap {
    std::string seam;
    std::vector<Diagnostic> diagnostics;  // findings of the seam's gap rule
    SeamCoverage coverage;
};

struct GapReport {
    std::vector<SeamGap> seams;  // in seam_catalog order
};

GapReport gap_report(const ArchitectureModel& model, const RuleConfig& config = RuleConfig{});

// Link selection used by the orphan rule: the realization chain plus dialog
// data/form links and class hosting, with module ownership and deployment
// traversed from the owned side. An element is an orphan when its backward
// closure under these options contains no business process.
TraceOptions orphan_trace_options();

}  // namespace archdl
