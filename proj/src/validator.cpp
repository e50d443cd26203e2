#include "archdl/validator.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <tuple>

namespace archdl {

namespace {

using EK = ElementKind;
using LK = LinkKind;

const std::vector<RuleInfo>& catalog() {
    static const std::vector<RuleInfo> rules = {
        {"R-BF-LEAF", Severity::Error,
         "business function with no decomposition", "business decomposition"},
        {"R-DECOMP-CYCLE", Severity::Error,
         "cycle among decomposition links", "business decomposition"},
        {"R-OP-NOSVC", Severity::Error,
         "automated business operation without an operational service",
         "business decomposition"},
        {"R-SVC-NOAF", Severity::Warning,
         "operational service without automated functions", "business decomposition"},
        {"R-SVC-NODLG", Severity::Error,
         "operational service not decomposed into dialogs", "seam: business-functional"},
        {"R-AF-NODLG", Severity::Warning,
         "automated function not implemented in a dialog while sibling functions are",
         "seam: business-functional"},
        {"R-DLG-NOVF", Severity::Error, "dialog without view functions",
         "functional architecture"},
        {"R-DLG-NOIO", Severity::Warning,
         "dialog missing its source resource or target product", "functional architecture"},
        {"R-DLG-NOFORM", Severity::Warning,
         "user-facing dialog without a dialog form", "functional architecture"},
        {"R-VF-NOMOD", Severity::Error,
         "view function not decomposed into software modules", "seam: functional-component"},
        {"R-MOD-NOCOMP", Severity::Error,
         "software module owned by no component", "component architecture"},
        {"R-MOD-MULTICOMP", Severity::Error,
         "software module owned by more than one component", "component architecture"},
        {"R-MOD-NOMETH", Severity::Error,
         "software module not decomposed into class methods", "seam: component-data"},
        {"R-METH-NOCLASS", Severity::Error,
         "class method not owned by exactly one entity class", "data architecture"},
        {"R-COMP-NONODE", Severity::Error,
         "functional component deployed on no hardware node", "seam: component-technology"},
        {"R-ORPHAN", Severity::Warning,
         "element not justified by any business process", "excess functionality"},
        {"W-EMPTY-MODEL", Severity::Warning, "model has no business process",
         "model completeness"},
    };
    return rules;
}

bool known_code(const std::string& code) {
    for (const auto& rule : catalog()) {
        if (rule.code == code) return true;
    }
    return false;
}

class Runner {
public:
    explicit Runner(const ArchitectureModel& model) : model_(model) {}

    std::vector<Diagnostic> run() {
        business_decomposition();
        decomposition_cycles();
        operations_and_services();
        dialogs();
        view_functions();
        modules_and_methods();
        components_and_nodes();
        orphans();
        if (model_.elements_of_kind(EK::BusinessProcess).empty()) {
            finding("W-EMPTY-MODEL", {"<model>"}, "model has no business process", std::nullopt);
        }
        return std::move(findings_);
    }

private:
    void finding(const std::string& code, std::vector<std::string> subjects,
                 std::string message, std::optional<SourceLocation> location) {
        Diagnostic d;
        d.code = code;
        for (const auto& rule : catalog()) {
            if (rule.code == code) d.severity = rule.default_severity;
        }
        d.subjects = std::move(subjects);
        d.message = std::move(message);
        d.location = std::move(location);
        findings_.push_back(std::move(d));
    }

    void element_finding(const std::string& code, const std::string& id, std::string message) {
        finding(code, {id}, std::move(message), model_.at(id).location);
    }

    void business_decomposition() {
        for (const auto& id : model_.elements_of_kind(EK::BusinessFunction)) {
            if (!model_.has_out(id, LK::DECOMPOSES)) {
                element_finding("R-BF-LEAF", id,
                                "business function '" + id +
                                    "' is not decomposed into functions or operations");
            }
        }
        // A process is the root of the same decomposition.
        for (const auto& id : model_.elements_of_kind(EK::BusinessProcess)) {
            if (!model_.has_out(id, LK::DECOMPOSES)) {
                element_finding("R-BF-LEAF", id,
                                "business process '" + id +
                                    "' is not decomposed into business functions");
            }
        }
    }

    void decomposition_cycles() {
        // Color DFS over DECOMPOSES edges; each back edge closes one cycle.
        std::map<std::string, int> color;  // 0 white, 1 grey, 2 black
        std::vector<std::string> stack;
        std::set<std::vector<std::string>> reported;

        std::function<void(const std::string&)> visit = [&](const std::string& node) {
            color[node] = 1;
            stack.push_back(node);
            for (const auto& next : model_.out_neighbors(node, LK::DECOMPOSES)) {
                if (color[next] == 1) {
                    auto begin = std::find(stack.begin(), stack.end(), next);
                    std::vector<std::string> cycle(begin, stack.end());
                    std::sort(cycle.begin(), cycle.end());
                    if (reported.insert(cycle).second) {
                        finding("R-DECOMP-CYCLE", cycle,
                                "decomposition links form a cycle through '" + next + "'",
                                model_.at(next).location);
                    }
                } else if (color[next] == 0) {
                    visit(next);
                }
            }
            stack.pop_back();
            color[node] = 2;
        };

        for (const auto& [id, element] : model_.elements()) {
            bool decomposable = element.kind == EK::BusinessProcess ||
                                element.kind == EK::BusinessFunction ||
                                element.kind == EK::BusinessOperation;
            if (decomposable && color[id] == 0) visit(id);
        }
    }

    void operations_and_services() {
        for (const auto& id : model_.elements_of_kind(EK::BusinessOperation)) {
            if (model_.at(id).automated && !model_.has_out(id, LK::HAS_SERVICE)) {
                element_finding("R-OP-NOSVC", id,
                                "automated operation '" + id + "' has no operational service");
            }
        }
        const Seam& seam = seam_catalog()[0];
        for (const auto& id : model_.elements_of_kind(EK::OperationalService)) {
            if (!model_.has_out(id, LK::CONTAINS_AUTOFN)) {
                element_finding("R-SVC-NOAF", id,
                                "service '" + id + "' declares no automated functions");
            }
            if (!seam_realized(model_, seam, id)) {
                element_finding("R-SVC-NODLG", id,
                                "service '" + id + "' is not decomposed into dialogs");
            }
        }
        for (const auto& id : model_.elements_of_kind(EK::AutomatedFunction)) {
            if (model_.has_out(id, LK::IMPLEMENTS)) continue;
            bool sibling_wired = false;
            for (const auto& service : model_.in_neighbors(id, LK::CONTAINS_AUTOFN)) {
                for (const auto& sibling : model_.out_neighbors(service, LK::CONTAINS_AUTOFN)) {
                    if (sibling != id && model_.has_out(sibling, LK::IMPLEMENTS)) {
                        sibling_wired = true;
                    }
                }
            }
            if (sibling_wired) {
                element_finding("R-AF-NODLG", id,
                                "automated function '" + id +
                                    "' is not implemented in any dialog");
            }
        }
    }

    void dialogs() {
        for (const auto& id : model_.elements_of_kind(EK::Dialog)) {
            const Element& dialog = model_.at(id);
            if (!model_.has_out(id, LK::HAS_VIEWFN)) {
                element_finding("R-DLG-NOVF", id, "dialog '" + id + "' has no view functions");
            }
            if (!model_.has_out(id, LK::INPUT) || !model_.has_out(id, LK::OUTPUT)) {
                element_finding("R-DLG-NOIO", id,
                                "dialog '" + id +
                                    "' is missing its source resource or target product");
            }
            auto agent = dialog.attributes.find("agent");
            if (agent != dialog.attributes.end() && agent->second == "user" &&
                !model_.has_out(id, LK::HAS_FORM)) {
                element_finding("R-DLG-NOFORM", id,
                                "user-facing dialog '" + id + "' has no form");
            }
        }
    }

    void view_functions() {
        const Seam& seam = seam_catalog()[1];
        for (const auto& id : model_.elements_of_kind(EK::ViewFunction)) {
            if (!seam_realized(model_, seam, id)) {
                element_finding("R-VF-NOMOD", id,
                                "view function '" + id +
                                    "' is not decomposed into software modules");
            }
        }
    }

    void modules_and_methods() {
        const Seam& seam = seam_catalog()[2];
        auto seam_modules = seam_subjects(model_, seam);
        for (const auto& id : model_.elements_of_kind(EK::SoftwareModule)) {
            std::size_t owners = model_.in_degree(id, LK::OWNS_MODULE);
            if (owners == 0) {
                element_finding("R-MOD-NOCOMP", id, "module '" + id + "' has no owning component");
            } else if (owners > 1) {
                element_finding("R-MOD-MULTICOMP", id,
                                "module '" + id + "' is owned by " + std::to_string(owners) +
                                    " components");
            }
        }
        for (const auto& id : seam_modules) {
            if (!seam_realized(model_, seam, id)) {
                element_finding("R-MOD-NOMETH", id,
                                "module '" + id + "' is not decomposed into class methods");
            }
        }
        for (const auto& id : model_.elements_of_kind(EK::ClassMethod)) {
            std::size_t owners = model_.in_degree(id, LK::OWNS_METHOD);
            if (owners != 1) {
                element_finding("R-METH-NOCLASS", id,
                                "method '" + id + "' belongs to " + std::to_string(owners) +
                                    " entity classes, expected exactly one");
            }
        }
    }

    void components_and_nodes() {
        const Seam& seam = seam_catalog()[3];
        for (const auto& id : model_.elements_of_kind(EK::FunctionalComponent)) {
            if (!seam_realized(model_, seam, id)) {
                element_finding("R-COMP-NONODE", id,
                                "component '" + id + "' is deployed on no hardware node");
            }
        }
    }

    void orphans() {
        TraceOptions options = orphan_trace_options();
        for (const auto& [id, element] : model_.elements()) {
            if (layer_of(element.kind) == Layer::Business) continue;
            bool justified = false;
            for (const auto& reached :
                 trace(model_, id, TraceDirection::Backward, options).reached_ids()) {
                if (model_.at(reached).kind == EK::BusinessProcess) justified = true;
            }
            if (!justified) {
                element_finding("R-ORPHAN", id,
                                "'" + id + "' is not justified by any business process");
            }
        }
    }

    const ArchitectureModel& model_;
    std::vector<Diagnostic> findings_;
};

}  // namespace

const std::vector<RuleInfo>& rule_catalog() { return catalog(); }

TraceOptions orphan_trace_options() {
    TraceOptions options = TraceOptions::defaults();
    options.follow.push_back(LK::INPUT);
    options.follow.push_back(LK::OUTPUT);
    options.follow.push_back(LK::HAS_FORM);
    options.follow.push_back(LK::HOSTS_CLASS);
    options.follow_reversed = {LK::OWNS_MODULE, LK::DEPLOYS};
    return options;
}

bool RuleConfig::set(const std::string& code, bool enabled, std::optional<Severity> severity) {
    if (!known_code(code)) return false;
    entries_[code] = {enabled, severity};
    return true;
}

bool RuleConfig::enabled(const std::string& code) const {
    auto it = entries_.find(code);
    return it == entries_.end() ? true : it->second.enabled;
}

Severity RuleConfig::severity(const std::string& code) const {
    auto it = entries_.find(code);
    if (it != entries_.end() && it->second.severity) return *it->second.severity;
    for (const auto& rule : catalog()) {
        if (rule.code == code) return rule.default_severity;
    }
    return Severity::Error;
}

std::pair<RuleConfig, std::vector<Diagnostic>> parse_rule_config(std::string_view text,
                                                                 std::string source_name) {
    RuleConfig config;
    std::vector<Diagnostic> diagnostics;
    auto report = [&](std::string code, std::string message, int line) {
        Diagnostic d;
        d.code = std::move(code);
        d.severity = Severity::Error;
        d.subjects = {"<config>"};
        d.message = std::move(message);
        d.location = SourceLocation{source_name, line, 1};
        diagnostics.push_back(std::move(d));
    };

    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream fields(line);
        std::string keyword, code, action, extra;
        if (!(fields >> keyword)) continue;
        if (keyword != "rule" || !(fields >> code >> action) || (fields >> extra)) {
            report("E-RULE-SYNTAX", "expected 'rule <CODE> off|error|warning|info'", line_no);
            continue;
        }
        bool enabled = action != "off";
        std::optional<Severity> severity;
        if (enabled) {
            severity = severity_from_string(action);
            if (!severity) {
                report("E-RULE-SYNTAX", "unknown action '" + action + "'", line_no);
                continue;
            }
        }
        if (!config.set(code, enabled, severity)) {
            report("E-RULE-UNKNOWN", "unknown rule code '" + code + "'", line_no);
        }
    }
    return {std::move(config), std::move(diagnostics)};
}

std::vector<Diagnostic> validate(const ArchitectureModel& model, const RuleConfig& config) {
    std::vector<Diagnostic> findings = Runner(model).run();
    std::vector<Diagnostic> result;
    for (auto& finding : findings) {
        if (!config.enabled(finding.code)) continue;
        finding.severity = config.severity(finding.code);
        result.push_back(std::move(finding));
    }
    std::sort(result.begin(), result.end(), [](const Diagnostic& a, const Diagnostic& b) {
        return std::tie(a.code, a.subjects, a.message) < std::tie(b.code, b.subjects, b.message);
    });
    return result;
}

GapReport gap_report(const ArchitectureModel& model, const RuleConfig& config) {
    static const std::map<std::string, std::string> gap_rule_of_seam = {
        {"business-functional", "R-SVC-NODLG"},
        {"functional-component", "R-VF-NOMOD"},
        {"component-data", "R-MOD-NOMETH"},
        {"component-technology", "R-COMP-NONODE"},
    };
    std::vector<Diagnostic> findings = validate(model, config);
    CoverageReport ratios = coverage(model);
    GapReport report;
    for (std::size_t i = 0; i < seam_catalog().size(); ++i) {
        SeamGap gap;
        gap.seam = seam_catalog()[i].name;
        gap.coverage = ratios.seams[i];
        const std::string& rule = gap_rule_of_seam.at(gap.seam);
        for (const auto& finding : findings) {
            if (finding.code == rule) gap.diagnostics.push_back(finding);
        }
        report.seams.push_back(std::move(gap));
    }
    return report;
}

}  // namespace archdl
