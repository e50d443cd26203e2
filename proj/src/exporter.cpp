#include "archdl/exporter.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace archdl {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dot_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

ordered_json location_to_json(const std::optional<SourceLocation>& location) {
    if (!location) return nullptr;
    ordered_json j;
    j["file"] = location->file;
    j["line"] = location->line;
    j["column"] = location->column;
    return j;
}

std::string joined(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (const auto& part : parts) {
        if (!out.empty()) out += sep;
        out += part;
    }
    return out;
}

std::string format_ratio(const SeamCoverage& coverage) {
    std::ostringstream out;
    out << coverage.realized << "/" << coverage.total << " (";
    out.precision(2);
    out << std::fixed << coverage.ratio() << ")";
    return out.str();
}

}  // namespace

std::string render_diagnostics(const std::vector<Diagnostic>& diagnostics,
                               DiagnosticsFormat format) {
    if (format == DiagnosticsFormat::Text) {
        std::string out;
        for (const auto& d : diagnostics) {
            out += std::string(to_string(d.severity)) + " " + d.code + " " +
                   joined(d.subjects, ",") + ": " + d.message;
            if (d.location) out += " [" + d.location->to_string() + "]";
            out += "\n";
        }
        return out;
    }
    ordered_json array = ordered_json::array();
    for (const auto& d : diagnostics) {
        ordered_json j;
        j["code"] = d.code;
        j["severity"] = to_string(d.severity);
        j["subjects"] = d.subjects;
        j["message"] = d.message;
        j["location"] = location_to_json(d.location);
        array.push_back(std::move(j));
    }
    return array.dump(2) + "\n";
}

std::optional<ExportScope> ExportScope::parse(const std::string& token) {
    if (token == "all") return all();
    static const std::map<std::string, Layer> layers = {
        {"business", Layer::Business},   {"functional", Layer::Functional},
        {"component", Layer::Component}, {"data", Layer::Data},
        {"technology", Layer::Technology},
    };
    auto it = layers.find(token);
    if (it != layers.end()) return of_layer(it->second);
    if (token.size() == 5 && token.rfind("seam", 0) == 0 && token[4] >= '1' && token[4] <= '4') {
        return of_seam(static_cast<std::size_t>(token[4] - '1'));
    }
    return std::nullopt;
}

std::string export_dot(const ArchitectureModel& model, const ExportScope& scope) {
    std::set<std::string> ids;
    std::vector<const Link*> edges;

    if (scope.kind == ExportScope::All || scope.kind == ExportScope::ByLayer) {
        for (const auto& [id, element] : model.elements()) {
            if (scope.kind == ExportScope::All || layer_of(element.kind) == scope.layer) {
                ids.insert(id);
            }
        }
        for (const Link& link : model.links()) {
            if (ids.count(link.src) && ids.count(link.dst)) edges.push_back(&link);
        }
    } else {
        const Seam& seam = seam_catalog().at(scope.seam_index);
        for (const auto& id : seam_subjects(model, seam)) ids.insert(id);
        for (const Link& link : model.links()) {
            bool realizes = link.kind == seam.realization_link ||
                            (seam.realization_link == LinkKind::SVC_DIALOG &&
                             link.kind == LinkKind::IMPLEMENTS);
            if (realizes) {
                edges.push_back(&link);
                ids.insert(link.src);
                ids.insert(link.dst);
            }
        }
    }

    std::ostringstream out;
    out << "digraph architecture {\n";
    out << "  rankdir=LR;\n";
    for (const auto& id : ids) {
        const Element& element = model.at(id);
        out << "  \"" << dot_escape(id) << "\" [label=\""
            << to_string(element.kind) << ": " << dot_escape(element.name) << "\"];\n";
    }
    for (const Link* link : edges) {
        out << "  \"" << dot_escape(link->src) << "\" -> \"" << dot_escape(link->dst)
            << "\" [label=\"" << to_string(link->kind) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_plantuml_deployment(const ArchitectureModel& model) {
    std::ostringstream out;
    out << "@startuml\n";
    std::set<std::string> deployed;
    for (const auto& id : model.elements_of_kind(ElementKind::HardwareNode)) {
        const Element& node = model.at(id);
        out << "node \"" << dot_escape(node.name) << "\" as " << id << " {\n";
        for (const auto& target : model.out_neighbors(id, LinkKind::DEPLOYS)) {
            deployed.insert(target);
            out << "  component \"" << dot_escape(model.at(target).name) << "\" as " << target
                << "\n";
        }
        out << "}\n";
        auto requirements = node.attributes.find("requirements");
        if (requirements != node.attributes.end()) {
            out << "note right of " << id << "\n  " << requirements->second << "\nend note\n";
        }
    }
    std::vector<std::string> components = model.elements_of_kind(ElementKind::FunctionalComponent);
    for (const auto& id : model.elements_of_kind(ElementKind::ExternalSystem)) {
        components.push_back(id);
    }
    std::sort(components.begin(), components.end());
    for (const auto& id : components) {
        if (deployed.count(id)) continue;
        out << "component \"" << dot_escape(model.at(id).name) << "\" as " << id << "\n";
    }
    out << "@enduml\n";
    return out.str();
}

namespace {

class ArchdocWriter {
public:
    ArchdocWriter(const ArchitectureModel& model, const std::vector<Diagnostic>& diagnostics,
                  const CoverageReport& coverage)
        : model_(model), diagnostics_(diagnostics), coverage_(coverage) {}

    std::string run() {
        out_ << "# Architecture Description\n";
        business();
        services();
        functional();
        component();
        data();
        deployment();
        traceability();
        validation();
        return out_.str();
    }

private:
    void section(const std::string& title) { out_ << "\n## " << title << "\n\n"; }

    void placeholder_if(bool empty) {
        if (empty) out_ << "none\n";
    }

    std::string label(const std::string& id) { return "**" + id + "** " + model_.at(id).name; }

    void business() {
        section("Business Architecture");
        auto processes = model_.elements_of_kind(ElementKind::BusinessProcess);
        placeholder_if(processes.empty());
        for (const auto& id : processes) {
            out_ << "- " << label(id) << "\n";
            tree(id, 1);
        }
    }

    void tree(const std::string& id, int depth) {
        for (const auto& child : model_.out_neighbors(id, LinkKind::DECOMPOSES)) {
            const Element& element = model_.at(child);
            out_ << std::string(std::size_t(depth) * 2, ' ') << "- " << label(child);
            if (element.kind == ElementKind::BusinessOperation) {
                if (element.automated) out_ << " (automated)";
                auto performer = element.attributes.find("performer");
                if (performer != element.attributes.end()) {
                    out_ << ", performer: " << performer->second;
                }
            }
            out_ << "\n";
            tree(child, depth + 1);
        }
    }

    void services() {
        section("Operational Services");
        bool any = false;
        for (const auto& op : model_.elements_of_kind(ElementKind::BusinessOperation)) {
            for (const auto& svc : model_.out_neighbors(op, LinkKind::HAS_SERVICE)) {
                any = true;
                out_ << "- " << label(op) << " -> **" << svc << "**\n";
                for (const auto& fn : model_.out_neighbors(svc, LinkKind::CONTAINS_AUTOFN)) {
                    out_ << "  - " << label(fn) << "\n";
                }
            }
        }
        placeholder_if(!any);
    }

    void functional() {
        section("Functional Architecture");
        auto dialogs = model_.elements_of_kind(ElementKind::Dialog);
        placeholder_if(dialogs.empty());
        for (const auto& id : dialogs) {
            const Element& dialog = model_.at(id);
            out_ << "- " << label(id) << "\n";
            auto agent = dialog.attributes.find("agent");
            if (agent != dialog.attributes.end()) out_ << "  - agent: " << agent->second << "\n";
            for (const auto& obj : model_.out_neighbors(id, LinkKind::INPUT)) {
                out_ << "  - input: " << label(obj) << "\n";
            }
            for (const auto& obj : model_.out_neighbors(id, LinkKind::OUTPUT)) {
                out_ << "  - output: " << label(obj) << "\n";
            }
            for (const auto& form : model_.out_neighbors(id, LinkKind::HAS_FORM)) {
                out_ << "  - form: " << model_.at(form).name << "\n";
            }
            for (const auto& fn : model_.out_neighbors(id, LinkKind::HAS_VIEWFN)) {
                out_ << "  - view function: " << label(fn);
                auto category = model_.at(fn).attributes.find("category");
                if (category != model_.at(fn).attributes.end()) {
                    out_ << " [" << category->second << "]";
                }
                out_ << "\n";
            }
        }
    }

    void component() {
        section("Component Architecture");
        std::vector<std::string> components =
            model_.elements_of_kind(ElementKind::FunctionalComponent);
        for (const auto& id : model_.elements_of_kind(ElementKind::ExternalSystem)) {
            components.push_back(id);
        }
        std::sort(components.begin(), components.end());
        placeholder_if(components.empty());
        for (const auto& id : components) {
            out_ << "- " << label(id);
            if (model_.at(id).kind == ElementKind::ExternalSystem) out_ << " (external)";
            out_ << "\n";
            for (const auto& module : model_.out_neighbors(id, LinkKind::OWNS_MODULE)) {
                out_ << "  - " << label(module) << "\n";
            }
        }
    }

    void data() {
        section("Data Architecture");
        auto classes = model_.elements_of_kind(ElementKind::EntityClass);
        placeholder_if(classes.empty());
        for (const auto& id : classes) {
            out_ << "- " << label(id);
            auto hosts = model_.in_neighbors(id, LinkKind::HOSTS_CLASS);
            if (!hosts.empty()) out_ << " (hosted by " << joined(hosts, ", ") << ")";
            out_ << "\n";
            for (const auto& method : model_.out_neighbors(id, LinkKind::OWNS_METHOD)) {
                out_ << "  - " << label(method) << "\n";
            }
        }
    }

    void deployment() {
        section("Deployment");
        auto nodes = model_.elements_of_kind(ElementKind::HardwareNode);
        placeholder_if(nodes.empty());
        for (const auto& id : nodes) {
            const Element& node = model_.at(id);
            out_ << "- " << label(id);
            auto requirements = node.attributes.find("requirements");
            if (requirements != node.attributes.end()) {
                out_ << " (requirements: " << requirements->second << ")";
            }
            out_ << "\n";
            for (const auto& target : model_.out_neighbors(id, LinkKind::DEPLOYS)) {
                out_ << "  - " << label(target) << "\n";
            }
        }
    }

    void traceability() {
        section("Traceability");
        auto pairs =
            trace_matrix(model_, ElementKind::BusinessOperation, ElementKind::ClassMethod);
        placeholder_if(pairs.empty());
        for (const auto& [from, to] : pairs) {
            out_ << "- " << from << " -> " << to << "\n";
        }
    }

    void validation() {
        section("Validation Summary");
        for (const auto& seam : coverage_.seams) {
            out_ << "- coverage " << seam.seam << ": " << format_ratio(seam) << "\n";
        }
        std::size_t errors = 0, warnings = 0, infos = 0;
        for (const auto& d : diagnostics_) {
            if (d.severity == Severity::Error) ++errors;
            else if (d.severity == Severity::Warning) ++warnings;
            else ++infos;
        }
        out_ << "- diagnostics: " << errors << " errors, " << warnings << " warnings, "
             << infos << " infos\n";
    }

    const ArchitectureModel& model_;
    const std::vector<Diagnostic>& diagnostics_;
    const CoverageReport& coverage_;
    std::ostringstream out_;
};

}  // namespace

std::string render_archdoc(const ArchitectureModel& model,
                           const std::vector<Diagnostic>& diagnostics,
                           const CoverageReport& coverage) {
    return ArchdocWriter(model, diagnostics, coverage).run();
}

std::string model_to_json(const ArchitectureModel& model) {
    ordered_json root;
    root["elements"] = ordered_json::array();
    for (const auto& [id, element] : model.elements()) {
        ordered_json j;
        j["id"] = id;
        j["kind"] = to_string(element.kind);
        j["name"] = element.name;
        j["attributes"] = ordered_json::object();
        for (const auto& [key, value] : element.attributes) j["attributes"][key] = value;
        j["automated"] = element.automated;
        j["location"] = location_to_json(element.location);
        root["elements"].push_back(std::move(j));
    }
    std::vector<const Link*> links;
    for (const Link& link : model.links()) links.push_back(&link);
    std::sort(links.begin(), links.end(), [](const Link* a, const Link* b) {
        return std::tuple(to_string(a->kind), a->src, a->dst) <
               std::tuple(to_string(b->kind), b->src, b->dst);
    });
    root["links"] = ordered_json::array();
    for (const Link* link : links) {
        ordered_json j;
        j["kind"] = to_string(link->kind);
        j["src"] = link->src;
        j["dst"] = link->dst;
        j["location"] = location_to_json(link->location);
        root["links"].push_back(std::move(j));
    }
    return root.dump(2) + "\n";
}

namespace {

SourceLocation location_from_json(const ordered_json& j) {
    SourceLocation location;
    if (j.is_object()) {
        location.file = j.value("file", "");
        location.line = j.value("line", 1);
        location.column = j.value("column", 1);
    }
    return location;
}

}  // namespace

std::pair<ArchitectureModel, std::vector<Diagnostic>> model_from_json(const std::string& text) {
    std::vector<Diagnostic> diagnostics;
    auto fail = [&](std::string message) {
        Diagnostic d;
        d.code = "E-JSON";
        d.severity = Severity::Error;
        d.subjects = {"<input>"};
        d.message = std::move(message);
        diagnostics.push_back(std::move(d));
    };

    ordered_json root = ordered_json::parse(text, nullptr, false);
    if (root.is_discarded() || !root.is_object()) {
        fail("input is not a JSON model");
        return {ArchitectureModel{}, std::move(diagnostics)};
    }
    ModelBuilder builder;
    for (const auto& j : root.value("elements", ordered_json::array())) {
        Element element;
        element.id = j.value("id", "");
        auto kind = element_kind_from_string(j.value("kind", ""));
        if (element.id.empty() || !kind) {
            fail("element entry is missing a valid id or kind");
            continue;
        }
        element.kind = *kind;
        element.name = j.value("name", "");
        if (j.contains("attributes")) {
            for (const auto& [key, value] : j["attributes"].items()) {
                element.attributes[key] = value.get<std::string>();
            }
        }
        element.automated = j.value("automated", false);
        element.location = location_from_json(j.value("location", ordered_json()));
        if (auto d = builder.add_element(std::move(element))) diagnostics.push_back(std::move(*d));
    }
    for (const auto& j : root.value("links", ordered_json::array())) {
        Link link;
        auto kind = link_kind_from_string(j.value("kind", ""));
        if (!kind) {
            fail("link entry has an unknown kind");
            continue;
        }
        link.kind = *kind;
        link.src = j.value("src", "");
        link.dst = j.value("dst", "");
        link.location = location_from_json(j.value("location", ordered_json()));
        if (auto d = builder.add_link(std::move(link))) {
            if (d->severity != Severity::Info) diagnostics.push_back(std::move(*d));
        }
    }
    return {std::move(builder).freeze(), std::move(diagnostics)};
}

std::string render_trace(const ArchitectureModel& model, const TraceResult& result) {
    std::ostringstream out;
    out << "trace " << (result.direction == TraceDirection::Forward ? "forward" : "backward")
        << " from " << result.root << "\n";
    for (const auto& [layer, ids] : result.reached) {
        out << to_string(layer) << ":\n";
        for (const auto& id : ids) out << "  " << id << " " << model.at(id).name << "\n";
    }
    out << "edges:\n";
    for (const Link& link : result.edges) {
        out << "  " << link.src << " -" << to_string(link.kind) << "-> " << link.dst << "\n";
    }
    return out.str();
}

std::string render_gap_report(const GapReport& report) {
    std::ostringstream out;
    for (const auto& seam : report.seams) {
        out << "seam " << seam.seam << ": coverage " << format_ratio(seam.coverage) << "\n";
        for (const auto& d : seam.diagnostics) {
            out << "  " << to_string(d.severity) << " " << d.code << " "
                << joined(d.subjects, ",") << ": " << d.message << "\n";
        }
    }
    return out.str();
}

std::string render_coverage(const CoverageReport& report) {
    std::ostringstream out;
    for (const auto& seam : report.seams) {
        out << seam.seam << ": " << format_ratio(seam) << "\n";
    }
    return out.str();
}

std::string trace_to_json(const TraceResult& result) {
    ordered_json j;
    j["root"] = result.root;
    j["direction"] = result.direction == TraceDirection::Forward ? "forward" : "backward";
    j["reached"] = ordered_json::object();
    for (const auto& [layer, ids] : result.reached) {
        j["reached"][std::string(to_string(layer))] = ids;
    }
    j["edges"] = ordered_json::array();
    for (const Link& link : result.edges) {
        ordered_json edge;
        edge["kind"] = to_string(link.kind);
        edge["src"] = link.src;
        edge["dst"] = link.dst;
        j["edges"].push_back(std::move(edge));
    }
    return j.dump(2) + "\n";
}

namespace {

ordered_json coverage_entry(const SeamCoverage& seam) {
    ordered_json j;
    j["seam"] = seam.seam;
    j["realized"] = seam.realized;
    j["total"] = seam.total;
    j["ratio"] = seam.ratio();
    return j;
}

}  // namespace

std::string gap_report_to_json(const GapReport& report) {
    ordered_json array = ordered_json::array();
    for (const auto& seam : report.seams) {
        ordered_json j = coverage_entry(seam.coverage);
        j["diagnostics"] = ordered_json::parse(
            render_diagnostics(seam.diagnostics, DiagnosticsFormat::Json));
        array.push_back(std::move(j));
    }
    return array.dump(2) + "\n";
}

std::string coverage_to_json(const CoverageReport& report) {
    ordered_json array = ordered_json::array();
    for (const auto& seam : report.seams) array.push_back(coverage_entry(seam));
    return array.dump(2) + "\n";
}

std::string trace_to_dot(const ArchitectureModel& model, const TraceResult& result) {
    std::ostringstream out;
    out << "digraph trace {\n  rankdir=LR;\n";
    for (const auto& id : result.reached_ids()) {
        const Element& element = model.at(id);
        out << "  \"" << dot_escape(id) << "\" [label=\"" << to_string(element.kind) << ": "
            << dot_escape(element.name) << "\"];\n";
    }
    for (const Link& link : result.edges) {
        out << "  \"" << dot_escape(link.src) << "\" -> \"" << dot_escape(link.dst)
            << "\" [label=\"" << to_string(link.kind) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace archdl
