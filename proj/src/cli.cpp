#include "archdl/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "archdl/exporter.hpp"
#include "archdl/lower.hpp"
#include "archdl/parser.hpp"
#include "archdl/serialize.hpp"
#include "archdl/tracer.hpp"
#include "archdl/validator.hpp"

namespace archdl {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

struct CliError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw CliError{"cannot open '" + path + "'"};
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

struct LoadedModel {
    ArchitectureModel model;
    std::vector<Diagnostic> diagnostics;  // parse + lower
};

LoadedModel load_model(const std::string& path) {
    std::string text = read_file(path);
    auto [ast, parse_diags] = parse(text, path);
    for (const auto& d : parse_diags) {
        if (d.code == "E-ENCODING") throw CliError{path + ": " + d.message};
    }
    auto [model, lower_diags] = lower(ast);
    LoadedModel loaded;
    loaded.model = std::move(model);
    loaded.diagnostics = std::move(parse_diags);
    loaded.diagnostics.insert(loaded.diagnostics.end(), lower_diags.begin(), lower_diags.end());
    return loaded;
}

RuleConfig load_rules(const std::string& path) {
    auto [config, diagnostics] = parse_rule_config(read_file(path), path);
    if (!diagnostics.empty()) {
        throw CliError{path + ": " + diagnostics.front().message};
    }
    return config;
}

DiagnosticsFormat diagnostics_format(const std::string& token) {
    return token == "json" ? DiagnosticsFormat::Json : DiagnosticsFormat::Text;
}

// Surface the document's own problems on the error stream for subcommands
// whose artifact is not a diagnostics listing.
void report_load_diagnostics(const LoadedModel& loaded, std::ostream& err) {
    if (!loaded.diagnostics.empty()) {
        err << render_diagnostics(loaded.diagnostics, DiagnosticsFormat::Text);
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"architecture description toolkit"};
    app.require_subcommand(1);

    std::string input;
    std::string rules_path;
    std::string format = "text";
    std::string scope_token = "all";
    std::string direction = "forward";
    std::string from_id, on_id, from_kind, to_kind;
    bool extended = false;
    std::optional<int> depth;

    auto* check = app.add_subcommand("check", "parse and lower only");
    check->add_option("file", input)->required();
    check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* validate_cmd = app.add_subcommand("validate", "run the rule catalog");
    validate_cmd->add_option("file", input)->required();
    validate_cmd->add_option("--rules", rules_path);
    validate_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* gaps = app.add_subcommand("gaps", "per-seam gap report");
    gaps->add_option("file", input)->required();
    gaps->add_option("--rules", rules_path);
    gaps->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* trace_cmd = app.add_subcommand("trace", "seamless trace closure");
    trace_cmd->add_option("file", input)->required();
    trace_cmd->add_option("--from", from_id)->required();
    trace_cmd->add_option("--direction", direction)
        ->check(CLI::IsMember({"forward", "backward"}));
    trace_cmd->add_flag("--extended", extended);
    trace_cmd->add_option("--depth", depth)->check(CLI::NonNegativeNumber);
    trace_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* impact_cmd = app.add_subcommand("impact", "bidirectional impact set");
    impact_cmd->add_option("file", input)->required();
    impact_cmd->add_option("--on", on_id)->required();
    impact_cmd->add_flag("--extended", extended);
    impact_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* matrix_cmd = app.add_subcommand("matrix", "traceability matrix");
    matrix_cmd->add_option("file", input)->required();
    matrix_cmd->add_option("--from-kind", from_kind)->required();
    matrix_cmd->add_option("--to-kind", to_kind)->required();
    matrix_cmd->add_flag("--extended", extended);
    matrix_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* coverage_cmd = app.add_subcommand("coverage", "seam coverage ratios");
    coverage_cmd->add_option("file", input)->required();
    coverage_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* export_cmd = app.add_subcommand("export", "diagram / interchange export");
    export_cmd->add_option("file", input)->required();
    export_cmd->add_option("--format", format)
        ->required()
        ->check(CLI::IsMember({"dot", "plantuml", "json"}));
    export_cmd->add_option("--scope", scope_token);

    auto* doc = app.add_subcommand("doc", "generated architecture document");
    doc->add_option("file", input)->required();

    auto* fmt = app.add_subcommand("fmt", "canonical serialization");
    fmt->add_option("file", input)->required();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        TraceOptions options = extended ? TraceOptions::extended() : TraceOptions::defaults();
        options.depth = depth;

        if (check->parsed()) {
            LoadedModel loaded = load_model(input);
            out << render_diagnostics(loaded.diagnostics, diagnostics_format(format));
            return has_errors(loaded.diagnostics) ? kExitFindings : kExitOk;
        }
        if (validate_cmd->parsed() || gaps->parsed()) {
            LoadedModel loaded = load_model(input);
            RuleConfig config = rules_path.empty() ? RuleConfig{} : load_rules(rules_path);
            if (validate_cmd->parsed()) {
                std::vector<Diagnostic> diagnostics = loaded.diagnostics;
                auto findings = validate(loaded.model, config);
                diagnostics.insert(diagnostics.end(), findings.begin(), findings.end());
                out << render_diagnostics(diagnostics, diagnostics_format(format));
                return has_errors(diagnostics) ? kExitFindings : kExitOk;
            }
            GapReport report = gap_report(loaded.model, config);
            out << (format == "json" ? gap_report_to_json(report) : render_gap_report(report));
            bool bad = has_errors(loaded.diagnostics);
            for (const auto& seam : report.seams) bad = bad || has_errors(seam.diagnostics);
            return bad ? kExitFindings : kExitOk;
        }

        LoadedModel loaded = load_model(input);
        report_load_diagnostics(loaded, err);
        const ArchitectureModel& model = loaded.model;

        if (trace_cmd->parsed()) {
            auto dir = direction == "backward" ? TraceDirection::Backward
                                               : TraceDirection::Forward;
            TraceResult result = trace(model, from_id, dir, options);
            if (format == "json") out << trace_to_json(result);
            else if (format == "dot") out << trace_to_dot(model, result);
            else out << render_trace(model, result);
            return kExitOk;
        }
        if (impact_cmd->parsed()) {
            auto ids = impact(model, on_id, options);
            if (format == "json") {
                std::string sep;
                out << "[";
                for (const auto& id : ids) {
                    out << sep << '"' << id << '"';
                    sep = ", ";
                }
                out << "]\n";
            } else {
                for (const auto& id : ids) out << id << " " << model.at(id).name << "\n";
            }
            return kExitOk;
        }
        if (matrix_cmd->parsed()) {
            auto from = element_kind_from_string(from_kind);
            auto to = element_kind_from_string(to_kind);
            if (!from || !to) {
                throw CliError{"unknown element kind '" + (from ? to_kind : from_kind) + "'"};
            }
            auto pairs = trace_matrix(model, *from, *to, options);
            if (format == "json") {
                std::string sep;
                out << "[";
                for (const auto& [a, b] : pairs) {
                    out << sep << "[\"" << a << "\", \"" << b << "\"]";
                    sep = ", ";
                }
                out << "]\n";
            } else {
                for (const auto& [a, b] : pairs) out << a << " " << b << "\n";
            }
            return kExitOk;
        }
        if (coverage_cmd->parsed()) {
            CoverageReport report = coverage(model);
            out << (format == "json" ? coverage_to_json(report) : render_coverage(report));
            return kExitOk;
        }
        if (export_cmd->parsed()) {
            if (format == "plantuml") {
                out << export_plantuml_deployment(model);
            } else if (format == "json") {
                out << model_to_json(model);
            } else {
                auto scope = ExportScope::parse(scope_token);
                if (!scope) throw CliError{"unknown scope '" + scope_token + "'"};
                out << export_dot(model, *scope);
            }
            return kExitOk;
        }
        if (doc->parsed()) {
            auto findings = validate(model);
            out << render_archdoc(model, findings, coverage(model));
            return kExitOk;
        }
        if (fmt->parsed()) {
            out << serialize(model);
            return kExitOk;
        }
        return kExitUsage;
    } catch (const UnknownIdError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CliError& e) {
        err << "error: " << e.message << "\n";
        return kExitUsage;
    }
}

}  // namespace archdl
