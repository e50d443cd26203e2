// Acceptance suite: each criterion prints one PASS/FAIL line and the process
// exit code reflects the verdict. Run with the criterion number (1-8) as the
// only argument, or with no argument to run all criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "archdl/cli.hpp"
#include "archdl/exporter.hpp"
#include "archdl/lower.hpp"
#include "archdl/parser.hpp"
#include "archdl/serialize.hpp"
#include "archdl/tracer.hpp"
#include "archdl/validator.hpp"
#include "model_generator.hpp"
#include "test_support.hpp"
#include "trace_oracle.hpp"

using namespace archdl;
using archdl::test::ReachabilityOracle;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << "    failed: " << what << "\n";
        }
    }
};

std::string m0_path() { return archdl::test::fixture_path("m0.adl"); }

struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run_cli_capture(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str()};
}

// 1. The clean fixture validates silently with full seam coverage, quickly.
void criterion_1(Check& c) {
    auto start = std::chrono::steady_clock::now();

    auto validated = run_cli_capture({"validate", m0_path()});
    c.expect(validated.exit_code == 0, "validate exits 0");
    c.expect(validated.out.empty(), "validate reports zero diagnostics");

    auto covered = run_cli_capture({"coverage", m0_path()});
    c.expect(covered.exit_code == 0, "coverage exits 0");

    auto report = coverage(archdl::test::load_m0());
    c.expect(report.seams.size() == 4, "four seams reported");
    for (const auto& seam : report.seams) {
        c.expect(seam.ratio() == 1.0, "seam " + seam.seam + " at 1.0");
    }

    auto elapsed = std::chrono::steady_clock::now() - start;
    c.expect(elapsed < std::chrono::seconds(1), "runtime under one second");
}

// 2. Single-link mutation suite: deleting any seam-realization or ownership
// link must produce a diagnostic naming one of its endpoints; restoring the
// link returns the model to a clean state.
void criterion_2(Check& c) {
    auto start = std::chrono::steady_clock::now();
    auto m0 = archdl::test::load_m0();
    const std::set<LinkKind> must_detect{
        LinkKind::SVC_DIALOG,  LinkKind::VF_MODULE,   LinkKind::MOD_METHOD,
        LinkKind::DEPLOYS,     LinkKind::OWNS_MODULE, LinkKind::OWNS_METHOD,
        LinkKind::HOSTS_CLASS,
    };
    for (const Link& link : m0.links()) {
        LinkKey removed = key_of(link);
        std::string label = std::string(to_string(link.kind)) + " " + link.src + "->" + link.dst;
        auto mutant = archdl::test::without_link(m0, removed);

        if (must_detect.count(link.kind) != 0) {
            bool named = false;
            for (const auto& finding : validate(mutant)) {
                for (const auto& subject : finding.subjects) {
                    if (subject == link.src || subject == link.dst) named = true;
                }
            }
            c.expect(named, "deleting " + label + " yields a diagnostic naming an endpoint");
        }

        auto restored = archdl::test::with_link(mutant, link.kind, link.src, link.dst);
        c.expect(validate(restored).empty(), "restoring " + label + " returns to clean");
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    c.expect(elapsed < std::chrono::seconds(5), "runtime under five seconds");
}

// 3. The tracer agrees with the independent brute-force closure oracle for
// every root under both link sets, and forward/backward are adjoint for all
// element pairs.
void criterion_3(Check& c) {
    auto m0 = archdl::test::load_m0();
    for (const TraceOptions& options : {TraceOptions::defaults(), TraceOptions::extended()}) {
        ReachabilityOracle oracle(m0, options);
        for (const auto& root : oracle.ids()) {
            c.expect(trace(m0, root, TraceDirection::Forward, options).reached_ids() ==
                         oracle.forward(root),
                     "forward trace from " + root + " matches the oracle");
            c.expect(trace(m0, root, TraceDirection::Backward, options).reached_ids() ==
                         oracle.backward(root),
                     "backward trace from " + root + " matches the oracle");
        }
        for (const auto& x : oracle.ids()) {
            auto fwd = trace(m0, x, TraceDirection::Forward, options).reached_ids();
            for (const auto& y : oracle.ids()) {
                auto back = trace(m0, y, TraceDirection::Backward, options).reached_ids();
                c.expect((fwd.count(y) != 0) == (back.count(x) != 0),
                         "adjointness for (" + x + ", " + y + ")");
            }
        }
    }
}

// 4. Round-trips: text serialization and JSON interchange are lossless on the
// fixture and on a 50-model random corpus.
void criterion_4(Check& c) {
    auto round_trip = [&](const ArchitectureModel& model, const std::string& label) {
        auto [ast, parse_diags] = parse(serialize(model), label + ".adl");
        auto [reparsed, lower_diags] = lower(ast);
        c.expect(parse_diags.empty() && lower_diags.empty(), label + " reparses cleanly");
        c.expect(structural_equal(model, reparsed), label + " text round-trip equality");

        auto [imported, json_diags] = model_from_json(model_to_json(model));
        c.expect(json_diags.empty(), label + " JSON import is clean");
        c.expect(structural_equal(model, imported), label + " JSON round-trip equality");
    };

    round_trip(archdl::test::load_m0(), "m0");
    for (unsigned seed = 1; seed <= 50; ++seed) {
        auto model = archdl::test::ModelGenerator(seed).generate();
        std::size_t n = model.elements().size();
        c.expect(n >= 5 && n <= 200, "seed " + std::to_string(seed) + " size in range");
        round_trip(model, "seed " + std::to_string(seed));
    }
}

// 5. Every CLI subcommand is byte-deterministic on the fixture.
void criterion_5(Check& c) {
    std::vector<std::vector<std::string>> invocations{
        {"check", m0_path()},
        {"validate", m0_path()},
        {"gaps", m0_path()},
        {"trace", m0_path(), "--from", "O1"},
        {"impact", m0_path(), "--on", "O1"},
        {"matrix", m0_path(), "--from-kind", "BusinessOperation", "--to-kind", "ClassMethod"},
        {"coverage", m0_path()},
        {"export", m0_path(), "--format", "dot"},
        {"export", m0_path(), "--format", "plantuml"},
        {"export", m0_path(), "--format", "json"},
        {"doc", m0_path()},
        {"fmt", m0_path()},
    };
    for (const auto& args : invocations) {
        auto first = run_cli_capture(args);
        auto second = run_cli_capture(args);
        c.expect(first.out == second.out && first.exit_code == second.exit_code,
                 args.front() + " output is byte-identical across runs");
    }
}

// 6. allowed_link is total over all 15x15x15 triples and admits exactly the
// golden table shipped in the repo.
void criterion_6(Check& c) {
    std::set<std::string> computed;
    for (ElementKind src : all_element_kinds()) {
        for (LinkKind link : all_link_kinds()) {
            for (ElementKind dst : all_element_kinds()) {
                if (allowed_link(src, link, dst)) {
                    computed.insert(std::string(to_string(src)) + " " +
                                    std::string(to_string(link)) + " " +
                                    std::string(to_string(dst)));
                }
            }
        }
    }
    std::set<std::string> golden;
    std::istringstream file(
        archdl::test::read_file(archdl::test::fixture_path("allowed_links.txt")));
    std::string line;
    while (std::getline(file, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string src, link, dst;
        fields >> src >> link >> dst;
        golden.insert(src + " " + link + " " + dst);
    }
    c.expect(!golden.empty(), "golden table loads");
    c.expect(computed == golden, "computed relation equals the golden table");
}

// 7. Completeness: in every generated error-free model, each automated
// operation reaches a class method and each component is deployed.
void criterion_7(Check& c) {
    for (unsigned seed = 1; seed <= 50; ++seed) {
        auto model = archdl::test::ModelGenerator(seed).generate();
        std::string label = "seed " + std::to_string(seed);
        c.expect(!has_errors(validate(model)), label + " has zero error diagnostics");

        for (const auto& id : model.elements_of_kind(ElementKind::BusinessOperation)) {
            if (!model.at(id).automated) continue;
            bool reaches_method = false;
            for (const auto& reached :
                 trace(model, id, TraceDirection::Forward).reached_ids()) {
                if (model.at(reached).kind == ElementKind::ClassMethod) reaches_method = true;
            }
            c.expect(reaches_method, label + ": " + id + " reaches a class method");
        }
        for (const auto& id : model.elements_of_kind(ElementKind::FunctionalComponent)) {
            c.expect(model.in_degree(id, LinkKind::DEPLOYS) >= 1,
                     label + ": " + id + " has a deploying node");
        }
    }
}

// 8. Desk-scale figure reproduction: the seam2 DOT slice has 2 view
// functions, 2 modules and 3 edges; the PlantUML deployment shows the node
// containing its component.
void criterion_8(Check& c) {
    auto count = [](const std::string& text, const std::string& needle) {
        std::size_t n = 0;
        for (auto pos = text.find(needle); pos != std::string::npos;
             pos = text.find(needle, pos + needle.size())) {
            ++n;
        }
        return n;
    };

    auto dot = run_cli_capture({"export", m0_path(), "--format", "dot", "--scope", "seam2"});
    c.expect(dot.exit_code == 0, "seam2 export succeeds");
    for (const char* id : {"VF1", "VF2", "M1", "M2"}) {
        c.expect(dot.out.find("\"" + std::string(id) + "\"") != std::string::npos,
                 std::string("seam2 slice contains ") + id);
    }
    c.expect(count(dot.out, " -> ") == 3, "seam2 slice has exactly 3 edges");
    c.expect(dot.out.find("\"D1\"") == std::string::npos, "seam2 slice excludes the dialog");

    auto uml = run_cli_capture({"export", m0_path(), "--format", "plantuml"});
    c.expect(uml.exit_code == 0, "plantuml export succeeds");
    auto node_pos = uml.out.find("node \"App Server\"");
    auto component_pos = uml.out.find("component \"Order Management\"");
    c.expect(node_pos != std::string::npos, "deployment shows the node");
    c.expect(component_pos != std::string::npos, "deployment shows the component");
    c.expect(node_pos < component_pos && component_pos < uml.out.find('}', node_pos),
             "the component is nested inside its node");
}

struct Criterion {
    int number;
    std::string title;
    std::function<void(Check&)> body;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "clean fixture validates with full coverage", criterion_1},
        {2, "single-link deletions are detected and reversible", criterion_2},
        {3, "tracer matches the closure oracle and is adjoint", criterion_3},
        {4, "text and JSON round-trips are lossless", criterion_4},
        {5, "CLI output is deterministic", criterion_5},
        {6, "link relation is total and matches the golden table", criterion_6},
        {7, "error-free models are functionally complete", criterion_7},
        {8, "seam and deployment figures reproduce at desk scale", criterion_8},
    };
    return all;
}

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) selected = std::atoi(argv[1]);

    bool all_ok = true;
    for (const auto& criterion : criteria()) {
        if (selected != 0 && criterion.number != selected) continue;
        Check check;
        try {
            criterion.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("unexpected exception: ") + e.what());
        }
        std::cout << (check.ok ? "PASS" : "FAIL") << ": criterion " << criterion.number << " — "
                  << criterion.title << "\n";
        if (!check.ok) {
            std::string detail = check.detail.str();
            // keep failure listings readable
            std::istringstream lines(detail);
            std::string line;
            int shown = 0;
            while (std::getline(lines, line) && shown < 10) {
                std::cout << line << "\n";
                ++shown;
            }
            all_ok = false;
        }
    }
    return all_ok ? 0 : 1;
}
