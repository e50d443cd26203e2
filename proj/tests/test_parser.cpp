#include <doctest.h>

#include <variant>

#include "archdl/parser.hpp"
#include "test_support.hpp"

using namespace archdl;

namespace {

template <typename T>
std::size_t count_decls(const ast::ModelAst& model) {
    std::size_t n = 0;
    for (const auto& decl : model.declarations) {
        if (std::holds_alternative<T>(decl)) ++n;
    }
    return n;
}

std::size_t count_code(const std::vector<Diagnostic>& diagnostics, const std::string& code) {
    std::size_t n = 0;
    for (const auto& d : diagnostics) {
        if (d.code == code) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("empty input parses to an empty document") {
    auto [model, diagnostics] = parse("", "empty.adl");
    CHECK(model.declarations.empty());
    CHECK(diagnostics.empty());
    auto [blank, blank_diags] = parse("  \n# only a comment\n", "blank.adl");
    CHECK(blank.declarations.empty());
    CHECK(blank_diags.empty());
}

TEST_CASE("the canonical fixture parses into the expected declarations") {
    auto [model, diagnostics] = parse(archdl::test::m0_text(), "m0.adl");
    CHECK(diagnostics.empty());
    CHECK(count_decls<ast::ProcessDecl>(model) == 1);
    CHECK(count_decls<ast::DialogDecl>(model) == 1);
    CHECK(count_decls<ast::ComponentDecl>(model) == 1);
    CHECK(count_decls<ast::ClassDecl>(model) == 1);
    CHECK(count_decls<ast::NodeDecl>(model) == 1);
    CHECK(count_decls<ast::BindStmt>(model) == 4);
    CHECK(model.declarations.size() == 9);

    for (const auto& decl : model.declarations) {
        if (const auto* dialog = std::get_if<ast::DialogDecl>(&decl)) {
            CHECK(dialog->id == "D1");
            CHECK(dialog->implements.size() == 2);
            CHECK(dialog->agent == "user");
            REQUIRE(dialog->input.has_value());
            CHECK(dialog->input->id == "R1");
            REQUIRE(dialog->form.has_value());
            CHECK(*dialog->form == "order_entry");
            CHECK(dialog->view_fns.size() == 2);
            CHECK(dialog->view_fns[0].category == "precondition");
            CHECK(dialog->view_fns[1].category == "io");
        }
        if (const auto* process = std::get_if<ast::ProcessDecl>(&decl)) {
            REQUIRE(process->functions.size() == 1);
            const auto& f1 = process->functions[0];
            REQUIRE(f1.operations.size() == 2);
            CHECK(f1.operations[0].automated);
            CHECK(f1.operations[0].performer == "Sales Clerk");
            REQUIRE(f1.operations[0].service.has_value());
            CHECK(f1.operations[0].service->auto_fns.size() == 1);
            CHECK(!f1.operations[1].automated);
            CHECK(!f1.operations[1].service.has_value());
        }
    }
}

TEST_CASE("string escapes are decoded") {
    auto [model, diagnostics] =
        parse("process \"He said \\\"go\\\" \\\\ now\" as P1 { }", "esc.adl");
    CHECK(diagnostics.empty());
    REQUIRE(model.declarations.size() == 1);
    CHECK(std::get<ast::ProcessDecl>(model.declarations[0]).name == "He said \"go\" \\ now");
}

TEST_CASE("an unterminated block yields a single syntax error") {
    auto [model, diagnostics] = parse("process \"P\" as P1 {\n  function \"F\" as F1 {\n", "x.adl");
    CHECK(count_code(diagnostics, "E-SYNTAX") == 1);
    REQUIRE(!diagnostics.empty());
    CHECK(diagnostics.front().severity == Severity::Error);
    REQUIRE(diagnostics.front().location.has_value());
    CHECK(diagnostics.front().location->file == "x.adl");
}

TEST_CASE("recovery resumes at the next top-level block") {
    std::string text =
        "process \"broken\" as as {\n"
        "}\n"
        "dialog ??? {\n"
        "}\n"
        "node \"App\" as N1 {\n"
        "  requirements \"small\"\n"
        "}\n";
    auto [model, diagnostics] = parse(text, "recover.adl");
    CHECK(count_code(diagnostics, "E-SYNTAX") >= 1);
    CHECK(count_code(diagnostics, "E-SYNTAX") <= 4);  // at most blocks + 1
    bool node_survived = false;
    for (const auto& decl : model.declarations) {
        if (const auto* node = std::get_if<ast::NodeDecl>(&decl)) {
            node_survived = node->id == "N1" && node->requirements == "small";
        }
    }
    CHECK(node_survived);
}

TEST_CASE("syntax error count is bounded by top-level blocks plus one") {
    std::string text = "process {{{ ] bind -> ,\nnode \"N\" as\nclass class class\n";
    auto [model, diagnostics] = parse(text, "junk.adl");
    // the junk contains 3 top-level keywords
    CHECK(count_code(diagnostics, "E-SYNTAX") <= 4);
    CHECK(count_code(diagnostics, "E-SYNTAX") >= 1);
}

TEST_CASE("invalid UTF-8 is a single encoding error with no AST") {
    std::string text = "process \"P\" as P1 { }\n\xFF\xFE";
    auto [model, diagnostics] = parse(text, "bad.adl");
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics[0].code == "E-ENCODING");
    CHECK(model.declarations.empty());
}

TEST_CASE("parsing is deterministic") {
    std::string text = "process \"P\" as {\n}\nnode \"N\" as N1 { }\n";
    auto first = parse(text, "same.adl");
    auto second = parse(text, "same.adl");
    CHECK(first.second == second.second);
    CHECK(first.first.declarations.size() == second.first.declarations.size());
}

TEST_CASE("diagnostics carry source locations") {
    auto [model, diagnostics] = parse("\n\nprocess \"P\" P1 { }\n", "loc.adl");
    REQUIRE(!diagnostics.empty());
    REQUIRE(diagnostics.front().location.has_value());
    CHECK(diagnostics.front().location->line == 3);
}
