#include <doctest.h>

#include <json.hpp>

#include "archdl/lower.hpp"
#include "archdl/parser.hpp"
#include "test_support.hpp"

using namespace archdl;
using archdl::test::lower_text;

namespace {

std::size_t count_code(const std::vector<Diagnostic>& diagnostics, const std::string& code) {
    std::size_t n = 0;
    for (const auto& d : diagnostics) {
        if (d.code == code) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("the canonical fixture lowers cleanly to the manifest's model") {
    auto [model, diagnostics] = lower_text(archdl::test::m0_text(), "m0.adl");
    CHECK(diagnostics.empty());

    auto manifest = nlohmann::json::parse(
        archdl::test::read_file(archdl::test::fixture_path("m0.manifest.json")));
    CHECK(model.elements().size() == manifest["element_count"].get<std::size_t>());
    CHECK(model.links().size() == manifest["link_count"].get<std::size_t>());

    std::set<std::string> ids;
    for (const auto& [id, element] : model.elements()) ids.insert(id);
    std::set<std::string> expected_ids;
    for (const auto& id : manifest["elements"]) expected_ids.insert(id.get<std::string>());
    CHECK(ids == expected_ids);

    std::set<LinkKey> keys;
    for (const Link& link : model.links()) keys.insert(key_of(link));
    std::set<LinkKey> expected_keys;
    for (const auto& row : manifest["links"]) {
        auto kind = link_kind_from_string(row[0].get<std::string>());
        REQUIRE(kind.has_value());
        expected_keys.insert({*kind, row[1].get<std::string>(), row[2].get<std::string>()});
    }
    CHECK(keys == expected_keys);
}

TEST_CASE("lowering follows the naming conventions") {
    auto model = archdl::test::load_m0();
    // a service element carries the name of its business operation
    CHECK(model.at("S1").name == model.at("O1").name);
    // the dialog form becomes an element with a derived id
    CHECK(model.at("D1_form").kind == ElementKind::DialogForm);
    CHECK(model.at("D1_form").name == "order_entry");
    CHECK(model.at("O1").automated);
    CHECK(model.at("O1").attributes.at("performer") == "Sales Clerk");
    CHECK(!model.at("O2").automated);
    CHECK(model.at("D1").attributes.at("agent") == "user");
    CHECK(model.at("VF1").attributes.at("category") == "precondition");
    CHECK(model.at("N1").attributes.at("requirements") == "16GB RAM");
    CHECK(model.at("M1").name == "OrderService.create");
}

TEST_CASE("duplicate ids are reported with both locations") {
    auto [model, diagnostics] = lower_text(
        "process \"P\" as P1 { }\n"
        "node \"N\" as P1 { }\n");
    REQUIRE(count_code(diagnostics, "E-ID-DUP") == 1);
    for (const auto& d : diagnostics) {
        if (d.code == "E-ID-DUP") {
            CHECK(d.subjects == std::vector<std::string>{"P1"});
            REQUIRE(d.location.has_value());
            CHECK(d.location->line == 2);
            CHECK(d.message.find(":1:") != std::string::npos);  // cites the first definition
        }
    }
    CHECK(model.elements().size() == 1);  // the first definition wins
}

TEST_CASE("unresolved references are reported") {
    auto [model, diagnostics] = lower_text("bind VF9 -> M9\n");
    CHECK(count_code(diagnostics, "E-REF-UNRES") >= 1);

    auto [model2, diagnostics2] = lower_text(
        "dialog \"D\" as D1 {\n"
        "  implements S9\n"
        "  view_fn \"v\" as VF1 category io\n"
        "}\n");
    CHECK(count_code(diagnostics2, "E-REF-UNRES") == 1);
}

TEST_CASE("binds between unrelated kinds are ambiguous") {
    std::string text = archdl::test::m0_text() + "\nbind P1 -> M1\n";
    auto [model, diagnostics] = lower_text(text);
    REQUIRE(count_code(diagnostics, "E-BIND-AMBIG") == 1);
    for (const auto& d : diagnostics) {
        if (d.code == "E-BIND-AMBIG") {
            CHECK(d.subjects.front() == "P1");
        }
    }
}

TEST_CASE("implements with an ineligible target kind violates the metamodel") {
    std::string text =
        "process \"P\" as P1 {\n"
        "  function \"F\" as F1 {\n"
        "    operation \"O\" as O1 automated {\n"
        "      performer \"x\"\n"
        "      service as S1 { }\n"
        "    }\n"
        "  }\n"
        "}\n"
        "dialog \"D\" as D1 {\n"
        "  implements P1\n"
        "  view_fn \"v\" as VF1 category io\n"
        "}\n";
    auto [model, diagnostics] = lower_text(text);
    CHECK(count_code(diagnostics, "E-LINK-META") == 1);
}

TEST_CASE("implements dispatches on the target kind") {
    auto model = archdl::test::load_m0();
    // service target induces the seam link from the service to the dialog
    CHECK(model.out_neighbors("S1", LinkKind::SVC_DIALOG) == std::vector<std::string>{"D1"});
    // automated-function target induces IMPLEMENTS toward the dialog
    CHECK(model.out_neighbors("A1", LinkKind::IMPLEMENTS) == std::vector<std::string>{"D1"});
}

TEST_CASE("a model is still produced in the presence of errors") {
    auto [model, diagnostics] = lower_text(
        "process \"P\" as P1 { }\n"
        "bind X -> Y\n");
    CHECK(!diagnostics.empty());
    CHECK(model.has("P1"));
}
