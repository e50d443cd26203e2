#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "archdl/lower.hpp"
#include "archdl/model.hpp"
#include "archdl/parser.hpp"

namespace archdl::test {

inline std::string fixture_path(const std::string& name) {
    return std::string(ARCHDL_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

inline std::pair<ArchitectureModel, std::vector<Diagnostic>> lower_text(
    const std::string& text, const std::string& name = "test.adl") {
    auto [ast, parse_diags] = parse(text, name);
    auto [model, lower_diags] = lower(ast);
    std::vector<Diagnostic> all = std::move(parse_diags);
    all.insert(all.end(), lower_diags.begin(), lower_diags.end());
    return {std::move(model), std::move(all)};
}

inline std::string m0_text() { return read_file(fixture_path("m0.adl")); }

// Loads the canonical fixture; any diagnostic here is a test bug.
inline ArchitectureModel load_m0() {
    auto [model, diagnostics] = lower_text(m0_text(), "m0.adl");
    if (!diagnostics.empty()) throw std::runtime_error("m0.adl did not lower cleanly");
    return model;
}

// Rebuilds the model without one link (programmatic single-link mutant).
inline ArchitectureModel without_link(const ArchitectureModel& model, const LinkKey& removed) {
    ModelBuilder builder;
    for (const auto& [id, element] : model.elements()) builder.add_element(element);
    for (const Link& link : model.links()) {
        if (key_of(link) == removed) continue;
        builder.add_link(link);
    }
    return std::move(builder).freeze();
}

inline ArchitectureModel with_link(const ArchitectureModel& model, LinkKind kind,
                                   const std::string& src, const std::string& dst) {
    ModelBuilder builder;
    for (const auto& [id, element] : model.elements()) builder.add_element(element);
    for (const Link& link : model.links()) builder.add_link(link);
    builder.add_link(Link{kind, src, dst, {}});
    return std::move(builder).freeze();
}

}  // namespace archdl::test
