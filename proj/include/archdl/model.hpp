#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "archdl/diagnostic.hpp"
#include "archdl/metamodel.hpp"
#include "archdl/source_location.hpp"

namespace archdl {

// One node of the architecture description.
struct Element {
    std::string id;
    ElementKind kind = ElementKind::BusinessProcess;
    std::string name;
    std::map<std::string, std::string> attributes;
    bool automated = false;  // operations only
    SourceLocation location;
};

// One typed, directed edge between two elements.
struct Link {
    LinkKind kind = LinkKind::DECOMPOSES;
    std::string src;
    std::string dst;
    SourceLocation location;
};

struct LinkKey {
    LinkKind kind;
    std::string src;
    std::string dst;
    auto operator<=>(const LinkKey&) const = default;
};

inline LinkKey key_of(const Link& link) { return {link.kind, link.src, link.dst}; }

// Thrown by lookups that receive an id absent from the model (E-UNKNOWN-ID).
class UnknownIdError : public std::runtime_error {
public:
    explicit UnknownIdError(const std::string& id)
        : std::runtime_error("unknown element id '" + id + "'"), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

class ArchitectureModel;

// Append-only staging area; freeze() yields the immutable indexed model.
class ModelBuilder {
public:
    // nullopt on success; E-ID-DUP leaves the builder unchanged.
    std::optional<Diagnostic> add_element(Element element);

    // nullopt on success; E-REF-UNRES / E-LINK-META reject the link,
    // duplicates are dropped with info I-DUP-LINK.
    std::optional<Diagnostic> add_link(Link link);

    bool has(const std::string& id) const { return elements_.count(id) != 0; }
    const Element* find(const std::string& id) const;
    std::size_t element_count() const { return elements_.size(); }
    std::size_t link_count() const { return links_.size(); }

    ArchitectureModel freeze() &&;

private:
    std::map<std::string, Element> elements_;
    std::vector<Link> links_;
    std::set<LinkKey> link_keys_;
};

// Immutable validated graph of elements and links, with neighbor indices.
// All listings are ascending by id for determinism.
class ArchitectureModel {
public:
    ArchitectureModel() = default;

    const std::map<std::string, Element>& elements() const { return elements_; }
    const std::vector<Link>& links() const { return links_; }

    bool has(const std::string& id) const { return elements_.count(id) != 0; }
    const Element* find(const std::string& id) const;
    const Element& at(const std::string& id) const;  // throws UnknownIdError

    std::vector<std::string> out_neighbors(const std::string& id,
                                           std::optional<LinkKind> kind = std::nullopt) const;
    std::vector<std::string> in_neighbors(const std::string& id,
                                          std::optional<LinkKind> kind = std::nullopt) const;

    std::vector<std::string> elements_of_kind(ElementKind kind) const;

    bool has_out(const std::string& id, LinkKind kind) const;
    std::size_t in_degree(const std::string& id, LinkKind kind) const;

private:
    friend class ModelBuilder;

    std::map<std::string, Element> elements_;
    std::vector<Link> links_;
    // (id, kind) -> neighbor ids
    std::map<std::pair<std::string, LinkKind>, std::set<std::string>> out_index_;
    std::map<std::pair<std::string, LinkKind>, std::set<std::string>> in_index_;
};

// Same element set (id, kind, name, attributes, automated flag) and same
// link set (kind, src, dst); locations are ignored.
bool structural_equal(const ArchitectureModel& a, const ArchitectureModel& b);

}  // namespace archdl
