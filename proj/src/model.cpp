#include "archdl/model.hpp"

#include <algorithm>

namespace archdl {

namespace {

Diagnostic make(std::string code, Severity severity, std::vector<std::string> subjects,
                std::string message, SourceLocation location) {
    Diagnostic d;
    d.code = std::move(code);
    d.severity = severity;
    d.subjects = std::move(subjects);
    d.message = std::move(message);
    d.location = std::move(location);
    return d;
}

}  // namespace

std::optional<Diagnostic> ModelBuilder::add_element(Element element) {
    auto it = elements_.find(element.id);
    if (it != elements_.end()) {
        return make("E-ID-DUP", Severity::Error, {element.id},
                    "duplicate definition of '" + element.id + "'; first defined at " +
                        it->second.location.to_string(),
                    element.location);
    }
    elements_.emplace(element.id, std::move(element));
    return std::nullopt;
}

std::optional<Diagnostic> ModelBuilder::add_link(Link link) {
    auto src = elements_.find(link.src);
    auto dst = elements_.find(link.dst);
    if (src == elements_.end() || dst == elements_.end()) {
        const std::string& missing = src == elements_.end() ? link.src : link.dst;
        return make("E-REF-UNRES", Severity::Error, {missing},
                    "unresolved reference to '" + missing + "'", link.location);
    }
    if (!allowed_link(src->second.kind, link.kind, dst->second.kind)) {
        return make("E-LINK-META", Severity::Error, {link.src, link.dst},
                    std::string(to_string(src->second.kind)) + " may not " +
                        std::string(to_string(link.kind)) + " " +
                        std::string(to_string(dst->second.kind)),
                    link.location);
    }
    if (!link_keys_.insert(key_of(link)).second) {
        return make("I-DUP-LINK", Severity::Info, {link.src, link.dst},
                    "duplicate " + std::string(to_string(link.kind)) + " link from '" +
                        link.src + "' to '" + link.dst + "' ignored",
                    link.location);
    }
    links_.push_back(std::move(link));
    return std::nullopt;
}

const Element* ModelBuilder::find(const std::string& id) const {
    auto it = elements_.find(id);
    return it == elements_.end() ? nullptr : &it->second;
}

ArchitectureModel ModelBuilder::freeze() && {
    ArchitectureModel model;
    model.elements_ = std::move(elements_);
    std::sort(links_.begin(), links_.end(), [](const Link& a, const Link& b) {
        return key_of(a) < key_of(b);
    });
    model.links_ = std::move(links_);
    for (const Link& link : model.links_) {
        model.out_index_[{link.src, link.kind}].insert(link.dst);
        model.in_index_[{link.dst, link.kind}].insert(link.src);
    }
    return model;
}

const Element* ArchitectureModel::find(const std::string& id) const {
    auto it = elements_.find(id);
    return it == elements_.end() ? nullptr : &it->second;
}

const Element& ArchitectureModel::at(const std::string& id) const {
    auto it = elements_.find(id);
    if (it == elements_.end()) throw UnknownIdError(id);
    return it->second;
}

std::vector<std::string> ArchitectureModel::out_neighbors(
    const std::string& id, std::optional<LinkKind> kind) const {
    at(id);
    std::set<std::string> merged;
    for (LinkKind k : all_link_kinds()) {
        if (kind && *kind != k) continue;
        auto it = out_index_.find({id, k});
        if (it != out_index_.end()) merged.insert(it->second.begin(), it->second.end());
    }
    return {merged.begin(), merged.end()};
}

std::vector<std::string> ArchitectureModel::in_neighbors(
    const std::string& id, std::optional<LinkKind> kind) const {
    at(id);
    std::set<std::string> merged;
    for (LinkKind k : all_link_kinds()) {
        if (kind && *kind != k) continue;
        auto it = in_index_.find({id, k});
        if (it != in_index_.end()) merged.insert(it->second.begin(), it->second.end());
    }
    return {merged.begin(), merged.end()};
}

std::vector<std::string> ArchitectureModel::elements_of_kind(ElementKind kind) const {
    std::vector<std::string> ids;
    for (const auto& [id, element] : elements_) {
        if (element.kind == kind) ids.push_back(id);
    }
    return ids;
}

bool ArchitectureModel::has_out(const std::string& id, LinkKind kind) const {
    auto it = out_index_.find({id, kind});
    return it != out_index_.end() && !it->second.empty();
}

std::size_t ArchitectureModel::in_degree(const std::string& id, LinkKind kind) const {
    auto it = in_index_.find({id, kind});
    return it == in_index_.end() ? 0 : it->second.size();
}

bool structural_equal(const ArchitectureModel& a, const ArchitectureModel& b) {
    if (a.elements().size() != b.elements().size()) return false;
    for (const auto& [id, ea] : a.elements()) {
        const Element* eb = b.find(id);
        if (!eb) return false;
        if (ea.kind != eb->kind || ea.name != eb->name ||
            ea.attributes != eb->attributes || ea.automated != eb->automated) {
            return false;
        }
    }
    std::set<LinkKey> ka, kb;
    for (const Link& l : a.links()) ka.insert(key_of(l));
    for (const Link& l : b.links()) kb.insert(key_of(l));
    return ka == kb;
}

}  // namespace archdl
