#include "archdl/metamodel.hpp"

#include <map>
#include <stdexcept>

namespace archdl {

namespace {

constexpr std::string_view kElementNames[kElementKindCount] = {
    "BusinessProcess",  "BusinessFunction",    "BusinessOperation",
    "AutomatedFunction", "OperationalService", "Dialog",
    "ViewFunction",     "DialogForm",          "InformationObject",
    "SoftwareModule",   "FunctionalComponent", "ExternalSystem",
    "EntityClass",      "ClassMethod",         "HardwareNode",
};

constexpr std::string_view kLinkNames[kLinkKindCount] = {
    "DECOMPOSES",  "HAS_SERVICE", "CONTAINS_AUTOFN", "SVC_DIALOG",
    "IMPLEMENTS",  "HAS_VIEWFN",  "INPUT",           "OUTPUT",
    "HAS_FORM",    "VF_MODULE",   "OWNS_MODULE",     "MOD_METHOD",
    "OWNS_METHOD", "HOSTS_CLASS", "DEPLOYS",
};

constexpr std::string_view kLayerNames[5] = {
    "Business", "Functional", "Component", "Data", "Technology",
};

constexpr std::string_view kCategoryNames[5] = {
    "Precondition", "DataIO", "Control", "ErrorReaction", "Postcondition",
};

constexpr std::string_view kCategoryTokens[5] = {
    "precondition", "io", "control", "error", "postcondition",
};

using EK = ElementKind;
using LK = LinkKind;

}  // namespace

std::string_view to_string(ElementKind kind) {
    return kElementNames[static_cast<int>(kind)];
}

std::string_view to_string(LinkKind kind) {
    return kLinkNames[static_cast<int>(kind)];
}

std::string_view to_string(Layer layer) {
    return kLayerNames[static_cast<int>(layer)];
}

std::string_view to_string(ViewFnCategory category) {
    return kCategoryNames[static_cast<int>(category)];
}

std::string_view category_token(ViewFnCategory category) {
    return kCategoryTokens[static_cast<int>(category)];
}

std::optional<ElementKind> element_kind_from_string(std::string_view text) {
    for (int i = 0; i < kElementKindCount; ++i) {
        if (kElementNames[i] == text) return static_cast<ElementKind>(i);
    }
    return std::nullopt;
}

std::optional<LinkKind> link_kind_from_string(std::string_view text) {
    for (int i = 0; i < kLinkKindCount; ++i) {
        if (kLinkNames[i] == text) return static_cast<LinkKind>(i);
    }
    return std::nullopt;
}

std::optional<Layer> layer_from_string(std::string_view text) {
    for (int i = 0; i < 5; ++i) {
        if (kLayerNames[i] == text) return static_cast<Layer>(i);
    }
    return std::nullopt;
}

std::optional<ViewFnCategory> category_from_token(std::string_view token) {
    for (int i = 0; i < 5; ++i) {
        if (kCategoryTokens[i] == token) return static_cast<ViewFnCategory>(i);
    }
    return std::nullopt;
}

std::array<ElementKind, kElementKindCount> all_element_kinds() {
    std::array<ElementKind, kElementKindCount> kinds{};
    for (int i = 0; i < kElementKindCount; ++i) kinds[i] = static_cast<ElementKind>(i);
    return kinds;
}

std::array<LinkKind, kLinkKindCount> all_link_kinds() {
    std::array<LinkKind, kLinkKindCount> kinds{};
    for (int i = 0; i < kLinkKindCount; ++i) kinds[i] = static_cast<LinkKind>(i);
    return kinds;
}

Layer layer_of(ElementKind kind) {
    switch (kind) {
        case EK::BusinessProcess:
        case EK::BusinessFunction:
        case EK::BusinessOperation:
        case EK::AutomatedFunction:
        case EK::OperationalService:
            return Layer::Business;
        case EK::Dialog:
        case EK::ViewFunction:
        case EK::DialogForm:
        case EK::InformationObject:
            return Layer::Functional;
        case EK::SoftwareModule:
        case EK::FunctionalComponent:
        case EK::ExternalSystem:
            return Layer::Component;
        case EK::EntityClass:
        case EK::ClassMethod:
            return Layer::Data;
        case EK::HardwareNode:
            return Layer::Technology;
    }
    throw std::logic_error("layer_of: bad ElementKind");
}

const std::vector<std::pair<ElementKind, ElementKind>>& legal_pairs(LinkKind link) {
    static const std::map<LinkKind, std::vector<std::pair<ElementKind, ElementKind>>> table = {
        {LK::DECOMPOSES,
         {{EK::BusinessProcess, EK::BusinessFunction},
          {EK::BusinessFunction, EK::BusinessFunction},
          {EK::BusinessFunction, EK::BusinessOperation}}},
        {LK::HAS_SERVICE, {{EK::BusinessOperation, EK::OperationalService}}},
        {LK::CONTAINS_AUTOFN, {{EK::OperationalService, EK::AutomatedFunction}}},
        {LK::SVC_DIALOG, {{EK::OperationalService, EK::Dialog}}},
        {LK::IMPLEMENTS, {{EK::AutomatedFunction, EK::Dialog}}},
        {LK::HAS_VIEWFN, {{EK::Dialog, EK::ViewFunction}}},
        {LK::INPUT, {{EK::Dialog, EK::InformationObject}}},
        {LK::OUTPUT, {{EK::Dialog, EK::InformationObject}}},
        {LK::HAS_FORM, {{EK::Dialog, EK::DialogForm}}},
        {LK::VF_MODULE, {{EK::ViewFunction, EK::SoftwareModule}}},
        {LK::OWNS_MODULE,
         {{EK::FunctionalComponent, EK::SoftwareModule},
          {EK::ExternalSystem, EK::SoftwareModule}}},
        {LK::MOD_METHOD, {{EK::SoftwareModule, EK::ClassMethod}}},
        {LK::OWNS_METHOD, {{EK::EntityClass, EK::ClassMethod}}},
        {LK::HOSTS_CLASS, {{EK::FunctionalComponent, EK::EntityClass}}},
        {LK::DEPLOYS,
         {{EK::HardwareNode, EK::FunctionalComponent},
          {EK::HardwareNode, EK::ExternalSystem}}},
    };
    return table.at(link);
}

bool allowed_link(ElementKind src, LinkKind link, ElementKind dst) {
    for (const auto& [s, d] : legal_pairs(link)) {
        if (s == src && d == dst) return true;
    }
    return false;
}

const std::vector<Seam>& seam_catalog() {
    static const std::vector<Seam> seams = {
        {"business-functional", EK::OperationalService, LK::SVC_DIALOG,
         Layer::Business, Layer::Functional},
        {"functional-component", EK::ViewFunction, LK::VF_MODULE,
         Layer::Functional, Layer::Component},
        {"component-data", EK::SoftwareModule, LK::MOD_METHOD,
         Layer::Component, Layer::Data},
        {"component-technology", EK::HardwareNode, LK::DEPLOYS,
         Layer::Component, Layer::Technology},
    };
    return seams;
}

}  // namespace archdl
