#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace archdl {

// The fifteen element kinds of the architecture metamodel.
enum class ElementKind {
    BusinessProcess,
    BusinessFunction,
    BusinessOperation,
    AutomatedFunction,
    OperationalService,
    Dialog,
    ViewFunction,
    DialogForm,
    InformationObject,
    SoftwareModule,
    FunctionalComponent,
    ExternalSystem,
    EntityClass,
    ClassMethod,
    HardwareNode,
};

inline constexpr int kElementKindCount = 15;

// Typed, directed relations between elements. Each kind admits a fixed set
// of (source kind, target kind) pairs; see allowed_link / legal_pairs.
enum class LinkKind {
    DECOMPOSES,
    HAS_SERVICE,
    CONTAINS_AUTOFN,
    SVC_DIALOG,
    IMPLEMENTS,
    HAS_VIEWFN,
    INPUT,
    OUTPUT,
    HAS_FORM,
    VF_MODULE,
    OWNS_MODULE,
    MOD_METHOD,
    OWNS_METHOD,
    HOSTS_CLASS,
    DEPLOYS,
};

inline constexpr int kLinkKindCount = 15;

// Abstraction layers, ordered from most abstract to most concrete.
// Technology sits above Component only in the deployment sense; that is
// expressed by the DEPLOYS direction, not by this ordering.
enum class Layer {
    Business,
    Functional,
    Component,
    Data,
    Technology,
};

// Classification of a dialog's view functions.
enum class ViewFnCategory {
    Precondition,
    DataIO,
    Control,
    ErrorReaction,
    Postcondition,
};

// A connecting-element boundary between two adjacent abstraction layers.
// The connecting kind's realization links carry the layer transition.
struct Seam {
    std::string name;
    ElementKind connecting_kind;
    LinkKind realization_link;
    Layer upstream_layer;
    Layer downstream_layer;
};

std::string_view to_string(ElementKind kind);
std::string_view to_string(LinkKind kind);
std::string_view to_string(Layer layer);
std::string_view to_string(ViewFnCategory category);

std::optional<ElementKind> element_kind_from_string(std::string_view text);
std::optional<LinkKind> link_kind_from_string(std::string_view text);
std::optional<Layer> layer_from_string(std::string_view text);

// Category tokens as they appear in ADL text: precondition, io, control,
// error, postcondition.
std::string_view category_token(ViewFnCategory category);
std::optional<ViewFnCategory> category_from_token(std::string_view token);

std::array<ElementKind, kElementKindCount> all_element_kinds();
std::array<LinkKind, kLinkKindCount> all_link_kinds();

// Total over all kinds.
Layer layer_of(ElementKind kind);

// True iff (src, link, dst) is in the fixed relation table.
bool allowed_link(ElementKind src, LinkKind link, ElementKind dst);

// All legal (source kind, target kind) pairs of a link kind.
const std::vector<std::pair<ElementKind, ElementKind>>& legal_pairs(LinkKind link);

// The four seams, in abstraction order.
const std::vector<Seam>& seam_catalog();

}  // namespace archdl
