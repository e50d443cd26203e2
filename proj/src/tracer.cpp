#include "archdl/tracer.hpp"

#include <algorithm>
#include <deque>

namespace archdl {

namespace {

const std::vector<LinkKind> kDefaultFollow = {
    LinkKind::DECOMPOSES, LinkKind::HAS_SERVICE, LinkKind::CONTAINS_AUTOFN,
    LinkKind::SVC_DIALOG, LinkKind::IMPLEMENTS,  LinkKind::HAS_VIEWFN,
    LinkKind::VF_MODULE,  LinkKind::MOD_METHOD,
};

const std::vector<LinkKind> kOwnershipFollow = {
    LinkKind::OWNS_MODULE, LinkKind::OWNS_METHOD, LinkKind::HOSTS_CLASS, LinkKind::DEPLOYS,
};

}  // namespace

TraceOptions TraceOptions::defaults() {
    TraceOptions options;
    options.follow = kDefaultFollow;
    return options;
}

TraceOptions TraceOptions::extended() {
    TraceOptions options;
    options.follow = kDefaultFollow;
    options.follow_reversed = kOwnershipFollow;
    return options;
}

std::set<std::string> TraceResult::reached_ids() const {
    std::set<std::string> ids;
    for (const auto& [layer, elements] : reached) ids.insert(elements.begin(), elements.end());
    return ids;
}

TraceResult trace(const ArchitectureModel& model, const std::string& id,
                  TraceDirection direction, const TraceOptions& options) {
    model.at(id);

    // neighbors in the effective direction, with the traversed stored link
    auto expand = [&](const std::string& node) {
        std::vector<std::pair<std::string, Link>> next;
        auto add = [&](LinkKind kind, bool reversed) {
            bool outgoing = (direction == TraceDirection::Forward) != reversed;
            auto neighbors = outgoing ? model.out_neighbors(node, kind)
                                      : model.in_neighbors(node, kind);
            for (const auto& other : neighbors) {
                Link link;
                link.kind = kind;
                link.src = outgoing ? node : other;
                link.dst = outgoing ? other : node;
                next.emplace_back(other, std::move(link));
            }
        };
        for (LinkKind kind : options.follow) add(kind, false);
        for (LinkKind kind : options.follow_reversed) add(kind, true);
        return next;
    };

    std::set<std::string> visited = {id};
    std::set<LinkKey> edge_keys;
    std::vector<Link> edges;
    std::vector<std::string> frontier = {id};
    int depth = 0;
    while (!frontier.empty() && (!options.depth || depth < *options.depth)) {
        std::set<std::string> next_frontier;
        for (const auto& node : frontier) {
            for (auto& [other, link] : expand(node)) {
                if (edge_keys.insert(key_of(link)).second) edges.push_back(link);
                if (visited.insert(other).second) next_frontier.insert(other);
            }
        }
        frontier.assign(next_frontier.begin(), next_frontier.end());
        ++depth;
    }

    TraceResult result;
    result.root = id;
    result.direction = direction;
    for (const auto& node : visited) {
        result.reached[layer_of(model.at(node).kind)].push_back(node);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Link& a, const Link& b) { return key_of(a) < key_of(b); });
    result.edges = std::move(edges);
    return result;
}

std::vector<std::string> impact(const ArchitectureModel& model, const std::string& id,
                                const TraceOptions& options) {
    std::set<std::string> ids = trace(model, id, TraceDirection::Forward, options).reached_ids();
    auto backward = trace(model, id, TraceDirection::Backward, options).reached_ids();
    ids.insert(backward.begin(), backward.end());
    return {ids.begin(), ids.end()};
}

std::vector<std::pair<std::string, std::string>> trace_matrix(
    const ArchitectureModel& model, ElementKind from_kind, ElementKind to_kind,
    const TraceOptions& options) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& from : model.elements_of_kind(from_kind)) {
        auto reached = trace(model, from, TraceDirection::Forward, options).reached_ids();
        for (const auto& to : reached) {
            if (to != from && model.at(to).kind == to_kind) pairs.emplace_back(from, to);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

std::vector<std::string> seam_subjects(const ArchitectureModel& model, const Seam& seam) {
    switch (seam.realization_link) {
        case LinkKind::SVC_DIALOG:
            return model.elements_of_kind(ElementKind::OperationalService);
        case LinkKind::VF_MODULE:
            return model.elements_of_kind(ElementKind::ViewFunction);
        case LinkKind::MOD_METHOD: {
            // External systems' internals are not modeled.
            std::vector<std::string> modules;
            for (const auto& id : model.elements_of_kind(ElementKind::SoftwareModule)) {
                bool external_owned = false;
                for (const auto& owner : model.in_neighbors(id, LinkKind::OWNS_MODULE)) {
                    if (model.at(owner).kind == ElementKind::ExternalSystem) {
                        external_owned = true;
                    }
                }
                if (!external_owned) modules.push_back(id);
            }
            return modules;
        }
        case LinkKind::DEPLOYS:
            return model.elements_of_kind(ElementKind::FunctionalComponent);
        default:
            return {};
    }
}

bool seam_realized(const ArchitectureModel& model, const Seam& seam, const std::string& id) {
    switch (seam.realization_link) {
        case LinkKind::SVC_DIALOG: {
            if (model.has_out(id, LinkKind::SVC_DIALOG)) return true;
            for (const auto& fn : model.out_neighbors(id, LinkKind::CONTAINS_AUTOFN)) {
                if (model.has_out(fn, LinkKind::IMPLEMENTS)) return true;
            }
            return false;
        }
        case LinkKind::VF_MODULE:
            return model.has_out(id, LinkKind::VF_MODULE);
        case LinkKind::MOD_METHOD:
            return model.has_out(id, LinkKind::MOD_METHOD);
        case LinkKind::DEPLOYS:
            return model.in_degree(id, LinkKind::DEPLOYS) > 0;
        default:
            return false;
    }
}

CoverageReport coverage(const ArchitectureModel& model) {
    CoverageReport report;
    for (const Seam& seam : seam_catalog()) {
        SeamCoverage entry;
        entry.seam = seam.name;
        for (const auto& id : seam_subjects(model, seam)) {
            ++entry.total;
            if (seam_realized(model, seam, id)) ++entry.realized;
        }
        report.seams.push_back(std::move(entry));
    }
    return report;
}

}  // namespace archdl
