#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "archdl/model.hpp"

namespace archdl {

enum class TraceDirection { Forward, Backward };

// Selects which link kinds a trace follows. Kinds in `follow_reversed` are
// traversed opposite to their stored direction (owned element to owner,
// deployed component to node) so that forward traces keep moving from
// requirement to realization.
struct TraceOptions {
    std::vector<LinkKind> follow;
    std::vector<LinkKind> follow_reversed;
    std::optional<int> depth;

    // Realization links only: the decomposition chain from business process
    // to class method.
    static TraceOptions defaults();
    // Adds ownership and deployment links, traversed opposite to ownership.
    static TraceOptions extended();
};

struct TraceResult {
    std::string root;
    TraceDirection direction = TraceDirection::Forward;
    std::map<Layer, std::vector<std::string>> reached;
    std::vector<Link> edges;

    std::set<std::string> reached_ids() const;
};

struct SeamCoverage {
    std::string seam;
    std::size_t realized = 0;
    std::size_t total = 0;

    // 1.0 when the seam has no connecting elements.
    double ratio() const { return total == 0 ? 1.0 : double(realized) / double(total); }
};

struct CoverageReport {
    std::vector<SeamCoverage> seams;  // in seam_catalog order
};

// Breadth-first closure from `id`. Throws UnknownIdError.
TraceResult trace(const ArchitectureModel& model, const std::string& id,
                  TraceDirection direction, const TraceOptions& options = TraceOptions::defaults());

// Forward closure united with backward closure. Throws UnknownIdError.
std::vector<std::string> impact(const ArchitectureModel& model, const std::string& id,
                                const TraceOptions& options = TraceOptions::defaults());

// (from, to) pairs with `to` in the forward trace of `from`, sorted.
std::vector<std::pair<std::string, std::string>> trace_matrix(
    const ArchitectureModel& model, ElementKind from_kind, ElementKind to_kind,
    const TraceOptions& options = TraceOptions::defaults());

// Per-seam realized/total connecting-element ratios. Shared with the
// validator's gap report.
CoverageReport coverage(const ArchitectureModel& model);

// True iff the seam's connecting element has at least one realization.
bool seam_realized(const ArchitectureModel& model, const Seam& seam, const std::string& id);

// Connecting elements of a seam, ascending by id. For the deployment seam
// these are the functional components to be placed on nodes.
std::vector<std::string> seam_subjects(const ArchitectureModel& model, const Seam& seam);

}  // namespace archdl
