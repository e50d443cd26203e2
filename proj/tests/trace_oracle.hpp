#pragma once

// Independent brute-force reachability oracle: builds the effective edge
// relation as a boolean matrix and closes it with Floyd-Warshall. Kept free
// of the tracer's BFS machinery on purpose.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "archdl/model.hpp"
#include "archdl/tracer.hpp"

namespace archdl::test {

class ReachabilityOracle {
public:
    ReachabilityOracle(const ArchitectureModel& model, const TraceOptions& options) {
        for (const auto& [id, element] : model.elements()) {
            index_[id] = ids_.size();
            ids_.push_back(id);
        }
        std::size_t n = ids_.size();
        closure_.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) closure_[i][i] = true;
        auto selected = [&](LinkKind kind, bool& reversed) {
            for (LinkKind k : options.follow) {
                if (k == kind) {
                    reversed = false;
                    return true;
                }
            }
            for (LinkKind k : options.follow_reversed) {
                if (k == kind) {
                    reversed = true;
                    return true;
                }
            }
            return false;
        };
        for (const Link& link : model.links()) {
            bool reversed = false;
            if (!selected(link.kind, reversed)) continue;
            std::size_t from = index_.at(reversed ? link.dst : link.src);
            std::size_t to = index_.at(reversed ? link.src : link.dst);
            closure_[from][to] = true;
        }
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t i = 0; i < n; ++i) {
                if (!closure_[i][k]) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (closure_[k][j]) closure_[i][j] = true;
                }
            }
        }
    }

    bool reaches(const std::string& from, const std::string& to) const {
        return closure_[index_.at(from)][index_.at(to)];
    }

    std::set<std::string> forward(const std::string& from) const {
        std::set<std::string> out;
        for (const auto& id : ids_) {
            if (reaches(from, id)) out.insert(id);
        }
        return out;
    }

    std::set<std::string> backward(const std::string& to) const {
        std::set<std::string> out;
        for (const auto& id : ids_) {
            if (reaches(id, to)) out.insert(id);
        }
        return out;
    }

    const std::vector<std::string>& ids() const { return ids_; }

private:
    std::vector<std::string> ids_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<bool>> closure_;
};

}  // namespace archdl::test
