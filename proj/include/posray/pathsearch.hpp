#pragma once

#include <optional>
#include <vector>

#include "posray/errors.hpp"
#include "posray/labelset.hpp"
#include "posray/legraph.hpp"

namespace posray {

// Vertex-disjoint paths carrying B\I onto I\B; empty exactly when I = B.
struct PathFamily {
    LabelSet basis;
    std::vector<std::vector<int>> paths;  // vertex id sequences, one per source
};

// Which representing family the backtracking search selects. Families are
// ordered by the tuple of path vertex sequences, sources in increasing label
// order; vertex ids provide the fixed encoding.
enum class FamilyOrder { LexLeast, LexGreatest };

namespace detail {

class FamilySearch {
  public:
    FamilySearch(const LeGraph& g, LabelSet sources, LabelSet sinks, FamilyOrder order)
        : g_(g),
          sinks_(sinks),
          order_(order),
          used_vertex_(static_cast<std::size_t>(g.vertex_count()), false) {
        for (int label : sources.labels()) source_ids_.push_back(g.boundary_id(label));
    }

    std::optional<std::vector<std::vector<int>>> run() {
        if (route(0)) return paths_;
        return std::nullopt;
    }

  private:
    bool route(std::size_t idx) {
        if (idx == source_ids_.size()) return true;
        const int s = source_ids_[idx];
        used_vertex_[static_cast<std::size_t>(s)] = true;
        paths_.push_back({s});
        if (extend(idx, s)) return true;
        paths_.pop_back();
        used_vertex_[static_cast<std::size_t>(s)] = false;
        return false;
    }

    bool extend(std::size_t idx, int v) {
        if (g_.is_boundary(v) && g_.vertex(v).kind == NodeKind::HStep) {
            const int label = g_.vertex(v).label;
            if (!sinks_.contains(label) || used_sinks_.contains(label)) return false;
            used_sinks_.add(label);
            if (route(idx + 1)) return true;
            used_sinks_.remove(label);
            return false;
        }
        const std::vector<int>& out = g_.out_edges(v);  // sorted by head id
        for (std::size_t k = 0; k < out.size(); ++k) {
            const int eid = order_ == FamilyOrder::LexLeast ? out[k] : out[out.size() - 1 - k];
            const int w = g_.edge(eid).head;
            if (used_vertex_[static_cast<std::size_t>(w)]) continue;
            used_vertex_[static_cast<std::size_t>(w)] = true;
            paths_.back().push_back(w);
            if (extend(idx, w)) return true;
            paths_.back().pop_back();
            used_vertex_[static_cast<std::size_t>(w)] = false;
        }
        return false;
    }

    const LeGraph& g_;
    LabelSet sinks_;
    FamilyOrder order_;
    std::vector<int> source_ids_;
    LabelSet used_sinks_;
    std::vector<bool> used_vertex_;
    std::vector<std::vector<int>> paths_;
};

}  // namespace detail

inline std::optional<PathFamily> find_vertex_disjoint_family(const LeGraph& g, LabelSet sources,
                                                             LabelSet sinks, FamilyOrder order) {
    if (sources.size() != sinks.size())
        throw PreconditionError("find_vertex_disjoint_family: source/sink counts differ");
    detail::FamilySearch search(g, sources, sinks, order);
    auto paths = search.run();
    if (!paths) return std::nullopt;
    PathFamily family;
    family.basis = g.boundary_basis().minus(sources).united(sinks);
    family.paths = std::move(*paths);
    return family;
}

// Independent of the flow-based is_basis; used as its oracle.
inline bool vertex_disjoint_family_exists(const LeGraph& g, LabelSet sources, LabelSet sinks) {
    return find_vertex_disjoint_family(g, sources, sinks, FamilyOrder::LexLeast).has_value();
}

// The extreme family representing basis I under `order`, found by ordered
// backtracking; the LexLeast family is the canonical representative.
inline PathFamily canonical_family(const LeGraph& g, LabelSet basis,
                                   FamilyOrder order = FamilyOrder::LexLeast) {
    const LabelSet b = g.boundary_basis();
    auto family = find_vertex_disjoint_family(g, b.minus(basis), basis.minus(b), order);
    if (!family)
        throw PreconditionError("canonical_family: no vertex-disjoint family represents " +
                                basis.compact());
    return std::move(*family);
}

}  // namespace posray
