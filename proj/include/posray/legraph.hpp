#pragma once

#include <map>
#include <string>
#include <vector>

#include "posray/errors.hpp"
#include "posray/labelset.hpp"
#include "posray/lediagram.hpp"

namespace posray {

enum class NodeKind { VStep, HStep, InnerDot };

struct LeGraphVertex {
    NodeKind kind;
    int label = 0;  // boundary label, 0 for dots
    int row = 0;    // dot coordinates; for boundary nodes the row/col they close
    int col = 0;
};

enum class EdgeDir { Left, Down };

struct LeGraphEdge {
    int tail = 0;
    int head = 0;
    EdgeDir dir = EdgeDir::Left;
};

// Planar DAG of a Le-diagram: boundary nodes 1..n (V-steps are sources,
// H-steps sinks) plus one vertex per dot. Row edges point left, column edges
// point down toward the boundary. Vertex ids: boundary label k is id k-1,
// dots follow in (row, col) order.
class LeGraph {
  public:
    static LeGraph build(const LeDiagram& d) {
        {
            auto violations = validate(d);
            if (!violations.empty()) {
                const Violation& v = violations.front();
                if (v.kind == ViolationKind::LeCondition)
                    throw LeViolationError(v.row, v.col, v.message);
                throw ShapeError(v.message);
            }
        }
        LeGraph g;
        g.n_ = d.n;
        g.r_ = d.r;
        g.boundary_basis_ = posray::boundary_basis(d);

        const std::vector<int> widths = row_widths(d);
        int v_seen = 0, h_seen = 0;
        for (int k = 1; k <= d.n; ++k) {
            if (d.steps[static_cast<std::size_t>(k - 1)] == 'V') {
                ++v_seen;
                g.vertices_.push_back({NodeKind::VStep, k, v_seen, 0});
            } else {
                ++h_seen;
                // Column index counts horizontal steps from the Southwest end.
                g.vertices_.push_back({NodeKind::HStep, k, 0, (d.n - d.r) - h_seen + 1});
            }
        }
        for (const Dot& dot : d.dots) {
            g.dot_ids_[{dot.row, dot.col}] = static_cast<int>(g.vertices_.size());
            g.vertices_.push_back({NodeKind::InnerDot, 0, dot.row, dot.col});
        }

        // Row edges: east V-node, then dots by descending column.
        for (int i = 1; i <= d.r; ++i) {
            int prev = g.boundary_id(v_label_of_row(d, i));
            for (int j = widths[static_cast<std::size_t>(i - 1)]; j >= 1; --j) {
                auto it = g.dot_ids_.find({i, j});
                if (it == g.dot_ids_.end()) continue;
                g.edges_.push_back({prev, it->second, EdgeDir::Left});
                prev = it->second;
            }
        }
        // Column edges: dots by ascending row, then the south H-node.
        for (int j = 1; j <= d.n - d.r; ++j) {
            int prev = -1;
            for (int i = 1; i <= d.r; ++i) {
                auto it = g.dot_ids_.find({i, j});
                if (it == g.dot_ids_.end()) continue;
                if (prev >= 0) g.edges_.push_back({prev, it->second, EdgeDir::Down});
                prev = it->second;
            }
            if (prev >= 0) g.edges_.push_back({prev, g.boundary_id(h_label_of_col(d, j)), EdgeDir::Down});
        }

        g.out_.assign(g.vertices_.size(), {});
        g.in_.assign(g.vertices_.size(), {});
        for (int eid = 0; eid < static_cast<int>(g.edges_.size()); ++eid) {
            g.out_[static_cast<std::size_t>(g.edges_[static_cast<std::size_t>(eid)].tail)].push_back(eid);
            g.in_[static_cast<std::size_t>(g.edges_[static_cast<std::size_t>(eid)].head)].push_back(eid);
        }
        auto by_head = [&g](int a, int b) {
            return g.edges_[static_cast<std::size_t>(a)].head < g.edges_[static_cast<std::size_t>(b)].head;
        };
        auto by_tail = [&g](int a, int b) {
            return g.edges_[static_cast<std::size_t>(a)].tail < g.edges_[static_cast<std::size_t>(b)].tail;
        };
        for (auto& v : g.out_) std::sort(v.begin(), v.end(), by_head);
        for (auto& v : g.in_) std::sort(v.begin(), v.end(), by_tail);
        return g;
    }

    int n() const { return n_; }
    int r() const { return r_; }
    LabelSet boundary_basis() const { return boundary_basis_; }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const LeGraphVertex& vertex(int id) const { return vertices_[static_cast<std::size_t>(id)]; }
    const LeGraphEdge& edge(int eid) const { return edges_[static_cast<std::size_t>(eid)]; }
    const std::vector<LeGraphEdge>& edges() const { return edges_; }
    const std::vector<int>& out_edges(int id) const { return out_[static_cast<std::size_t>(id)]; }
    const std::vector<int>& in_edges(int id) const { return in_[static_cast<std::size_t>(id)]; }

    bool is_boundary(int id) const { return id < n_; }
    int boundary_id(int label) const { return label - 1; }

    int dot_id(int row, int col) const {
        auto it = dot_ids_.find({row, col});
        if (it == dot_ids_.end()) throw PreconditionError("no dot at requested coordinates");
        return it->second;
    }

    // "b<label>" for boundary nodes, "d<row>.<col>" for dots.
    std::string vertex_name(int id) const {
        const LeGraphVertex& v = vertices_[static_cast<std::size_t>(id)];
        if (v.kind == NodeKind::InnerDot)
            return "d" + std::to_string(v.row) + "." + std::to_string(v.col);
        return "b" + std::to_string(v.label);
    }

    std::string edge_name(int eid) const {
        const LeGraphEdge& e = edges_[static_cast<std::size_t>(eid)];
        return vertex_name(e.tail) + "->" + vertex_name(e.head);
    }

    // -1 when absent; degrees are at most 2 so a scan suffices.
    int find_edge(int tail, int head) const {
        for (int eid : out_[static_cast<std::size_t>(tail)])
            if (edges_[static_cast<std::size_t>(eid)].head == head) return eid;
        return -1;
    }

  private:
    int n_ = 0, r_ = 0;
    LabelSet boundary_basis_;
    std::vector<LeGraphVertex> vertices_;
    std::vector<LeGraphEdge> edges_;
    std::vector<std::vector<int>> out_, in_;
    std::map<std::pair<int, int>, int> dot_ids_;
};

inline LeGraph build_le_graph(const LeDiagram& d) { return LeGraph::build(d); }

}  // namespace posray
