#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "posray/posray.hpp"

namespace testsupport {

using namespace posray;

// The running example: n=7, r=3 diagram whose positroid has 13 bases.
inline LeDiagram fig3_diagram() {
    LeDiagram d;
    d.n = 7;
    d.r = 3;
    d.steps = "HVVHVHH";
    d.dots = {{1, 2}, {2, 1}, {2, 2}, {2, 3}, {3, 2}};
    return d;
}

// Same shape with the forced box (2,2) left empty.
inline LeDiagram fig2_right_diagram() {
    LeDiagram d = fig3_diagram();
    d.dots = {{1, 2}, {2, 1}, {2, 3}, {3, 2}};
    return d;
}

// Fully dotted 2x2 rectangle; its positroid is U_{2,4}.
inline LeDiagram u24_diagram() {
    LeDiagram d;
    d.n = 4;
    d.r = 2;
    d.steps = "VVHH";
    d.dots = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    return d;
}

// Single dotted box; its positroid is U_{1,2} with bases {1}, {2}.
inline LeDiagram u12_diagram() {
    LeDiagram d;
    d.n = 2;
    d.r = 1;
    d.steps = "VH";
    d.dots = {{1, 1}};
    return d;
}

// The 13 bases of the fig3 positroid, frozen as the expected enumeration.
inline std::vector<LabelSet> fig3_bases() {
    return {LabelSet::of({2, 3, 5}), LabelSet::of({2, 3, 6}), LabelSet::of({2, 4, 5}),
            LabelSet::of({2, 4, 6}), LabelSet::of({2, 5, 6}), LabelSet::of({2, 5, 7}),
            LabelSet::of({2, 6, 7}), LabelSet::of({3, 5, 6}), LabelSet::of({3, 5, 7}),
            LabelSet::of({3, 6, 7}), LabelSet::of({4, 5, 6}), LabelSet::of({4, 5, 7}),
            LabelSet::of({4, 6, 7})};
}

// A positroid value built straight from a basis list, bypassing enumeration.
inline Positroid positroid_from_bases(int n, int r, std::vector<LabelSet> bases) {
    Positroid p;
    p.n = n;
    p.r = r;
    p.bases = std::move(bases);
    std::sort(p.bases.begin(), p.bases.end(), LabelSet::lex_less);
    return p;
}

struct RandomInstance {
    LeDiagram diagram;
    LeGraph graph;
    Positroid positroid;
};

// Seeded random positroid: n in [n_min, n_max], rank 1..n-1, density from a
// small grid. The derived values (steps, dots, bases) are deterministic in
// the seed.
inline RandomInstance random_instance(std::uint64_t seed, int n_min, int n_max) {
    SeededRng rng(seed);
    const int n = rng.range(n_min, n_max);
    const int r = rng.range(1, n - 1);
    const double density = 0.1 * rng.range(2, 9);
    RandomInstance inst{random_diagram(n, r, density, rng.next()), {}, {}};
    inst.graph = build_le_graph(inst.diagram);
    inst.positroid = enumerate_bases(inst.graph);
    return inst;
}

// Kahn topological sort; test-side acyclicity oracle.
inline bool is_acyclic(const LeGraph& g) {
    std::vector<int> indegree(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const LeGraphEdge& e : g.edges()) ++indegree[static_cast<std::size_t>(e.head)];
    std::vector<int> queue;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (indegree[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        const int v = queue.back();
        queue.pop_back();
        ++removed;
        for (int eid : g.out_edges(v))
            if (--indegree[static_cast<std::size_t>(g.edge(eid).head)] == 0)
                queue.push_back(g.edge(eid).head);
    }
    return removed == g.vertex_count();
}

inline std::string data_path(const std::string& name) {
    return std::string(POSRAY_DATA_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace testsupport
