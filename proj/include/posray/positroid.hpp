#pragma once

#include <algorithm>
#include <vector>

#include "posray/errors.hpp"
#include "posray/labelset.hpp"
#include "posray/legraph.hpp"
#include "posray/polynomial.hpp"
#include "posray/rational.hpp"

namespace posray {

namespace detail {

// Unit-capacity max flow, augmenting one path at a time by DFS. Graphs here
// have a few hundred arcs, so no blocking-flow machinery is warranted.
class UnitFlow {
  public:
    explicit UnitFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

    void add_arc(int u, int v) {
        arcs_.push_back({v, head_[static_cast<std::size_t>(u)], 1});
        head_[static_cast<std::size_t>(u)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({u, head_[static_cast<std::size_t>(v)], 0});
        head_[static_cast<std::size_t>(v)] = static_cast<int>(arcs_.size()) - 1;
    }

    int max_flow(int s, int t) {
        int total = 0;
        while (true) {
            seen_.assign(head_.size(), false);
            if (!augment(s, t)) break;
            ++total;
        }
        return total;
    }

  private:
    struct Arc {
        int to;
        int next;
        int cap;
    };

    bool augment(int u, int t) {
        if (u == t) return true;
        seen_[static_cast<std::size_t>(u)] = true;
        for (int a = head_[static_cast<std::size_t>(u)]; a != -1; a = arcs_[static_cast<std::size_t>(a)].next) {
            Arc& arc = arcs_[static_cast<std::size_t>(a)];
            if (arc.cap == 0 || seen_[static_cast<std::size_t>(arc.to)]) continue;
            if (augment(arc.to, t)) {
                --arc.cap;
                ++arcs_[static_cast<std::size_t>(a ^ 1)].cap;
                return true;
            }
        }
        return false;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<bool> seen_;
};

}  // namespace detail

// A positroid presented by its sorted basis list.
struct Positroid {
    int n = 0;
    int r = 0;
    std::vector<LabelSet> bases;  // sorted by LabelSet::lex_less

    bool contains(LabelSet basis) const {
        return std::binary_search(bases.begin(), bases.end(), basis, LabelSet::lex_less);
    }
};

// True iff I is the boundary basis or a family of pairwise vertex-disjoint
// walks carries B\I onto I\B, each endpoint used once. Note the disjointness
// is on vertices, not edges: walks sharing an interior dot do not certify a
// basis (the fully dotted n=7 example admits edge-disjoint walks onto {6,7}
// from {2,3} through one shared dot, yet 567 is not a basis). Phrased as
// unit-capacity flow on the vertex-split graph: every vertex becomes a
// capacity-1 arc, super-source feeds B\I, I\B drains to the super-sink, and
// the demand is |B\I|.
inline bool is_basis(const LeGraph& g, LabelSet candidate) {
    if (candidate.size() != g.r())
        throw PreconditionError("is_basis: subset size " + std::to_string(candidate.size()) +
                                " differs from rank " + std::to_string(g.r()));
    if (!candidate.subset_of(LabelSet::full(g.n())))
        throw PreconditionError("is_basis: subset not within ground set");

    const LabelSet b = g.boundary_basis();
    const LabelSet sources = b.minus(candidate);
    const LabelSet sinks = candidate.minus(b);
    if (sources.empty()) return true;

    // Vertex v splits into in-copy v and out-copy V+v joined by one unit arc.
    const int v_count = g.vertex_count();
    const int super_s = 2 * v_count;
    const int super_t = 2 * v_count + 1;
    detail::UnitFlow flow(2 * v_count + 2);
    for (int v = 0; v < v_count; ++v) flow.add_arc(v, v_count + v);
    for (const LeGraphEdge& e : g.edges()) flow.add_arc(v_count + e.tail, e.head);
    for (int label : sources.labels()) flow.add_arc(super_s, g.boundary_id(label));
    for (int label : sinks.labels()) flow.add_arc(v_count + g.boundary_id(label), super_t);
    return flow.max_flow(super_s, super_t) == sources.size();
}

// All r-subsets of [n] passing is_basis, in lexicographic order.
inline Positroid enumerate_bases(const LeGraph& g) {
    Positroid p;
    p.n = g.n();
    p.r = g.r();
    for_each_subset_of_size(g.n(), g.r(), [&](LabelSet candidate) {
        if (is_basis(g, candidate)) p.bases.push_back(candidate);
    });
    std::sort(p.bases.begin(), p.bases.end(), LabelSet::lex_less);
    return p;
}

// Bases containing contract and avoiding del. Empty when deletion drops rank.
inline std::vector<LabelSet> minor(const Positroid& p, LabelSet contract, LabelSet del) {
    if (!contract.disjoint_with(del))
        throw PreconditionError("minor: contracted and deleted sets overlap");
    std::vector<LabelSet> out;
    for (LabelSet basis : p.bases)
        if (contract.subset_of(basis) && del.disjoint_with(basis)) out.push_back(basis);
    return out;
}

// Sum of x^B over the minor's bases; monomials keep all of B including the
// contracted labels.
inline SparsePolynomial enumerator_poly(const Positroid& p, LabelSet contract, LabelSet del) {
    SparsePolynomial poly;
    for (LabelSet basis : minor(p, contract, del))
        poly.add_term(SparsePolynomial::subset_key(basis), 1);
    return poly;
}

inline Rational enumerator_eval(const Positroid& p, const WeightVector& w, LabelSet contract,
                                LabelSet del) {
    if (static_cast<int>(w.size()) != p.n)
        throw PreconditionError("enumerator_eval: weight vector length differs from n");
    Rational total = 0;
    for (LabelSet basis : minor(p, contract, del)) {
        Rational term = 1;
        for (int label : basis.labels()) term *= w[static_cast<std::size_t>(label - 1)];
        total += term;
    }
    return total;
}

// Brute-force basis exchange axiom over all ordered pairs.
inline bool exchange_check(const Positroid& p) {
    for (LabelSet a : p.bases) {
        for (LabelSet b : p.bases) {
            for (int x : a.minus(b).labels()) {
                bool found = false;
                for (int y : b.minus(a).labels()) {
                    LabelSet swapped = a;
                    swapped.remove(x);
                    swapped.add(y);
                    if (p.contains(swapped)) {
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

}  // namespace posray
