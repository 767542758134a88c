#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace posray;
using namespace testsupport;

TEST_CASE("fig3 positroid is the expected 13-basis list") {
    const Positroid p = enumerate_bases(build_le_graph(fig3_diagram()));
    CHECK(p.n == 7);
    CHECK(p.r == 3);
    CHECK(p.bases == fig3_bases());
    CHECK(std::is_sorted(p.bases.begin(), p.bases.end(), LabelSet::lex_less));
}

TEST_CASE("is_basis answers membership queries") {
    const LeGraph g = build_le_graph(fig3_diagram());
    CHECK(is_basis(g, LabelSet::of({2, 5, 7})));
    CHECK_FALSE(is_basis(g, LabelSet::of({1, 2, 3})));
    CHECK(is_basis(g, g.boundary_basis()));
    CHECK_THROWS_AS(is_basis(g, LabelSet::of({2, 5})), PreconditionError);
    CHECK_THROWS_AS(is_basis(g, LabelSet::of({2, 5, 9})), PreconditionError);
}

TEST_CASE("walks must be vertex-disjoint, not merely edge-disjoint") {
    // From {2,3} to {6,7} there are edge-disjoint walks meeting at dot (2,2),
    // yet 567 is not a basis: the shared interior vertex disqualifies them.
    const LeGraph g = build_le_graph(fig3_diagram());
    const std::vector<int> walk_a = {g.boundary_id(2), g.dot_id(1, 2), g.dot_id(2, 2),
                                     g.dot_id(3, 2), g.boundary_id(6)};
    const std::vector<int> walk_b = {g.boundary_id(3), g.dot_id(2, 3), g.dot_id(2, 2),
                                     g.dot_id(2, 1), g.boundary_id(7)};
    std::set<int> edges_a, edges_b;
    for (std::size_t k = 0; k + 1 < walk_a.size(); ++k) {
        const int eid = g.find_edge(walk_a[k], walk_a[k + 1]);
        REQUIRE(eid >= 0);
        edges_a.insert(eid);
    }
    for (std::size_t k = 0; k + 1 < walk_b.size(); ++k) {
        const int eid = g.find_edge(walk_b[k], walk_b[k + 1]);
        REQUIRE(eid >= 0);
        edges_b.insert(eid);
    }
    for (int eid : edges_a) CHECK_FALSE(edges_b.contains(eid));

    CHECK_FALSE(is_basis(g, LabelSet::of({5, 6, 7})));
    CHECK_FALSE(vertex_disjoint_family_exists(g, LabelSet::of({2, 3}), LabelSet::of({6, 7})));
}

TEST_CASE("degenerate graphs enumerate trivially") {
    LeDiagram empty;
    empty.n = 5;
    empty.r = 2;
    empty.steps = "HVHVH";
    const Positroid p = enumerate_bases(build_le_graph(empty));
    CHECK(p.bases == std::vector<LabelSet>{LabelSet::of({2, 4})});

    const Positroid u24 = enumerate_bases(build_le_graph(u24_diagram()));
    CHECK(u24.bases.size() == 6);

    LeDiagram rank0;
    rank0.n = 3;
    rank0.r = 0;
    rank0.steps = "HHH";
    const Positroid p0 = enumerate_bases(build_le_graph(rank0));
    CHECK(p0.bases == std::vector<LabelSet>{LabelSet{}});
}

TEST_CASE("minor filters the basis list") {
    const Positroid p = enumerate_bases(build_le_graph(fig3_diagram()));

    const std::vector<LabelSet> expected = {LabelSet::of({2, 3, 5}), LabelSet::of({2, 3, 6}),
                                            LabelSet::of({2, 4, 5}), LabelSet::of({2, 4, 6}),
                                            LabelSet::of({2, 5, 6})};
    CHECK(minor(p, LabelSet::of({2}), LabelSet::of({7})) == expected);
    CHECK(minor(p, LabelSet{}, LabelSet{}) == p.bases);
    CHECK(minor(p, LabelSet::of({1}), LabelSet{}).empty());
    CHECK_THROWS_AS(minor(p, LabelSet::of({2}), LabelSet::of({2})), PreconditionError);
}

TEST_CASE("enumerator polynomial of a minor") {
    const Positroid p = enumerate_bases(build_le_graph(fig3_diagram()));

    const SparsePolynomial poly = enumerator_poly(p, LabelSet::of({2, 7}), LabelSet{});
    CHECK(poly.term_count() == 2);
    CHECK(poly.coefficient(SparsePolynomial::subset_key(LabelSet::of({2, 5, 7}))) == 1);
    CHECK(poly.coefficient(SparsePolynomial::subset_key(LabelSet::of({2, 6, 7}))) == 1);

    CHECK(enumerator_poly(p, LabelSet::of({1}), LabelSet{}).is_zero());

    const SparsePolynomial full = enumerator_poly(p, LabelSet{}, LabelSet{});
    CHECK(full.term_count() == 13);
    for (const auto& [key, coeff] : full.terms()) {
        (void)key;
        CHECK(coeff == 1);
    }
    CHECK(full.is_multilinear());
}

TEST_CASE("enumerator evaluation at frozen points") {
    const Positroid p = enumerate_bases(build_le_graph(fig3_diagram()));

    const WeightVector ones(7, Rational(1));
    CHECK(enumerator_eval(p, ones, LabelSet{}, LabelSet{}) == 13);

    const WeightVector zeros(7, Rational(0));
    CHECK(enumerator_eval(p, zeros, LabelSet{}, LabelSet{}) == 0);

    // Label 1 lies in no basis, so zeroing it changes nothing.
    WeightVector w1 = ones;
    w1[0] = 0;
    CHECK(enumerator_eval(p, w1, LabelSet{}, LabelSet{}) == 13);

    // Zeroing label 2 leaves the six bases that avoid 2.
    WeightVector w2 = ones;
    w2[1] = 0;
    CHECK(enumerator_eval(p, w2, LabelSet{}, LabelSet{}) == 6);

    // Oracle route: accumulate products over the frozen list directly.
    WeightVector w(7);
    SeededRng rng(99);
    for (auto& entry : w) entry = rng.grid_rational(true);
    Rational expected = 0;
    for (LabelSet basis : fig3_bases()) {
        if (!basis.contains(2) || basis.contains(7)) continue;
        Rational term = 1;
        for (int label : basis.labels()) term *= w[static_cast<std::size_t>(label - 1)];
        expected += term;
    }
    CHECK(enumerator_eval(p, w, LabelSet::of({2}), LabelSet::of({7})) == expected);

    CHECK_THROWS_AS(enumerator_eval(p, WeightVector(3, Rational(1)), LabelSet{}, LabelSet{}),
                    PreconditionError);
}

TEST_CASE("exchange axiom oracle") {
    const Positroid fig3 = enumerate_bases(build_le_graph(fig3_diagram()));
    CHECK(exchange_check(fig3));

    const Positroid bad =
        positroid_from_bases(4, 2, {LabelSet::of({1, 2}), LabelSet::of({3, 4})});
    CHECK_FALSE(exchange_check(bad));

    const Positroid single = positroid_from_bases(4, 2, {LabelSet::of({1, 3})});
    CHECK(exchange_check(single));
}

TEST_CASE("random positroids satisfy the exchange axiom") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const RandomInstance inst = random_instance(seed, 2, 8);
        INFO("seed " << seed << " n=" << inst.positroid.n << " r=" << inst.positroid.r);
        CHECK(exchange_check(inst.positroid));
        CHECK(inst.positroid.contains(inst.graph.boundary_basis()));
        CHECK(std::is_sorted(inst.positroid.bases.begin(), inst.positroid.bases.end(),
                             LabelSet::lex_less));
    }
}

TEST_CASE("flow feasibility agrees with the backtracking oracle on all subsets") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const RandomInstance inst = random_instance(seed + 300, 2, 7);
        const LeGraph& g = inst.graph;
        const LabelSet b = g.boundary_basis();
        for_each_subset_of_size(g.n(), g.r(), [&](LabelSet candidate) {
            const bool via_flow = is_basis(g, candidate);
            const bool via_backtracking =
                candidate == b ||
                vertex_disjoint_family_exists(g, b.minus(candidate), candidate.minus(b));
            INFO("seed " << seed << " candidate " << candidate.compact());
            CHECK(via_flow == via_backtracking);
        });
    }
}

TEST_CASE("minor agrees with an independent set filter") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RandomInstance inst = random_instance(seed + 700, 3, 7);
        const Positroid& p = inst.positroid;
        SeededRng rng(seed);
        for (int trial = 0; trial < 10; ++trial) {
            LabelSet contracted, deleted;
            for (int label = 1; label <= p.n; ++label) {
                switch (rng.bounded(3)) {
                    case 0: contracted.add(label); break;
                    case 1: deleted.add(label); break;
                    default: break;
                }
            }
            std::vector<LabelSet> expected;
            for (LabelSet basis : p.bases) {
                bool keep = true;
                for (int label = 1; label <= p.n; ++label) {
                    if (contracted.contains(label) && !basis.contains(label)) keep = false;
                    if (deleted.contains(label) && basis.contains(label)) keep = false;
                }
                if (keep) expected.push_back(basis);
            }
            CHECK(minor(p, contracted, deleted) == expected);
        }
    }
}

TEST_CASE("all-ones evaluation counts minor bases for small constraints") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RandomInstance inst = random_instance(seed + 900, 3, 7);
        const Positroid& p = inst.positroid;
        const WeightVector ones(static_cast<std::size_t>(p.n), Rational(1));
        for (int e = 0; e <= p.n; ++e) {
            for (int f = 0; f <= p.n; ++f) {
                if (e > 0 && e == f) continue;
                LabelSet contracted, deleted;
                if (e > 0) contracted.add(e);
                if (f > 0) deleted.add(f);
                CHECK(enumerator_eval(p, ones, contracted, deleted) ==
                      static_cast<long long>(minor(p, contracted, deleted).size()));
            }
        }
    }
}
