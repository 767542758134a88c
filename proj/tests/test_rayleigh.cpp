#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace posray;
using namespace testsupport;

namespace {

Positroid u12_positroid() {
    return positroid_from_bases(2, 1, {LabelSet::of({1}), LabelSet::of({2})});
}

// Independent expansion of the difference polynomial straight from a basis
// list: +1 per pair in P^f_e x P^e_f, -1 per pair in P_ef x P^ef.
SparsePolynomial delta_poly_oracle(const std::vector<LabelSet>& bases, int e, int f) {
    SparsePolynomial out;
    for (LabelSet a : bases) {
        for (LabelSet b : bases) {
            const auto key =
                SparsePolynomial::subset_key(a) + SparsePolynomial::subset_key(b);
            if (a.contains(e) && !a.contains(f) && b.contains(f) && !b.contains(e))
                out.add_term(key, 1);
            if (a.contains(e) && a.contains(f) && !b.contains(e) && !b.contains(f))
                out.add_term(key, -1);
        }
    }
    return out;
}

void check_report_invariants(const RayleighReport& rep) {
    for (const RayleighViolation& v : rep.violations) {
        CHECK(v.delta < 0);
        CHECK(rep.min_delta <= v.delta);
    }
    CHECK(rep.min_delta <= rep.all_ones_delta);
}

}  // namespace

TEST_CASE("fig3 delta at all-ones weights is 16") {
    const Positroid p = enumerate_bases(build_le_graph(fig3_diagram()));
    const WeightVector ones(7, Rational(1));
    // Counts off the basis list: 5 with 2 only, 4 with 7 only, 2 with both,
    // 2 with neither; 5*4 - 2*2 = 16.
    CHECK(rayleigh_delta_eval(p, 2, 7, ones) == 16);
    CHECK(rayleigh_delta_eval(p, 7, 2, ones) == 16);

    const WeightVector zeros(7, Rational(0));
    CHECK(rayleigh_delta_eval(p, 2, 7, zeros) == 0);

    CHECK_THROWS_AS(rayleigh_delta_eval(p, 2, 2, ones), PreconditionError);
    CHECK_THROWS_AS(rayleigh_delta_eval(p, 0, 7, ones), PreconditionError);
}

TEST_CASE("pairs sharing no basis have vanishing left term") {
    const Positroid p = u12_positroid();
    const WeightVector ones(2, Rational(1));
    // M_12 = 0, so delta = M^2_1 * M^1_2 = 1.
    CHECK(rayleigh_delta_eval(p, 1, 2, ones) == 1);
}

TEST_CASE("difference polynomials at small cases") {
    const Positroid u12 = u12_positroid();
    const SparsePolynomial x1x2 = rayleigh_delta_poly(u12, 1, 2);
    CHECK(x1x2.term_count() == 1);
    CHECK(x1x2.coefficient(SparsePolynomial::subset_key(LabelSet::of({1, 2}))) == 1);

    const Positroid single = positroid_from_bases(2, 2, {LabelSet::of({1, 2})});
    CHECK(rayleigh_delta_poly(single, 1, 2).is_zero());
}

TEST_CASE("fig3 difference polynomial dominates coefficientwise") {
    const Positroid p = enumerate_bases(build_le_graph(fig3_diagram()));
    const SparsePolynomial poly = rayleigh_delta_poly(p, 2, 7);
    CHECK(poly.all_coefficients_nonnegative());
    CHECK(poly == delta_poly_oracle(fig3_bases(), 2, 7));

    const WeightVector ones(7, Rational(1));
    CHECK(poly.eval(ones) == 16);
}

TEST_CASE("delta polynomial evaluates to delta") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const RandomInstance inst = random_instance(seed + 2000, 2, 7);
        const Positroid& p = inst.positroid;
        SeededRng rng(seed);
        const int e = rng.range(1, p.n);
        int f = rng.range(1, p.n - 1);
        if (f >= e) ++f;
        WeightVector w(static_cast<std::size_t>(p.n));
        for (auto& entry : w) entry = rng.signed_rational();
        CHECK(rayleigh_delta_poly(p, e, f).eval(w) == rayleigh_delta_eval(p, e, f, w));
    }
}

TEST_CASE("delta is symmetric in e and f") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RandomInstance inst = random_instance(seed + 2500, 2, 7);
        const Positroid& p = inst.positroid;
        SeededRng rng(seed);
        WeightVector w(static_cast<std::size_t>(p.n));
        for (auto& entry : w) entry = rng.grid_rational(false);
        for (int e = 1; e <= p.n; ++e)
            for (int f = e + 1; f <= p.n; ++f)
                CHECK(rayleigh_delta_eval(p, e, f, w) == rayleigh_delta_eval(p, f, e, w));
    }
}

TEST_CASE("delta is exactly nonnegative at positive rational weights") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RandomInstance inst = random_instance(seed + 3000, 2, 7);
        const Positroid& p = inst.positroid;
        SeededRng rng(seed);
        for (int trial = 0; trial < 20; ++trial) {
            WeightVector w(static_cast<std::size_t>(p.n));
            for (auto& entry : w) entry = rng.grid_rational(true);
            for (int e = 1; e <= p.n; ++e)
                for (int f = e + 1; f <= p.n; ++f) {
                    INFO("seed " << seed << " pair (" << e << "," << f << ")");
                    CHECK(rayleigh_delta_eval(p, e, f, w) >= 0);
                }
        }
    }
}

TEST_CASE("difference polynomials dominate across random positroids") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const RandomInstance inst = random_instance(seed + 3500, 2, 7);
        const Positroid& p = inst.positroid;
        for (int e = 1; e <= p.n; ++e)
            for (int f = e + 1; f <= p.n; ++f) {
                const SparsePolynomial poly = rayleigh_delta_poly(p, e, f);
                INFO("seed " << seed << " pair (" << e << "," << f << ")");
                CHECK(poly.all_coefficients_nonnegative());
                CHECK(poly == delta_poly_oracle(p.bases, e, f));
            }
    }
}

TEST_CASE("sampling reports stay clean on fig3") {
    const Positroid p = enumerate_bases(build_le_graph(fig3_diagram()));
    const std::vector<RayleighReport> reports = sample_rayleigh(p, 25, 7, true);
    REQUIRE(reports.size() == 42);

    std::size_t violations = 0;
    bool found_27 = false;
    for (const RayleighReport& rep : reports) {
        violations += rep.violations.size();
        CHECK(rep.trials == 25);
        CHECK(rep.evaluations == 25);
        check_report_invariants(rep);
        if (rep.e == 2 && rep.f == 7) {
            found_27 = true;
            CHECK(rep.all_ones_delta == 16);
            CHECK(rep.min_delta <= 16);
        }
    }
    CHECK(found_27);
    CHECK(violations == 0);

    CHECK_THROWS_AS(sample_rayleigh(p, 0, 7, true), PreconditionError);
}

TEST_CASE("sampling a single-basis positroid gives all-zero deltas") {
    const Positroid single = positroid_from_bases(3, 2, {LabelSet::of({1, 3})});
    for (const RayleighReport& rep : sample_rayleigh(single, 10, 3, true)) {
        CHECK(rep.violations.empty());
        CHECK(rep.min_delta == 0);
        CHECK(rep.all_ones_delta == 0);
    }
}

TEST_CASE("sampling with zero entries allowed stays clean") {
    const Positroid p = enumerate_bases(build_le_graph(u24_diagram()));
    std::size_t violations = 0;
    for (const RayleighReport& rep : sample_rayleigh(p, 50, 11, false))
        violations += rep.violations.size();
    CHECK(violations == 0);
}

TEST_CASE("sampled deltas agree with the direct evaluation route") {
    const Positroid p = enumerate_bases(build_le_graph(u24_diagram()));
    // Re-derive trial 0 (all ones) for every pair via rayleigh_delta_eval.
    const WeightVector ones(4, Rational(1));
    for (const RayleighReport& rep : sample_rayleigh(p, 1, 0, true))
        CHECK(rep.all_ones_delta == rayleigh_delta_eval(p, rep.e, rep.f, ones));
}

TEST_CASE("balanced check passes on fig3") {
    const Positroid p = enumerate_bases(build_le_graph(fig3_diagram()));
    const BalancedReport report = balanced_check(p);
    CHECK(report.violations.empty());
    CHECK(report.minors_checked > 0);

    // Spot check the minor I={2}, J={7} at the pair (3,5): counts off the
    // frozen list give 1*1 <= 1*2.
    long long both = 0, neither = 0, e_only = 0, f_only = 0;
    for (LabelSet basis : fig3_bases()) {
        if (!basis.contains(2) || basis.contains(7)) continue;
        const bool h3 = basis.contains(3), h5 = basis.contains(5);
        if (h3 && h5) ++both;
        else if (h3) ++e_only;
        else if (h5) ++f_only;
        else ++neither;
    }
    CHECK(both == 1);
    CHECK(neither == 1);
    CHECK(e_only == 1);
    CHECK(f_only == 2);
    CHECK(both * neither <= e_only * f_only);
}

TEST_CASE("balanced check honors its size guard") {
    Positroid big;
    big.n = 13;
    big.r = 1;
    big.bases = {LabelSet::of({1})};
    CHECK_THROWS_AS(balanced_check(big), SizeGuardError);
}

TEST_CASE("balanced check passes across random positroids") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const RandomInstance inst = random_instance(seed + 4000, 2, 8);
        INFO("seed " << seed);
        CHECK(balanced_check(inst.positroid).violations.empty());
    }
}

TEST_CASE("derivative form is constant 1 for U_{1,2}") {
    const Positroid p = u12_positroid();
    // M = x1 + x2: dM/dx1 * dM/dx2 - M * d2M/dx1dx2 = 1 everywhere.
    const RayleighReport report = strong_probe(p, 1, 2, 200, 5);
    CHECK(report.violations.empty());
    CHECK(report.min_delta == 1);
    CHECK(report.all_ones_delta == 1);
    CHECK(report.evaluations == 200);
}

TEST_CASE("literal and derivative forms diverge at mixed signs") {
    const Positroid p = u12_positroid();
    const WeightVector w = {Rational(1), Rational(-1)};
    CHECK(rayleigh_delta_eval(p, 1, 2, w) == -1);
    CHECK(rayleigh_delta_prime_eval(p, 1, 2, w) == 1);

    // At strictly positive inputs the two differ by the factor x_e x_f > 0.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SeededRng rng(seed);
        const WeightVector pos = {rng.grid_rational(true), rng.grid_rational(true)};
        const Rational delta = rayleigh_delta_eval(p, 1, 2, pos);
        const Rational delta_prime = rayleigh_delta_prime_eval(p, 1, 2, pos);
        CHECK(delta == delta_prime * pos[0] * pos[1]);
    }
}

TEST_CASE("derivative and literal forms scale by x_e x_f on any positroid") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RandomInstance inst = random_instance(seed + 4500, 2, 7);
        const Positroid& p = inst.positroid;
        SeededRng rng(seed);
        WeightVector w(static_cast<std::size_t>(p.n));
        for (auto& entry : w) entry = rng.signed_rational();
        const int e = rng.range(1, p.n);
        int f = rng.range(1, p.n - 1);
        if (f >= e) ++f;
        CHECK(rayleigh_delta_eval(p, e, f, w) ==
              rayleigh_delta_prime_eval(p, e, f, w) * w[static_cast<std::size_t>(e - 1)] *
                  w[static_cast<std::size_t>(f - 1)]);
    }
}

TEST_CASE("strong probe on fig3 records a run-time minimum") {
    const Positroid p = enumerate_bases(build_le_graph(fig3_diagram()));
    const RayleighReport report = strong_probe(p, 2, 7, 300, 17);
    CHECK(report.trials == 300);
    CHECK(report.evaluations == 300);
    CHECK(report.all_ones_delta == 16);
    check_report_invariants(report);

    CHECK_THROWS_AS(strong_probe(p, 2, 2, 10, 0), PreconditionError);
}
