#pragma once

#include <cstdint>
#include <vector>

#include "posray/errors.hpp"
#include "posray/labelset.hpp"
#include "posray/polynomial.hpp"
#include "posray/positroid.hpp"
#include "posray/rational.hpp"
#include "posray/rng.hpp"

namespace posray {

struct RayleighViolation {
    WeightVector weights;
    Rational delta;
};

struct RayleighReport {
    int e = 0;
    int f = 0;
    std::size_t trials = 0;
    std::size_t evaluations = 0;
    std::vector<RayleighViolation> violations;
    Rational min_delta = 0;
    Rational all_ones_delta = 0;  // trial 0 is always the all-ones vector
};

namespace detail {

inline void require_pair(const Positroid& p, int e, int f, const char* who) {
    if (e == f) throw PreconditionError(std::string(who) + ": e and f must be distinct");
    if (e < 1 || e > p.n || f < 1 || f > p.n)
        throw PreconditionError(std::string(who) + ": labels out of range");
}

}  // namespace detail

// Delta = M^f_e(w) * M^e_f(w) - M_ef(w) * M^ef(w), exact. Nonnegative at
// nonnegative weights is the Rayleigh inequality; signed weights are allowed
// here for probing.
inline Rational rayleigh_delta_eval(const Positroid& p, int e, int f, const WeightVector& w) {
    detail::require_pair(p, e, f, "rayleigh_delta_eval");
    const LabelSet se = LabelSet::of({e}), sf = LabelSet::of({f}), sef = LabelSet::of({e, f});
    return enumerator_eval(p, w, se, sf) * enumerator_eval(p, w, sf, se) -
           enumerator_eval(p, w, sef, LabelSet{}) * enumerator_eval(p, w, LabelSet{}, sef);
}

// The difference polynomial M^f_e * M^e_f - M_ef * M^ef; exponents stay <= 2.
// Every coefficient is nonnegative exactly when the weight-preserving
// injection exists for this pair.
inline SparsePolynomial rayleigh_delta_poly(const Positroid& p, int e, int f) {
    detail::require_pair(p, e, f, "rayleigh_delta_poly");
    const LabelSet se = LabelSet::of({e}), sf = LabelSet::of({f}), sef = LabelSet::of({e, f});
    return enumerator_poly(p, se, sf) * enumerator_poly(p, sf, se) -
           enumerator_poly(p, sef, LabelSet{}) * enumerator_poly(p, LabelSet{}, sef);
}

namespace detail {

// Deltas for every ordered pair from one weight vector, sharing the per-basis
// products and the single/pair marginal sums across pairs. Agrees with
// rayleigh_delta_eval term by term.
class PairDeltaTable {
  public:
    PairDeltaTable(const Positroid& p, const WeightVector& w) : n_(p.n) {
        if (static_cast<int>(w.size()) != p.n)
            throw PreconditionError("weight vector length differs from n");
        single_.assign(static_cast<std::size_t>(n_) + 1, Rational(0));
        pair_.assign(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(n_ + 1),
                     Rational(0));
        for (LabelSet basis : p.bases) {
            Rational prod = 1;
            const std::vector<int> labels = basis.labels();
            for (int label : labels) prod *= w[static_cast<std::size_t>(label - 1)];
            total_ += prod;
            for (std::size_t a = 0; a < labels.size(); ++a) {
                single_[static_cast<std::size_t>(labels[a])] += prod;
                for (std::size_t b = a + 1; b < labels.size(); ++b)
                    at_pair(labels[a], labels[b]) += prod;
            }
        }
    }

    Rational delta(int e, int f) const {
        const Rational& both = at_pair(std::min(e, f), std::max(e, f));
        const Rational e_only = single_[static_cast<std::size_t>(e)] - both;
        const Rational f_only = single_[static_cast<std::size_t>(f)] - both;
        const Rational neither = total_ - single_[static_cast<std::size_t>(e)] -
                                 single_[static_cast<std::size_t>(f)] + both;
        return e_only * f_only - both * neither;
    }

  private:
    Rational& at_pair(int a, int b) {
        return pair_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) +
                     static_cast<std::size_t>(b)];
    }
    const Rational& at_pair(int a, int b) const {
        return pair_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_ + 1) +
                     static_cast<std::size_t>(b)];
    }

    int n_;
    Rational total_ = 0;
    std::vector<Rational> single_;
    std::vector<Rational> pair_;
};

}  // namespace detail

// Seeded sampling of the Rayleigh inequality over all ordered pairs e != f.
// Trial 0 is the all-ones vector; later trials draw each entry from the
// rational grid with numerators and denominators up to 100.
inline std::vector<RayleighReport> sample_rayleigh(const Positroid& p, std::size_t trials,
                                                   std::uint64_t seed, bool positive_only) {
    if (trials < 1) throw PreconditionError("sample_rayleigh: trials must be >= 1");

    std::vector<std::pair<int, int>> pairs;
    for (int e = 1; e <= p.n; ++e)
        for (int f = 1; f <= p.n; ++f)
            if (e != f) pairs.push_back({e, f});

    std::vector<RayleighReport> reports(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        reports[k].e = pairs[k].first;
        reports[k].f = pairs[k].second;
        reports[k].trials = trials;
    }

    SeededRng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        WeightVector w(static_cast<std::size_t>(p.n), Rational(1));
        if (t > 0)
            for (auto& entry : w) entry = rng.grid_rational(positive_only);

        const detail::PairDeltaTable table(p, w);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const Rational delta = table.delta(pairs[k].first, pairs[k].second);
            RayleighReport& rep = reports[k];
            ++rep.evaluations;
            if (t == 0) {
                rep.all_ones_delta = delta;
                rep.min_delta = delta;
            } else if (delta < rep.min_delta) {
                rep.min_delta = delta;
            }
            if (delta < 0) rep.violations.push_back({w, delta});
        }
    }
    return reports;
}

struct BalancedViolation {
    LabelSet contracted;
    LabelSet deleted;
    int e = 0;
    int f = 0;
    long long lhs = 0;  // |N_ef| * |N^ef|
    long long rhs = 0;  // |N^f_e| * |N^e_f|
};

struct BalancedReport {
    std::size_t minors_checked = 0;
    std::size_t inequalities_checked = 0;
    std::vector<BalancedViolation> violations;
};

// Counting form of the inequality on every minor: over all disjoint (I, J)
// with nonempty minor and all pairs e, f outside I u J,
// |N_ef| * |N^ef| <= |N^f_e| * |N^e_f|. Exhausts 3^n partitions; hard guard
// n <= 12.
inline BalancedReport balanced_check(const Positroid& p) {
    if (p.n > 12)
        throw SizeGuardError("balanced_check: n=" + std::to_string(p.n) +
                             " exceeds the n <= 12 guard");
    BalancedReport report;
    const LabelSet ground = LabelSet::full(p.n);
    for_each_subset_of(ground, [&](LabelSet contracted) {
        for_each_subset_of(ground.minus(contracted), [&](LabelSet deleted) {
            std::vector<LabelSet> bases;
            for (LabelSet basis : p.bases)
                if (contracted.subset_of(basis) && deleted.disjoint_with(basis))
                    bases.push_back(basis);
            if (bases.empty()) return;
            ++report.minors_checked;

            const LabelSet free = ground.minus(contracted).minus(deleted);
            const std::vector<int> labels = free.labels();
            for (std::size_t a = 0; a < labels.size(); ++a) {
                for (std::size_t b = a + 1; b < labels.size(); ++b) {
                    const int e = labels[a], f = labels[b];
                    long long both = 0, neither = 0, e_only = 0, f_only = 0;
                    for (LabelSet basis : bases) {
                        const bool he = basis.contains(e), hf = basis.contains(f);
                        if (he && hf)
                            ++both;
                        else if (he)
                            ++e_only;
                        else if (hf)
                            ++f_only;
                        else
                            ++neither;
                    }
                    ++report.inequalities_checked;
                    if (both * neither > e_only * f_only)
                        report.violations.push_back(
                            {contracted, deleted, e, f, both * neither, e_only * f_only});
                }
            }
        });
    });
    return report;
}

// Derivative-form difference (dM/dx_e)(dM/dx_f) - M * (d2M/dx_e dx_f); equals
// Delta / (x_e x_f), so the signs agree at strictly positive inputs while the
// literal form may flip sign at mixed-sign inputs.
inline Rational rayleigh_delta_prime_eval(const Positroid& p, int e, int f,
                                          const WeightVector& w) {
    detail::require_pair(p, e, f, "rayleigh_delta_prime_eval");
    if (static_cast<int>(w.size()) != p.n)
        throw PreconditionError("weight vector length differs from n");
    Rational total = 0, d_e = 0, d_f = 0, d_ef = 0;
    for (LabelSet basis : p.bases) {
        Rational prod = 1;
        for (int label : basis.labels()) prod *= w[static_cast<std::size_t>(label - 1)];
        total += prod;
        const bool he = basis.contains(e), hf = basis.contains(f);
        const Rational we = w[static_cast<std::size_t>(e - 1)];
        const Rational wf = w[static_cast<std::size_t>(f - 1)];
        // Partial derivatives of a multilinear monomial drop one variable;
        // handle zero entries by re-multiplying the reduced product.
        if (he || hf) {
            Rational reduced = 1;
            for (int label : basis.labels())
                if (label != e && label != f) reduced *= w[static_cast<std::size_t>(label - 1)];
            if (he) d_e += hf ? reduced * wf : reduced;
            if (hf) d_f += he ? reduced * we : reduced;
            if (he && hf) d_ef += reduced;
        }
    }
    return d_e * d_f - total * d_ef;
}

// Sampling probe of the strong-Rayleigh question at signed rational inputs in
// [-10, 10]. A negative Delta' is recorded as evidence, never as a theorem.
// Trial 0 is all-ones; at strictly positive samples sign(Delta') must match
// sign(Delta), which is asserted.
inline RayleighReport strong_probe(const Positroid& p, int e, int f, std::size_t trials,
                                   std::uint64_t seed) {
    detail::require_pair(p, e, f, "strong_probe");
    if (trials < 1) throw PreconditionError("strong_probe: trials must be >= 1");

    RayleighReport report;
    report.e = e;
    report.f = f;
    report.trials = trials;

    SeededRng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        WeightVector w(static_cast<std::size_t>(p.n), Rational(1));
        if (t > 0)
            for (auto& entry : w) entry = rng.signed_rational();

        const Rational delta_prime = rayleigh_delta_prime_eval(p, e, f, w);
        ++report.evaluations;
        if (t == 0) {
            report.all_ones_delta = delta_prime;
            report.min_delta = delta_prime;
        } else if (delta_prime < report.min_delta) {
            report.min_delta = delta_prime;
        }
        if (delta_prime < 0) report.violations.push_back({w, delta_prime});

        bool all_positive = true;
        for (const auto& entry : w) all_positive = all_positive && entry > 0;
        if (all_positive) {
            const Rational delta = rayleigh_delta_eval(p, e, f, w);
            const int sp = delta_prime > 0 ? 1 : (delta_prime < 0 ? -1 : 0);
            const int sd = delta > 0 ? 1 : (delta < 0 ? -1 : 0);
            if (sp != sd)
                throw InvariantError(
                    "sign(Delta') differs from sign(Delta) at a positive input");
        }
    }
    return report;
}

}  // namespace posray
