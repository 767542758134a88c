#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "posray/rational.hpp"

namespace posray {

// Deterministic seeded generator. mt19937_64's output sequence is fixed by the
// standard; bounded draws avoid std::uniform_int_distribution, whose mapping is
// implementation-defined.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    std::uint64_t bounded(std::uint64_t n) { return gen_() % n; }

    // Inclusive range.
    int range(int lo, int hi) {
        return lo + static_cast<int>(bounded(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool bernoulli(std::uint64_t threshold32) { return (gen_() >> 32) < threshold32; }

    // Positive: numerator 1..100; otherwise 0..100. Denominator 1..100.
    Rational grid_rational(bool strictly_positive) {
        std::uint64_t num = strictly_positive ? 1 + bounded(100) : bounded(101);
        std::uint64_t den = 1 + bounded(100);
        return Rational(BigInt(num), BigInt(den));
    }

    // Signed magnitude <= 10: numerator -1000..1000, denominator 1..100.
    Rational signed_rational() {
        std::int64_t num = static_cast<std::int64_t>(bounded(2001)) - 1000;
        std::uint64_t den = 1 + bounded(100);
        return Rational(BigInt(num), BigInt(den));
    }

    // Probability as a 32-bit threshold; p=1 maps to 2^32 (always true).
    static std::uint64_t probability_threshold(double p) {
        if (p <= 0.0) return 0;
        if (p >= 1.0) return std::uint64_t{1} << 32;
        return static_cast<std::uint64_t>(std::llround(p * 4294967296.0));
    }

  private:
    std::mt19937_64 gen_;
};

}  // namespace posray
