#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "posray/errors.hpp"

namespace posray {

// Subset of the ground set {1..n}, n <= 31, as a bitmask (bit k <-> label k+1).
class LabelSet {
  public:
    constexpr LabelSet() = default;

    static constexpr LabelSet from_mask(std::uint32_t mask) { return LabelSet(mask); }

    static constexpr LabelSet full(int n) {
        return LabelSet(n == 0 ? 0u : (std::uint32_t{1} << n) - 1u);
    }

    static LabelSet of(std::initializer_list<int> labels) {
        LabelSet s;
        for (int v : labels) s.add(v);
        return s;
    }

    static LabelSet of(const std::vector<int>& labels) {
        LabelSet s;
        for (int v : labels) s.add(v);
        return s;
    }

    constexpr std::uint32_t mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int label) const { return (bits_ >> (label - 1)) & 1u; }

    void add(int label) {
        if (label < 1 || label > 31) throw PreconditionError("label out of range 1..31");
        bits_ |= std::uint32_t{1} << (label - 1);
    }
    constexpr void remove(int label) { bits_ &= ~(std::uint32_t{1} << (label - 1)); }

    constexpr LabelSet united(LabelSet o) const { return LabelSet(bits_ | o.bits_); }
    constexpr LabelSet intersected(LabelSet o) const { return LabelSet(bits_ & o.bits_); }
    constexpr LabelSet minus(LabelSet o) const { return LabelSet(bits_ & ~o.bits_); }
    constexpr bool subset_of(LabelSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool disjoint_with(LabelSet o) const { return (bits_ & o.bits_) == 0; }

    constexpr int min_label() const { return std::countr_zero(bits_) + 1; }

    std::vector<int> labels() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t m = bits_; m != 0; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    std::string compact() const {
        std::string s;
        for (int v : labels()) {
            if (!s.empty()) s += ',';
            s += std::to_string(v);
        }
        return "{" + s + "}";
    }

    // Lexicographic order on the sorted label tuples: {1,4} < {2,3}.
    static constexpr bool lex_less(LabelSet a, LabelSet b) {
        std::uint32_t x = a.bits_, y = b.bits_;
        while (x != 0 && y != 0) {
            int la = std::countr_zero(x), lb = std::countr_zero(y);
            if (la != lb) return la < lb;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

    friend constexpr bool operator==(LabelSet, LabelSet) = default;

  private:
    explicit constexpr LabelSet(std::uint32_t bits) : bits_(bits) {}
    std::uint32_t bits_ = 0;
};

// All size-k subsets of {1..n} in increasing mask order (Gosper's hack).
template <typename Fn>
void for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(LabelSet{});
        return;
    }
    const std::uint32_t limit = std::uint32_t{1} << n;
    std::uint32_t v = (std::uint32_t{1} << k) - 1;
    while (v < limit) {
        fn(LabelSet::from_mask(v));
        std::uint32_t t = v | (v - 1);
        v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    }
}

// All submasks of `space` including the empty set.
template <typename Fn>
void for_each_subset_of(LabelSet space, Fn&& fn) {
    const std::uint32_t m = space.mask();
    std::uint32_t sub = m;
    while (true) {
        fn(LabelSet::from_mask(sub));
        if (sub == 0) break;
        sub = (sub - 1) & m;
    }
}

}  // namespace posray
