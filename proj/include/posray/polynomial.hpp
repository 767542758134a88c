#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "posray/errors.hpp"
#include "posray/labelset.hpp"
#include "posray/rational.hpp"

namespace posray {

// Integer-coefficient polynomial in x_1..x_n with per-variable exponents
// bounded by 2, enough for basis enumerators (multilinear) and for products
// of two of them. Monomials are packed two bits per label, so adding packed
// keys of two multilinear monomials is exponent addition with no carries.
class SparsePolynomial {
  public:
    using Key = std::uint64_t;

    static Key subset_key(LabelSet s) {
        Key k = 0;
        for (int label : s.labels()) k |= Key{1} << (2 * (label - 1));
        return k;
    }

    static int exponent(Key k, int label) {
        return static_cast<int>((k >> (2 * (label - 1))) & 3u);
    }

    static std::vector<int> exponents(Key k, int n) {
        std::vector<int> out(static_cast<std::size_t>(n));
        for (int label = 1; label <= n; ++label)
            out[static_cast<std::size_t>(label - 1)] = exponent(k, label);
        return out;
    }

    static SparsePolynomial zero() { return {}; }

    static SparsePolynomial monomial(LabelSet support, long long coeff = 1) {
        SparsePolynomial p;
        p.add_term(subset_key(support), coeff);
        return p;
    }

    void add_term(Key key, long long coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const std::map<Key, long long>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    long long coefficient(Key key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? 0 : it->second;
    }

    bool is_multilinear() const {
        for (const auto& [key, coeff] : terms_) {
            (void)coeff;
            if ((key & 0xAAAAAAAAAAAAAAAAull) != 0) return false;  // any exponent >= 2
        }
        return true;
    }

    bool all_coefficients_nonnegative() const {
        for (const auto& [key, coeff] : terms_)
            if (coeff < 0) return false;
        return true;
    }

    SparsePolynomial& operator+=(const SparsePolynomial& o) {
        for (const auto& [key, coeff] : o.terms_) add_term(key, coeff);
        return *this;
    }

    SparsePolynomial& operator-=(const SparsePolynomial& o) {
        for (const auto& [key, coeff] : o.terms_) add_term(key, -coeff);
        return *this;
    }

    friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
        a += b;
        return a;
    }

    friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
        a -= b;
        return a;
    }

    // Defined for multilinear operands only; keys then add without carries.
    friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
        if (!a.is_multilinear() || !b.is_multilinear())
            throw PreconditionError("polynomial product requires multilinear operands");
        SparsePolynomial out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) out.add_term(ka + kb, ca * cb);
        return out;
    }

    Rational eval(const WeightVector& w) const {
        Rational total = 0;
        for (const auto& [key, coeff] : terms_) {
            Rational term(coeff);
            Key k = key;
            int label = 1;
            while (k != 0) {
                switch (k & 3u) {
                    case 1: term *= w[static_cast<std::size_t>(label - 1)]; break;
                    case 2:
                        term *= w[static_cast<std::size_t>(label - 1)];
                        term *= w[static_cast<std::size_t>(label - 1)];
                        break;
                    case 3: throw InvariantError("exponent 3 in packed monomial");
                    default: break;
                }
                k >>= 2;
                ++label;
            }
            total += term;
        }
        return total;
    }

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  private:
    std::map<Key, long long> terms_;
};

}  // namespace posray
