#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace posray {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact weights a_1..a_n, indexed by label (entries[label - 1]).
using WeightVector = std::vector<Rational>;

// Canonical "p/q" form, denominator always written ("16/1").
inline std::string fraction_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// Human form: integers drop the denominator ("16", "-3/7").
inline std::string rational_text(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return fraction_string(q);
}

}  // namespace posray
