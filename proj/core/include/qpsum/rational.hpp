#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "qpsum/errors.hpp"

namespace qpsum {

// All coefficients live in exact arbitrary-precision rationals; arithmetic
// never rounds and results are kept in lowest terms with positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.str(); }

inline std::string to_string(const BigInt& n) { return n.str(); }

/// Parses "p", "-p" or "p/q" with q > 0 after normalization.
Rational parse_rational(const std::string& text);

BigInt factorial(int n);
BigInt binomial(int n, int k);

} // namespace qpsum
