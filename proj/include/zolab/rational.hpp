#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "zolab/errors.hpp"

namespace zolab {

// Exact arbitrary-precision arithmetic. Every density, alpha, rho and
// f_alpha value in this library is a Rational; floating point appears only
// in Monte-Carlo summaries. cpp_rational keeps lowest terms and a positive
// denominator as invariants.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(BigInt(num), BigInt(den));
}

/// Parses "p/q" or a bare integer "p".
Rational parse_rational(const std::string& text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const Rational& r);

/// Largest integer <= r.
BigInt rational_floor(const Rational& r);

/// Smallest integer >= r.
BigInt rational_ceil(const Rational& r);

double rational_to_double(const Rational& r);

/// Checked narrowing for values that must fit machine integers.
long long bigint_to_ll(const BigInt& v);

} // namespace zolab
