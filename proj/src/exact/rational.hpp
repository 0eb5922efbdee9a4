#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace galoisdr {

// Arbitrary precision integers and rationals are GMP's. mpq_class keeps its
// value canonical (reduced, positive denominator) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_zero_element(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero_element(const Integer& z) { return sgn(z) == 0; }
inline bool is_zero_element(std::uint64_t v) { return v == 0; }

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

/// Accepts "a", "-a", "a/b" with optional surrounding blanks. Throws
/// GaloisError(ParseError) otherwise.
Rational parse_rational(std::string_view text);

/// Smallest positive integer d with d*q integral, taken over many values.
Integer lcm_denominator(const Integer& acc, const Rational& q);

/// Total order used for canonical sorting of coordinate vectors.
inline int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

}  // namespace galoisdr
