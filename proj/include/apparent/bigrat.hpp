#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace apparent {

/// Arbitrary-precision rational. GMP keeps every value produced by
/// arithmetic in lowest terms with a positive denominator.
using BigRat = mpq_class;
using BigInt = mpz_class;

/// Accepts "p/q", integers, and plain decimals ("0.25", "-1.5e-3"); decimals
/// are converted exactly, never through a binary float.
BigRat parse_rational(std::string_view text);

/// Canonical text: "p/q" or an integer string.
std::string to_string(const BigRat& value);

bool is_integer(const BigRat& value);

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and GMP arithmetic assumes reduced operands.
BigRat ratio(long num, long den);

/// Exact conversion of a finite double (every double is a dyadic rational).
BigRat from_double(double value);

}  // namespace apparent
