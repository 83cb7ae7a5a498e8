#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ietlab {

using BigInt = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

// Decimal string, no precision loss.
std::string to_decimal(const BigInt& value);

// Always "num/den", including integers ("3/1").
std::string to_fraction_string(const Rational& value);

// Accepts "num/den" or a plain integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
BigInt parse_bigint(std::string_view text);

// Rational from two machine integers, canonicalized.
Rational make_rational(long num, long den);

BigInt l1_norm(const IntVector& v);
Rational l1_distance(const RationalVector& a, const RationalVector& b);

// Natural logarithm of a positive integer / rational, computed from the
// binary exponent and the leading 64 bits of the magnitude in long double.
// Relative error is well below 1e-12 for every value the lab produces.
long double ln(const BigInt& value);
long double ln(const Rational& value);

std::size_t bit_length(const BigInt& value);

// "%.15g" formatting used by every CSV/JSON float column.
std::string format_decimal(long double value);

}  // namespace ietlab
