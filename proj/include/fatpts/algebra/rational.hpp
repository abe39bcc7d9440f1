#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fatpts {

using Integer = mpz_class;
/// Exact rational, always canonical (positive denominator, lowest terms).
using Rational = mpq_class;

using IntRow = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Accepts "n" or "n/d" with optional sign. Throws InvalidInput.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

Integer binomial(unsigned long n, unsigned long k);

/// Multiplies by the lcm of the denominators and divides by the gcd of the
/// numerators. The result is primitive with the same sign pattern.
IntRow primitive_integer_row(const RationalVector& v);

}  // namespace fatpts
