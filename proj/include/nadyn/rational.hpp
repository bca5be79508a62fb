#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace nadyn {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical text form: "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& x);

// Accepts "[-]digits" or "[-]digits/digits" with a nonzero denominator.
Rational parse_rational(std::string_view text);

// Natural logarithm of |n|; n must be nonzero. Safe for numbers far beyond
// the range of double.
double log_abs(const Integer& n);
double log_abs(const Rational& x);

std::size_t bit_size(const Rational& x);

Rational power(const Rational& base, unsigned long exponent);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);

// Prime factors of |n| (n != 0) in increasing order, without multiplicity.
// Trial division with a probabilistic primality check on the cofactor; throws
// ResourceError when a composite cofactor survives the trial bound.
std::vector<Integer> prime_factors(const Integer& n);

// All positive divisors of |n| (n != 0), increasing.
std::vector<Integer> divisors(const Integer& n);

}  // namespace nadyn
