#pragma once

#include <random>
#include <vector>

#include "nadyn/polynomial.hpp"
#include "nadyn/rational.hpp"

namespace nadyn::testing {

inline constexpr long kSmallPrimes[] = {2, 3, 5, 7, 11, 13};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  long prime() { return kSmallPrimes[integer(0, 5)]; }

  // Rational with numerator and denominator built from small factors, so that
  // valuations at small primes vary.
  Rational rational(long max_abs = 60) {
    Rational x(integer(-max_abs, max_abs), integer(1, max_abs));
    x.canonicalize();
    return x;
  }

  Rational nonzero_rational(long max_abs = 60) {
    for (;;) {
      Rational x = rational(max_abs);
      if (x != 0) return x;
    }
  }

  // Rational with a chosen p-power part times a small unit-ish cofactor.
  Rational padic_rational(long p, long min_exp, long max_exp) {
    Rational x = nonzero_rational(12);
    const long k = integer(min_exp, max_exp);
    Integer pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
    if (k >= 0)
      x *= pk;
    else
      x /= pk;
    return x;
  }

  RationalPoly poly(int degree, long max_abs = 20) {
    std::vector<Rational> c(degree + 1);
    for (auto& a : c) a = rational(max_abs);
    c[degree] = nonzero_rational(max_abs);
    return RationalPoly(std::move(c));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace nadyn::testing
