#include "nadyn/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

constexpr unsigned long kTrialDivisionBound = 10'000'000;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::string to_string(const Rational& x) { return x.get_str(10); }

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num)) throw ParseError("expected an integer numerator in '" + std::string(text) + "'", 0);
  if (!all_digits(den))
    throw ParseError("expected a natural denominator in '" + std::string(text) + "'", slash + 1);
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + 1);
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

double log_abs(const Integer& n) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

double log_abs(const Rational& x) { return log_abs(x.get_num()) - log_abs(x.get_den()); }

std::size_t bit_size(const Rational& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

Rational power(const Rational& base, unsigned long exponent) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

std::vector<Integer> prime_factors(const Integer& n) {
  Integer rest = abs(n);
  std::vector<Integer> primes;
  if (rest == 0) return primes;
  for (unsigned long q = 2; q <= kTrialDivisionBound; q += (q == 2 ? 1 : 2)) {
    if (rest == 1) break;
    if (Integer(q) * q > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), q) != 0) {
      primes.emplace_back(q);
      while (mpz_divisible_ui_p(rest.get_mpz_t(), q) != 0) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
    }
  }
  if (rest > 1) {
    if (mpz_probab_prime_p(rest.get_mpz_t(), 30) == 0 && Integer(kTrialDivisionBound) * kTrialDivisionBound < rest)
      throw ResourceError("cannot factor " + n.get_str() + ": composite cofactor beyond the trial-division bound");
    primes.push_back(rest);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> result{Integer(1)};
  Integer rest = abs(n);
  for (const Integer& q : prime_factors(n)) {
    const std::size_t base = result.size();
    Integer qk = 1;
    while (mpz_divisible_p(rest.get_mpz_t(), q.get_mpz_t()) != 0) {
      mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), q.get_mpz_t());
      qk *= q;
      for (std::size_t i = 0; i < base; ++i) result.push_back(result[i] * qk);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace nadyn
