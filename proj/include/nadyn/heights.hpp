#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nadyn/polynomial.hpp"
#include "nadyn/valuation.hpp"

namespace nadyn {

// h(m/n) = log max(|m|, |n|) for coprime m, n; h(0) = 0.
double weil_height(const Rational& x);

/// One place's share g_v(x) = lim d^(-m) log+ |phi^m(x)|_v of the canonical
/// height. The true value lies in [value - error_bound, value + error_bound].
struct LocalHeight {
  double value = 0.0;
  double error_bound = 0.0;
  // Finite places with a certified answer: value = log_p_coefficient * log p exactly.
  std::optional<Rational> log_p_coefficient;
  // First orbit step in the dominance regime, when there is one.
  std::optional<std::size_t> escape_step;
};

inline constexpr int kDefaultLocalMaxIter = 64;

// Finite place p. Exact once the orbit enters the dominance regime
// val(z) < escape_threshold; exactly 0 when boundedness is certified (exact
// cycle or a certified-bounded disc around an orbit point).
LocalHeight local_escape_rate(const RationalPoly& phi, const Rational& x, const Integer& p,
                              int max_iter = kDefaultLocalMaxIter);

// Archimedean place, in double precision with a running error bound.
// Throws ResourceError when `epsilon` cannot be met in double precision.
LocalHeight archimedean_escape_rate(const RationalPoly& phi, const Rational& x, double epsilon);

// Primes dividing a coefficient denominator or the denominator of x. At every
// other prime the orbit stays integral and contributes exactly 0.
std::vector<Integer> relevant_primes(const RationalPoly& phi, const Rational& x);

struct HeightResult {
  double value = 0.0;
  double error_bound = 0.0;
  bool preperiodic = false;
  std::map<std::string, LocalHeight> local_parts;  // "inf" or the decimal prime
};

HeightResult canonical_height(const RationalPoly& phi, const Rational& x, double epsilon = 1e-8);

struct PreperiodicityResult {
  bool preperiodic = false;
  std::size_t preperiod = 0;              // index where the cycle is entered
  std::size_t period = 0;
  std::optional<std::size_t> escape_step;  // first step with height above the bound
  std::vector<Rational> cycle;
  double height_bound = 0.0;
};

// Height above which phi strictly increases the Weil height.
double preperiodicity_height_bound(const RationalPoly& phi);

PreperiodicityResult is_preperiodic(const RationalPoly& phi, const Rational& x);

struct SurveyRecord {
  Rational x;
  double height = 0.0;
  double error_bound = 0.0;
  bool preperiodic = false;
  LocalHeight at_prime;  // g_p(x) for the surveyed prime
};

struct SurveyOptions {
  double epsilon = 1e-8;
  std::size_t max_points = 2'000'000;
  unsigned workers = 0;  // 0: hardware concurrency
};

struct SurveyResult {
  std::vector<SurveyRecord> records;  // enumeration order
  std::optional<SurveyRecord> min_positive;
  std::vector<Rational> preperiodic_points;
};

// All m/n in lowest terms with n >= 1 and max(|m|, n) <= exp(max_log_height),
// ordered by denominator, then numerator.
std::vector<Rational> enumerate_rationals(double max_log_height, std::size_t max_points);

SurveyResult survey(const RationalPoly& phi, const Integer& p, double max_log_height,
                    const SurveyOptions& options = {});

// Columns: x,num,den,canonical_height,error_bound,preperiodic
void write_survey_csv(std::ostream& out, const SurveyResult& result);

}  // namespace nadyn
