#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "nadyn/rational.hpp"

namespace nadyn {

struct LcmResult {
  Integer lcm;
  long max;  // e_v(P): the largest ramification index
};

// l_v(P) = lcm of the ramification indices, together with their maximum.
LcmResult lcm_list(std::span<const long> values);

/// One row of the lower-bound comparison at maximal ramification e, using the
/// worst case l = lcm{1..e}. Values that underflow double are still compared
/// through their logarithms.
struct BoundRow {
  long e = 0;
  Integer lcm;
  double pottmeyer = 0.0;  // C e^(2e) / e^(2e+1), Euler's e in the numerator
  double new_bound = 0.0;  // C / lcm^2
  double nine_exp = 0.0;   // C 9^(-e)
  double log_pottmeyer = 0.0;
  double log_new_bound = 0.0;
  double log_nine_exp = 0.0;
  bool lcm_within_three_power = false;  // lcm <= 3^e, exact
  bool new_at_least_nine_exp = false;   // C/lcm^2 >= C 9^(-e), exact (lcm^2 <= 9^e)
};

struct BoundTable {
  std::vector<BoundRow> rows;
  // Smallest e from which the lcm bound exceeds the super-exponential one on
  // every remaining row.
  std::optional<long> crossover;
};

BoundTable bound_table(long e_max, double constant = 1.0);

// Checks lcm{1..n} <= 3^n exactly for every n <= n_max; returns the first
// failing n, if any.
std::optional<long> first_lcm_violation(long n_max);

void write_bound_csv(std::ostream& out, const BoundTable& table);

}  // namespace nadyn
