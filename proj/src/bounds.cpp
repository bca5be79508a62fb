#include "nadyn/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "nadyn/error.hpp"

namespace nadyn {

LcmResult lcm_list(std::span<const long> values) {
  if (values.empty()) throw PreconditionError("lcm of an empty list");
  LcmResult r{Integer(1), 0};
  for (long v : values) {
    if (v < 1) throw PreconditionError("ramification indices must be >= 1");
    mpz_lcm_ui(r.lcm.get_mpz_t(), r.lcm.get_mpz_t(), static_cast<unsigned long>(v));
    r.max = std::max(r.max, v);
  }
  return r;
}

BoundTable bound_table(long e_max, double constant) {
  if (e_max < 1) throw PreconditionError("e_max must be >= 1");
  if (!(constant > 0)) throw PreconditionError("the constant C must be positive");
  BoundTable table;
  const double log_c = std::log(constant);
  Integer lcm = 1;
  Integer three_power = 1;
  for (long e = 1; e <= e_max; ++e) {
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(e));
    three_power *= 3;
    BoundRow row;
    row.e = e;
    row.lcm = lcm;
    const double de = static_cast<double>(e);
    row.log_pottmeyer = log_c + 2 * de - (2 * de + 1) * std::log(de);
    row.log_new_bound = log_c - 2 * log_abs(lcm);
    row.log_nine_exp = log_c - de * std::log(9.0);
    row.pottmeyer = std::exp(row.log_pottmeyer);
    row.new_bound = std::exp(row.log_new_bound);
    row.nine_exp = std::exp(row.log_nine_exp);
    row.lcm_within_three_power = lcm <= three_power;
    // C/l^2 >= C 9^-e  <=>  l^2 <= 9^e  <=>  l <= 3^e
    row.new_at_least_nine_exp = Integer(lcm * lcm) <= Integer(three_power * three_power);
    table.rows.push_back(std::move(row));
  }
  for (auto it = table.rows.rbegin(); it != table.rows.rend(); ++it) {
    if (!(it->log_new_bound > it->log_pottmeyer)) break;
    table.crossover = it->e;
  }
  return table;
}

std::optional<long> first_lcm_violation(long n_max) {
  Integer lcm = 1;
  Integer three_power = 1;
  for (long n = 1; n <= n_max; ++n) {
    mpz_lcm_ui(lcm.get_mpz_t(), lcm.get_mpz_t(), static_cast<unsigned long>(n));
    three_power *= 3;
    if (lcm > three_power) return n;
  }
  return std::nullopt;
}

void write_bound_csv(std::ostream& out, const BoundTable& table) {
  out << "e,lcm,pottmeyer,new_bound,nine_exp,log_pottmeyer,log_new_bound,log_nine_exp,lcm_le_3e,new_ge_nine_exp\n";
  char buf[256];
  for (const auto& r : table.rows) {
    out << r.e << ',' << r.lcm.get_str() << ',';
    std::snprintf(buf, sizeof buf, "%.6e,%.6e,%.6e,%.9g,%.9g,%.9g,%s,%s\n", r.pottmeyer, r.new_bound, r.nine_exp,
                  r.log_pottmeyer, r.log_new_bound, r.log_nine_exp, r.lcm_within_three_power ? "true" : "false",
                  r.new_at_least_nine_exp ? "true" : "false");
    out << buf;
  }
}

}  // namespace nadyn
