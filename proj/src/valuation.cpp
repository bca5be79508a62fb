#include "nadyn/valuation.hpp"

#include "nadyn/error.hpp"

namespace nadyn {

const Rational& Valuation::value() const {
  if (!value_) throw PreconditionError("valuation is infinite");
  return *value_;
}

std::string Valuation::to_string() const { return value_ ? nadyn::to_string(*value_) : std::string("inf"); }

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(Rational(*a.value_ + *b.value_));
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
  return *a.value_ == *b.value_;
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.value_ < *b.value_;
}

Valuation scale(long n, const Valuation& v) {
  if (n < 0) throw PreconditionError("valuation scale factor must be nonnegative");
  if (n == 0) return Valuation(0L);
  if (v.is_infinite()) return v;
  return Valuation(Rational(v.value() * n));
}

Valuation parse_valuation(std::string_view text) {
  if (text == "inf" || text == "+inf" || text == "infinity") return Valuation::infinity();
  return Valuation(parse_rational(text));
}

Place::Place(Integer prime, long ramification) : prime_(std::move(prime)), ramification_(ramification) {
  if (prime_ < 2 || mpz_probab_prime_p(prime_.get_mpz_t(), 30) == 0)
    throw PreconditionError("place requires a prime p, got " + prime_.get_str());
  if (ramification_ < 1)
    throw PreconditionError("ramification index must be >= 1, got " + std::to_string(ramification_));
}

Valuation val(const Rational& x, const Integer& p) {
  if (p < 2) throw PreconditionError("valuation requires p >= 2");
  if (x == 0) return Valuation::infinity();
  Integer rest;
  const long up = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), p.get_mpz_t()));
  const long down = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), p.get_mpz_t()));
  return Valuation(up - down);
}

bool in_value_group(const Rational& sigma, long e) {
  if (e < 1) throw PreconditionError("ramification index must be >= 1");
  const Rational scaled = sigma * e;
  return scaled.get_den() == 1;
}

}  // namespace nadyn
