#pragma once

#include <optional>
#include <string>

#include "nadyn/rational.hpp"

namespace nadyn {

/// Additive p-adic valuation: a rational number or +infinity, with
/// |x|_v = p^(-v). Infinity is a distinct state, never a large sentinel.
class Valuation {
 public:
  Valuation(Rational value) : value_(std::move(value)) { value_->canonicalize(); }  // NOLINT(google-explicit-constructor)
  Valuation(long value) : value_(Rational(value)) {}       // NOLINT(google-explicit-constructor)

  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  // Throws PreconditionError on infinity.
  const Rational& value() const;

  std::string to_string() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b);
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

 private:
  Valuation() = default;
  std::optional<Rational> value_;
};

inline const Valuation& min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

// n * v for a nonnegative integer n, with 0 * infinity = 0 (the constant term
// of a Taylor expansion carries no power of the radius).
Valuation scale(long n, const Valuation& v);

// "inf" or the rational text form.
Valuation parse_valuation(std::string_view text);

/// A finite place of the base field: residue prime p and ramification index e
/// over Q. Only the pair (p, e) is needed by the criteria built on top.
class Place {
 public:
  explicit Place(Integer prime, long ramification = 1);

  const Integer& prime() const { return prime_; }
  long ramification() const { return ramification_; }

  friend bool operator==(const Place& a, const Place& b) = default;

 private:
  Integer prime_;
  long ramification_;
};

// Valuation of an integer or rational at p (p >= 2). val(0) = infinity.
Valuation val(const Rational& x, const Integer& p);
inline Valuation val(const Rational& x, const Place& place) { return val(x, place.prime()); }

// sigma lies in the value group (1/e)Z of a field with ramification e.
bool in_value_group(const Rational& sigma, long e);

}  // namespace nadyn
