#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "nadyn/rational.hpp"

namespace nadyn {

/// Dense univariate polynomial with exact rational coefficients a_0..a_d.
/// The coefficient vector is kept trimmed: the leading entry is nonzero, and
/// the zero polynomial has no entries (degree -1).
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rational> coefficients);
  RationalPoly(std::initializer_list<Rational> coefficients);

  static RationalPoly identity();
  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, std::size_t exponent);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  std::span<const Rational> coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading_coefficient() const;

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  RationalPoly& operator+=(const RationalPoly& other);
  RationalPoly& operator-=(const RationalPoly& other);
  RationalPoly& operator*=(const RationalPoly& other);
  RationalPoly& operator*=(const Rational& scalar);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline constexpr std::size_t kDefaultDegreeCap = 1'000'000;

// outer(inner(X)), by Horner's scheme.
RationalPoly compose(const RationalPoly& outer, const RationalPoly& inner);

// c_0..c_d with P(X) = sum c_n (X - a)^n, by repeated synthetic division.
std::vector<Rational> taylor_coefficients(const RationalPoly& poly, const Rational& a);

// m-fold iterate; iterate(phi, 0) = X. Throws ResourceError when d^m > degree_cap.
RationalPoly iterate(const RationalPoly& phi, unsigned m, std::size_t degree_cap = kDefaultDegreeCap);

// Rational solutions of phi(x) = x, increasing, each verified by exact evaluation.
std::vector<Rational> rational_fixed_points(const RationalPoly& phi);

// Text form accepted by parse_polynomial, e.g. "X^5 + X^2 + X + 1/2".
std::string to_string(const RationalPoly& poly);

}  // namespace nadyn
