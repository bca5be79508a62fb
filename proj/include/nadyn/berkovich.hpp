#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "nadyn/polynomial.hpp"
#include "nadyn/valuation.hpp"

namespace nadyn {

/// Point zeta_{a,r} of the Berkovich line over C_v with rational center a and
/// radius r = p^(-rho). rho = infinity is the Type I point a itself; rational
/// rho gives the Type II point attached to the closed disc D(a, r).
///
/// Equality is disc equality: same rho and val(a - a') >= rho, so two points
/// with different centers in the same disc compare equal.
class DiscPoint {
 public:
  DiscPoint(Rational center, Valuation radius_exponent, Place place);
  static DiscPoint type_one(Rational center, Place place);

  const Rational& center() const { return center_; }
  const Valuation& radius_exponent() const { return rho_; }
  const Place& place() const { return place_; }
  bool is_type_one() const { return rho_.is_infinite(); }

  // Same point with the center reduced to a short representative of the disc
  // (a p-adic truncation below precision ceil(rho)). Type I points are unchanged.
  DiscPoint canonical() const;

  friend bool operator==(const DiscPoint& a, const DiscPoint& b);

 private:
  Rational center_;
  Valuation rho_;
  Place place_;
};

// v_zeta(P) = min_n (n*rho + val(c_n)) over the Taylor coefficients of P at the
// center; zeta(P) = p^(-v_zeta(P)). For Type I points this is val(P(a)).
Valuation seminorm(const DiscPoint& zeta, const RationalPoly& poly);

// zeta <= zeta' in the Berkovich order, i.e. D(a, r) inside D(a', r').
// Throws PreconditionError when the places differ.
bool leq(const DiscPoint& zeta, const DiscPoint& other);

// Image point: center phi(a), radius exponent min_{n>=1} (n*rho + val(c_n)).
DiscPoint pushforward(const RationalPoly& phi, const DiscPoint& zeta);

// Valuation below which the leading term of phi strictly dominates:
// val(z) < v_C implies val(phi(z)) = val(a_d) + d*val(z) < val(z).
//   v_C = min( -val(a_d)/(d-1), min_{i<d} (val(a_i) - val(a_d))/(d-i) )
Rational escape_threshold(const RationalPoly& phi, const Place& place);

// Radius floor: zeta_{a,rho} in the filled Julia set forces
// rho >= -val(a_d)/(d-1), i.e. r <= |a_d|^(-1/(d-1)).
Rational julia_radius_floor(const RationalPoly& phi, const Place& place);

struct Escaped {
  std::size_t step;
  friend bool operator==(const Escaped&, const Escaped&) = default;
};

// The orbit point at step cycle_start + cycle_length lies below (or equals)
// the one at cycle_start, so the whole orbit is confined to finitely many
// discs. cycle_length 0: the point at cycle_start lies in a disc around 0
// that phi maps into itself.
struct BoundedCertified {
  std::size_t cycle_start;
  std::size_t cycle_length;
  friend bool operator==(const BoundedCertified&, const BoundedCertified&) = default;
};

struct BoundedUpTo {
  std::size_t iterations;
  friend bool operator==(const BoundedUpTo&, const BoundedUpTo&) = default;
};

using MembershipVerdict = std::variant<Escaped, BoundedCertified, BoundedUpTo>;

inline constexpr int kDefaultMaxIter = 256;

MembershipVerdict filled_julia_membership(const RationalPoly& phi, const DiscPoint& zeta,
                                          int max_iter = kDefaultMaxIter);

struct MaxPointOptions {
  Rational tolerance = Rational(1, 1 << 20);
  int max_refinements = 96;
  int max_iter = kDefaultMaxIter;
};

struct MaxPointResult {
  Rational lower;          // some zeta_{a,lower} escapes
  Valuation upper = Valuation::infinity();  // certified bounded; infinity if none found
  std::optional<Rational> exact;
  bool converged = false;  // bracket width reached the tolerance
  int refinements = 0;
};

// Bracket for the radius exponent rho* of the maximal point m_phi(a) =
// zeta_{a, p^(-rho*)} of the filled Julia set above the Type I point a.
// Requires a certified-bounded orbit of a.
MaxPointResult max_point(const RationalPoly& phi, const Rational& a, const Place& place,
                         const MaxPointOptions& options = {});

// Good reduction of a polynomial map: after scaling all coefficients to be
// integral with one unit, the leading coefficient is a unit.
bool good_reduction(const RationalPoly& phi, const Place& place);

// Simplest (smallest denominator) rational strictly between lo and hi.
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace nadyn
