#include "nadyn/berkovich.hpp"

#include <algorithm>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

// Largest number of p-adic digits kept when shortening a center.
constexpr long kMaxCanonicalDigits = 1L << 16;
// Exact orbits stop being followed beyond this size.
constexpr std::size_t kMaxOrbitBits = 1U << 18;
constexpr std::size_t kTrapAfterSteps = 16;
constexpr std::size_t kTrapAfterBits = 4096;

Rational canonical_center(const Rational& a, const Rational& rho, const Integer& p) {
  if (a == 0) return a;
  const Valuation va = val(a, p);
  const long k = va.value().get_num().get_si();
  const Integer precision_end = ceil(rho);
  if (precision_end <= k) return Rational(0);
  const Integer digits = precision_end - k;
  if (digits > kMaxCanonicalDigits) return a;

  Integer modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), digits.get_ui());
  Rational unit = a;
  Integer pk;
  mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k >= 0 ? k : -k));
  if (k >= 0)
    unit /= pk;
  else
    unit *= pk;
  Integer inverse;
  mpz_invert(inverse.get_mpz_t(), unit.get_den_mpz_t(), modulus.get_mpz_t());
  Integer digits_value = unit.get_num() * inverse;
  mpz_mod(digits_value.get_mpz_t(), digits_value.get_mpz_t(), modulus.get_mpz_t());
  Rational result(digits_value);
  if (k >= 0)
    result *= pk;
  else
    result /= pk;
  return result;
}

void require_degree(const RationalPoly& phi, int minimum, const char* what) {
  if (phi.degree() < minimum)
    throw PreconditionError(std::string(what) + " requires a polynomial of degree >= " + std::to_string(minimum));
}

bool is_escaped(const MembershipVerdict& v) { return std::holds_alternative<Escaped>(v); }
bool is_certified(const MembershipVerdict& v) { return std::holds_alternative<BoundedCertified>(v); }

}  // namespace

DiscPoint::DiscPoint(Rational center, Valuation radius_exponent, Place place)
    : center_(std::move(center)), rho_(std::move(radius_exponent)), place_(std::move(place)) {
  center_.canonicalize();
}

DiscPoint DiscPoint::type_one(Rational center, Place place) {
  return DiscPoint(std::move(center), Valuation::infinity(), std::move(place));
}

DiscPoint DiscPoint::canonical() const {
  if (is_type_one()) return *this;
  return DiscPoint(canonical_center(center_, rho_.value(), place_.prime()), rho_, place_);
}

bool operator==(const DiscPoint& a, const DiscPoint& b) {
  return a.place_ == b.place_ && a.rho_ == b.rho_ && val(a.center_ - b.center_, a.place_) >= a.rho_;
}

Valuation seminorm(const DiscPoint& zeta, const RationalPoly& poly) {
  if (poly.is_zero()) return Valuation::infinity();
  if (zeta.is_type_one()) return val(poly(zeta.center()), zeta.place());
  const auto c = taylor_coefficients(poly, zeta.center());
  Valuation best = Valuation::infinity();
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    best = min(best, scale(static_cast<long>(n), zeta.radius_exponent()) + val(c[n], zeta.place()));
  }
  return best;
}

bool leq(const DiscPoint& zeta, const DiscPoint& other) {
  if (!(zeta.place() == other.place())) throw PreconditionError("disc points live over different places");
  return zeta.radius_exponent() >= other.radius_exponent() &&
         val(zeta.center() - other.center(), zeta.place()) >= other.radius_exponent();
}

DiscPoint pushforward(const RationalPoly& phi, const DiscPoint& zeta) {
  require_degree(phi, 1, "pushforward");
  if (zeta.is_type_one()) return DiscPoint::type_one(phi(zeta.center()), zeta.place());
  const auto c = taylor_coefficients(phi, zeta.center());
  Valuation rho = Valuation::infinity();
  for (std::size_t n = 1; n < c.size(); ++n) {
    if (c[n] == 0) continue;
    rho = min(rho, scale(static_cast<long>(n), zeta.radius_exponent()) + val(c[n], zeta.place()));
  }
  return DiscPoint(c[0], rho, zeta.place()).canonical();
}

Rational julia_radius_floor(const RationalPoly& phi, const Place& place) {
  require_degree(phi, 2, "the radius floor");
  const long d = phi.degree();
  return Rational(-val(phi.leading_coefficient(), place).value() / (d - 1));
}

Rational escape_threshold(const RationalPoly& phi, const Place& place) {
  require_degree(phi, 2, "escape threshold");
  const long d = phi.degree();
  const Rational lead = val(phi.leading_coefficient(), place).value();
  Rational threshold = -lead / (d - 1);
  const auto coeffs = phi.coefficients();
  for (long i = 0; i < d; ++i) {
    if (coeffs[i] == 0) continue;
    const Rational bound = (val(coeffs[i], place).value() - lead) / (d - i);
    threshold = std::min(threshold, bound);
  }
  return threshold;
}

// Largest disc D(0, p^-tau) with tau a few steps above the escape threshold
// that phi maps into itself. Everything inside it has a bounded orbit.
static std::optional<DiscPoint> invariant_trap(const RationalPoly& phi, const Rational& threshold, const Place& place) {
  for (const Rational& start : {threshold, Rational(ceil(threshold))}) {
    for (long k = 0; k <= 4; ++k) {
      const DiscPoint trap(0, Rational(start + k), place);
      if (leq(pushforward(phi, trap), trap)) return trap;
    }
  }
  return std::nullopt;
}

MembershipVerdict filled_julia_membership(const RationalPoly& phi, const DiscPoint& zeta, int max_iter) {
  if (max_iter <= 0) throw PreconditionError("max_iter must be positive");
  const Rational threshold = escape_threshold(phi, zeta.place());
  const auto trap = invariant_trap(phi, threshold, zeta.place());
  std::vector<DiscPoint> orbit;
  DiscPoint current = zeta.canonical();
  for (std::size_t m = 0;; ++m) {
    const Valuation size = min(val(current.center(), current.place()), current.radius_exponent());
    if (size < Valuation(threshold)) return Escaped{m};
    for (std::size_t j = 0; j < orbit.size(); ++j)
      if (leq(current, orbit[j])) return BoundedCertified{j, m - j};
    std::size_t bits = bit_size(current.center());
    if (!current.is_type_one()) bits += bit_size(current.radius_exponent().value());
    // Exact cycles are preferred while the orbit is short and small.
    if (trap && (m >= kTrapAfterSteps || bits > kTrapAfterBits) && leq(current, *trap)) return BoundedCertified{m, 0};
    if (m == static_cast<std::size_t>(max_iter)) return BoundedUpTo{m};
    if (bits > kMaxOrbitBits) return BoundedUpTo{m};
    orbit.push_back(current);
    current = pushforward(phi, current);
  }
}

MaxPointResult max_point(const RationalPoly& phi, const Rational& a, const Place& place,
                         const MaxPointOptions& options) {
  require_degree(phi, 2, "max_point");
  const auto base = filled_julia_membership(phi, DiscPoint::type_one(a, place), options.max_iter);
  if (is_escaped(base)) throw PreconditionError("unbounded base orbit: " + to_string(a) + " escapes");
  if (!is_certified(base))
    throw PreconditionError("base orbit of " + to_string(a) + " is not certified bounded");

  auto verdict = [&](const Rational& rho) {
    return filled_julia_membership(phi, DiscPoint(a, rho, place), options.max_iter);
  };

  MaxPointResult result;
  const Rational floor_rho = julia_radius_floor(phi, place);

  // Escaping lower end: below the radius floor every disc escapes.
  Rational lo = floor_rho - 1;
  Rational step = 1;
  while (!is_escaped(verdict(lo))) {
    if (++result.refinements > options.max_refinements)
      throw ResourceError("no escaping radius found below the radius floor");
    step *= 2;
    lo = floor_rho - step;
  }

  // Bounded upper end: climb from the floor until a disc is certified bounded.
  std::optional<Rational> hi;
  Rational probe = floor_rho;
  step = 1;
  while (result.refinements < options.max_refinements) {
    ++result.refinements;
    const auto v = verdict(probe);
    if (is_certified(v)) {
      hi = probe;
      break;
    }
    if (is_escaped(v)) lo = std::max(lo, probe);
    probe = floor_rho + step;
    step *= 2;
  }
  result.lower = lo;
  if (!hi) {
    result.upper = Valuation::infinity();
    return result;
  }

  bool undecided = false;
  while (*hi - lo > options.tolerance && result.refinements < options.max_refinements) {
    ++result.refinements;
    const Rational mid = (lo + *hi) / 2;
    const auto v = verdict(mid);
    if (is_escaped(v)) {
      lo = mid;
    } else if (is_certified(v)) {
      hi = mid;
    } else {
      undecided = true;
      break;
    }
  }
  result.lower = lo;
  result.upper = Valuation(*hi);
  result.converged = !undecided && *hi - lo <= options.tolerance;
  if (!result.converged) return result;

  // Snap to the lowest-denominator candidate in (lo, hi] and check both sides.
  Rational candidate = simplest_between(lo, *hi);
  if (hi->get_den() <= candidate.get_den()) candidate = *hi;
  const Rational delta = std::min(options.tolerance, Rational((candidate - lo) / 2));
  if (is_certified(verdict(candidate)) && is_escaped(verdict(candidate - delta))) result.exact = candidate;
  return result;
}

bool good_reduction(const RationalPoly& phi, const Place& place) {
  require_degree(phi, 2, "good reduction");
  Valuation lowest = Valuation::infinity();
  for (const auto& c : phi.coefficients()) lowest = min(lowest, val(c, place));
  return val(phi.leading_coefficient(), place) == lowest;
}

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw PreconditionError("simplest_between needs lo < hi");
  const Integer fl = floor(lo);
  const Integer next = fl + 1;
  if (Rational(next) < hi) {
    if (lo < 0 && hi > 0) return Rational(0);
    if (hi <= 0) return Rational(Integer(ceil(hi) - 1));
    return Rational(next);
  }
  const Rational frac_lo = lo - fl;
  const Rational frac_hi = hi - fl;
  Rational y;
  if (frac_lo == 0)
    y = Rational(Integer(floor(Rational(1 / frac_hi)) + 1));
  else
    y = simplest_between(Rational(1 / frac_hi), Rational(1 / frac_lo));
  return Rational(fl + 1 / y);
}

}  // namespace nadyn
