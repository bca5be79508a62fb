#pragma once

#include <optional>
#include <span>

#include "nadyn/newton.hpp"
#include "nadyn/polynomial.hpp"
#include "nadyn/valuation.hpp"

namespace nadyn {

// There is no "fails" verdict: the criterion is sufficient, not necessary.
enum class Verdict { StrongBogomolov, Inconclusive };

/// Qualifying segment of the Newton polygon of phi(X) - X. Its slope sigma
/// yields a fixed point a with val(a) = -sigma; the Julia point above a then
/// has zeta(X) = |a| = p^sigma outside p^(Z/e).
struct BogomolovWitness {
  Rational slope;
  NewtonVertex left;
  NewtonVertex right;
  Rational zeta_of_x_valuation;
  friend bool operator==(const BogomolovWitness&, const BogomolovWitness&) = default;
};

struct BogomolovCertificate {
  Verdict verdict = Verdict::Inconclusive;
  Place place{Integer(2)};
  std::optional<BogomolovWitness> witness;
  NewtonPolygon polygon;
  // val(a_d)/(d-1): a witness slope must be at least this.
  Rational slope_floor;
  bool abstract_coefficients = false;
  friend bool operator==(const BogomolovCertificate&, const BogomolovCertificate&) = default;
};

// Scans the slopes of NP(phi(X) - X) left to right and returns the first one
// outside (1/e)Z and at least val(a_d)/(d-1).
BogomolovCertificate check_criterion(const RationalPoly& phi, const Place& place);

// Same scan on supplied valuations of the coefficients of phi(X) - X, for base
// fields where only valuations (in (1/e)Q) are known.
BogomolovCertificate check_criterion_abstract(std::span<const NewtonPoint> valuations, long degree,
                                              const Place& place);

const char* to_string(Verdict verdict);

}  // namespace nadyn
