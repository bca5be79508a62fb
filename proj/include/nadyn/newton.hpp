#pragma once

#include <span>
#include <vector>

#include "nadyn/polynomial.hpp"
#include "nadyn/valuation.hpp"

namespace nadyn {

// Input point (i, v(a_i)); infinite valuations (a_i = 0) are skipped.
struct NewtonPoint {
  long index;
  Valuation value;
};

struct NewtonVertex {
  long index;
  Rational value;
  friend bool operator==(const NewtonVertex&, const NewtonVertex&) = default;
};

struct NewtonSegment {
  Rational slope;
  long length;
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of the points (i, v(a_i)) in valuation coordinates.
/// A slope sigma here corresponds to sigma * log p on the -log|a_i| scale.
/// Vertices are hull-extreme only, so collinear points never split a segment
/// and slopes are strictly increasing.
struct NewtonPolygon {
  std::vector<NewtonVertex> vertices;
  std::vector<NewtonSegment> segments;
  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;
};

struct RootValuation {
  Rational valuation;
  long multiplicity;
  friend bool operator==(const RootValuation&, const RootValuation&) = default;
};

// Throws PreconditionError for duplicate or negative indices and for fewer
// than two finite points ("degenerate polygon").
NewtonPolygon newton_polygon(std::span<const NewtonPoint> points);
NewtonPolygon newton_polygon(const RationalPoly& poly, const Integer& p);

// A segment of slope sigma and length l accounts for l roots of valuation
// -sigma. Entries follow the polygon left to right (decreasing valuation).
std::vector<RootValuation> root_valuations(const NewtonPolygon& polygon);

}  // namespace nadyn
