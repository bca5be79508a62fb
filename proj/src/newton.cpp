#include "nadyn/newton.hpp"

#include <algorithm>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

// Sign of the turn o -> a -> b; positive for a strict left (counter-clockwise) turn.
int turn(const NewtonVertex& o, const NewtonVertex& a, const NewtonVertex& b) {
  const Rational cross = Rational(a.index - o.index) * (b.value - o.value) - (a.value - o.value) * Rational(b.index - o.index);
  return sgn(cross);
}

}  // namespace

NewtonPolygon newton_polygon(std::span<const NewtonPoint> points) {
  std::vector<NewtonVertex> finite;
  for (const auto& pt : points) {
    if (pt.index < 0) throw PreconditionError("Newton polygon indices must be nonnegative");
    if (pt.value.is_finite()) finite.push_back({pt.index, pt.value.value()});
  }
  std::vector<long> all_indices;
  for (const auto& pt : points) all_indices.push_back(pt.index);
  std::sort(all_indices.begin(), all_indices.end());
  if (std::adjacent_find(all_indices.begin(), all_indices.end()) != all_indices.end())
    throw PreconditionError("Newton polygon indices must be distinct");
  if (finite.size() < 2) throw PreconditionError("degenerate polygon");

  std::sort(finite.begin(), finite.end(), [](const auto& a, const auto& b) { return a.index < b.index; });

  NewtonPolygon polygon;
  auto& hull = polygon.vertices;
  for (const auto& pt : finite) {
    while (hull.size() >= 2 && turn(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    const long length = hull[k + 1].index - hull[k].index;
    polygon.segments.push_back({Rational((hull[k + 1].value - hull[k].value) / length), length});
  }
  return polygon;
}

NewtonPolygon newton_polygon(const RationalPoly& poly, const Integer& p) {
  std::vector<NewtonPoint> points;
  const auto coeffs = poly.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) points.push_back({static_cast<long>(i), val(coeffs[i], p)});
  return newton_polygon(points);
}

std::vector<RootValuation> root_valuations(const NewtonPolygon& polygon) {
  std::vector<RootValuation> roots;
  for (const auto& seg : polygon.segments) roots.push_back({Rational(-seg.slope), seg.length});
  return roots;
}

}  // namespace nadyn
