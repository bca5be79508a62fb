#include "nadyn/bogomolov.hpp"

#include <algorithm>

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

BogomolovCertificate scan(NewtonPolygon polygon, const Rational& lead_valuation, long degree, const Place& place) {
  BogomolovCertificate cert;
  cert.place = place;
  cert.slope_floor = lead_valuation / (degree - 1);
  for (std::size_t k = 0; k < polygon.segments.size(); ++k) {
    const Rational& slope = polygon.segments[k].slope;
    if (in_value_group(slope, place.ramification()) || slope < cert.slope_floor) continue;
    cert.verdict = Verdict::StrongBogomolov;
    cert.witness = BogomolovWitness{slope, polygon.vertices[k], polygon.vertices[k + 1], Rational(-slope)};
    break;
  }
  cert.polygon = std::move(polygon);
  return cert;
}

}  // namespace

BogomolovCertificate check_criterion(const RationalPoly& phi, const Place& place) {
  if (phi.degree() < 2) throw PreconditionError("criterion requires a polynomial of degree >= 2");
  if (phi.coefficient(0) == 0) throw PreconditionError("constant term vanishes; Newton polygon hypothesis violated");
  // The linear coefficient of phi(X) - X is a_1 - 1.
  const RationalPoly shifted = phi - RationalPoly::identity();
  return scan(newton_polygon(shifted, place.prime()), val(phi.leading_coefficient(), place).value(), phi.degree(),
              place);
}

BogomolovCertificate check_criterion_abstract(std::span<const NewtonPoint> valuations, long degree,
                                              const Place& place) {
  if (degree < 2) throw PreconditionError("criterion requires degree >= 2");
  auto find = [&](long index) -> const NewtonPoint* {
    auto it = std::find_if(valuations.begin(), valuations.end(), [&](const auto& pt) { return pt.index == index; });
    return it == valuations.end() || it->value.is_infinite() ? nullptr : &*it;
  };
  if (find(0) == nullptr) throw PreconditionError("missing finite valuation at index 0");
  const NewtonPoint* lead = find(degree);
  if (lead == nullptr) throw PreconditionError("missing finite valuation at index d = " + std::to_string(degree));
  for (const auto& pt : valuations)
    if (pt.index > degree) throw PreconditionError("index " + std::to_string(pt.index) + " exceeds the degree");
  auto cert = scan(newton_polygon(valuations), lead->value.value(), degree, place);
  cert.abstract_coefficients = true;
  return cert;
}

const char* to_string(Verdict verdict) {
  return verdict == Verdict::StrongBogomolov ? "strong_bogomolov" : "inconclusive";
}

}  // namespace nadyn
