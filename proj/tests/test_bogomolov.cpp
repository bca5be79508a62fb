#include "doctest.h"
#include "nadyn/bogomolov.hpp"
#include "nadyn/error.hpp"
#include "nadyn/serialize.hpp"
#include "test_support.hpp"

using namespace nadyn;

namespace {

const RationalPoly kWorked{Rational(1, 2), 1, 1, 0, 0, 1};  // X^5 + X^2 + X + 1/2

std::vector<NewtonPoint> pts(std::initializer_list<std::pair<long, const char*>> xs) {
  std::vector<NewtonPoint> out;
  for (auto [i, v] : xs) out.push_back({i, parse_valuation(v)});
  return out;
}

// Slopes of the lower hull from scratch: walk from each vertex to the farthest
// point of least slope.
std::vector<std::pair<Rational, std::pair<long, long>>> oracle_slopes(const RationalPoly& poly, const Integer& p) {
  std::vector<std::pair<long, Rational>> finite;
  const auto c = poly.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) finite.emplace_back(static_cast<long>(i), val(c[i], p).value());
  std::vector<std::pair<Rational, std::pair<long, long>>> out;
  std::size_t at = 0;
  while (at + 1 < finite.size()) {
    std::size_t best = at + 1;
    Rational best_slope = (finite[best].second - finite[at].second) / (finite[best].first - finite[at].first);
    for (std::size_t k = at + 2; k < finite.size(); ++k) {
      const Rational s = (finite[k].second - finite[at].second) / (finite[k].first - finite[at].first);
      if (s <= best_slope) {
        best = k;
        best_slope = s;
      }
    }
    out.push_back({best_slope, {finite[at].first, finite[best].first}});
    at = best;
  }
  return out;
}

RationalPoly random_map(testing::Gen& gen, long p) {
  std::vector<Rational> c(gen.integer(3, 7));
  for (auto& a : c) a = gen.coin() ? gen.padic_rational(p, -4, 4) : Rational(0);
  c.front() = gen.padic_rational(p, -4, 4);
  c.back() = gen.padic_rational(p, -4, 4);
  return RationalPoly(c);
}

}  // namespace

TEST_CASE("worked example") {
  const auto cert = check_criterion(kWorked, Place(Integer(2)));
  CHECK(cert.verdict == Verdict::StrongBogomolov);
  REQUIRE(cert.witness);
  // NP(X^5 + X^2 + 1/2) at 2 is the single segment from (0, -1) to (5, 0).
  CHECK(cert.witness->slope == Rational(1, 5));
  CHECK(cert.witness->zeta_of_x_valuation == Rational(-1, 5));
  CHECK(cert.witness->left == NewtonVertex{0, -1});
  CHECK(cert.witness->right == NewtonVertex{5, 0});
  CHECK(cert.slope_floor == 0);
  CHECK_FALSE(cert.abstract_coefficients);

  // Degree 2 member of the same family: the segment (0, -1)-(2, 0) of slope 1/2.
  const auto quadratic = check_criterion(RationalPoly{Rational(1, 2), 1, 1}, Place(Integer(2)));
  REQUIRE(quadratic.witness);
  CHECK(quadratic.witness->slope == Rational(1, 2));
  CHECK(check_criterion(RationalPoly{Rational(1, 2), 1, 1}, Place(Integer(2), 2)).verdict == Verdict::Inconclusive);

  // 1/5 is outside (1/2)Z, so ramification 2 keeps the verdict; ramification 5 kills it.
  CHECK(check_criterion(kWorked, Place(Integer(2), 2)).verdict == Verdict::StrongBogomolov);
  CHECK(check_criterion(kWorked, Place(Integer(2), 5)).verdict == Verdict::Inconclusive);
}

TEST_CASE("criterion, documented examples") {
  CHECK(check_criterion(RationalPoly{3, 0, 1}, Place(Integer(5))).verdict == Verdict::Inconclusive);
  const auto flat = check_criterion(RationalPoly{3, 0, 1}, Place(Integer(5)));
  CHECK_FALSE(flat.witness);
  CHECK(flat.polygon.segments == std::vector<NewtonSegment>{{Rational(0), 2}});
  // X + c: the linear term of phi(X) - X cancels.
  const auto cancel = check_criterion(RationalPoly{Rational(1, 8), 1, 0, 1}, Place(Integer(2)));
  CHECK(cancel.polygon.segments == std::vector<NewtonSegment>{{Rational(1), 3}});
  CHECK(cancel.verdict == Verdict::Inconclusive);
}

TEST_CASE("slope floor excludes shallow slopes") {
  // phi = X^3/8 + 1/2 at 2: NP(phi - X) has points (0,-1), (1,0), (3,-3).
  const auto cert = check_criterion(RationalPoly{Rational(1, 2), 0, 0, Rational(1, 8)}, Place(Integer(2)));
  CHECK(cert.slope_floor == Rational(-3, 2));
  CHECK(cert.polygon.segments == std::vector<NewtonSegment>{{Rational(-2, 3), 3}});
  CHECK(cert.verdict == Verdict::StrongBogomolov);
  // phi = 2^6 X^3 + 1 at 2: floor 3 lies above every slope.
  const auto steep = check_criterion(RationalPoly{1, 0, 0, 64}, Place(Integer(2)));
  CHECK(steep.slope_floor == 3);
  CHECK(steep.verdict == Verdict::Inconclusive);
}

TEST_CASE("abstract criterion, documented examples") {
  const Place two{Integer(2)};
  const auto worked = check_criterion_abstract(pts({{0, "-1"}, {2, "0"}, {5, "0"}}), 5, two);
  CHECK(worked.verdict == Verdict::StrongBogomolov);
  REQUIRE(worked.witness);
  CHECK(worked.witness->slope == Rational(1, 5));
  CHECK(worked.abstract_coefficients);
  CHECK(check_criterion_abstract(pts({{0, "0"}, {1, "0"}, {3, "0"}}), 3, two).verdict == Verdict::Inconclusive);
  const auto ramified = check_criterion_abstract(pts({{0, "-2"}, {3, "0"}}), 3, Place(Integer(2), 3));
  CHECK(ramified.polygon.segments == std::vector<NewtonSegment>{{Rational(2, 3), 3}});
  CHECK(ramified.verdict == Verdict::Inconclusive);
  CHECK(check_criterion_abstract(pts({{0, "-2"}, {3, "0"}}), 3, two).verdict == Verdict::StrongBogomolov);
  // Valuations in (1/e)Q.
  const auto fractional = check_criterion_abstract(pts({{0, "-1/2"}, {2, "1/2"}}), 2, Place(Integer(3), 2));
  CHECK(fractional.polygon.segments == std::vector<NewtonSegment>{{Rational(1, 2), 2}});
  CHECK(fractional.verdict == Verdict::Inconclusive);
}

TEST_CASE("criterion preconditions") {
  const Place two{Integer(2)};
  CHECK_THROWS_WITH_AS(check_criterion(RationalPoly{0, 1, 1}, two),
                       "constant term vanishes; Newton polygon hypothesis violated", PreconditionError);
  CHECK_THROWS_AS(check_criterion(RationalPoly{1, 3}, two), PreconditionError);
  CHECK_THROWS_AS(check_criterion_abstract(pts({{2, "0"}, {3, "0"}}), 3, two), PreconditionError);
  CHECK_THROWS_AS(check_criterion_abstract(pts({{0, "0"}, {2, "0"}}), 3, two), PreconditionError);
  CHECK_THROWS_AS(check_criterion_abstract(pts({{0, "0"}, {3, "inf"}}), 3, two), PreconditionError);
  CHECK_THROWS_AS(check_criterion_abstract(pts({{0, "0"}, {3, "0"}, {4, "1"}}), 3, two), PreconditionError);
}

TEST_CASE("certificates are sound against an independent hull") {
  testing::Gen gen(0xb09);
  int strong = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const long p = gen.prime();
    const Place place{Integer(p), gen.integer(1, 3)};
    const auto phi = random_map(gen, p);
    const auto cert = check_criterion(phi, place);
    const auto slopes = oracle_slopes(phi - RationalPoly::identity(), place.prime());
    const long d = phi.degree();
    const Rational floor_slope = val(phi.leading_coefficient(), place).value() / (d - 1);
    REQUIRE(cert.polygon.segments.size() == slopes.size());
    std::optional<std::size_t> first;
    for (std::size_t k = 0; k < slopes.size(); ++k) {
      const Rational scaled = slopes[k].first * place.ramification();
      if (scaled.get_den() != 1 && slopes[k].first >= floor_slope) {
        first = k;
        break;
      }
    }
    REQUIRE((cert.verdict == Verdict::StrongBogomolov) == first.has_value());
    if (!first) continue;
    ++strong;
    const auto& w = *cert.witness;
    REQUIRE(w.slope == slopes[*first].first);
    REQUIRE(w.left.index == slopes[*first].second.first);
    REQUIRE(w.right.index == slopes[*first].second.second);
    REQUIRE((w.right.value - w.left.value) / (w.right.index - w.left.index) == w.slope);
    REQUIRE(w.zeta_of_x_valuation == -w.slope);

    const auto back = certificate_from_json(certificate_to_json(cert));
    REQUIRE(back == cert);
  }
  CHECK(strong > 50);
}

TEST_CASE("good reduction maps never certify") {
  testing::Gen gen(0x31);
  for (int trial = 0; trial < 200; ++trial) {
    const long p = gen.prime();
    std::vector<Rational> c(gen.integer(3, 8));
    for (auto& a : c) {
      // Units: integers prime to p.
      long u = gen.integer(1, 200);
      while (u % p == 0) ++u;
      a = gen.coin() ? u : -u;
    }
    c.back() = 1;
    const auto cert = check_criterion(RationalPoly(c), Place(Integer(p)));
    REQUIRE(cert.verdict == Verdict::Inconclusive);
  }
}

TEST_CASE("a larger value group never creates a certificate") {
  testing::Gen gen(0x5ca1e);
  for (int trial = 0; trial < 300; ++trial) {
    const long p = gen.prime();
    const auto phi = random_map(gen, p);
    const long e = gen.integer(1, 3);
    const long k = gen.integer(2, 4);
    const auto coarse = check_criterion(phi, Place(Integer(p), e));
    const auto fine = check_criterion(phi, Place(Integer(p), k * e));
    if (fine.verdict == Verdict::StrongBogomolov) REQUIRE(coarse.verdict == Verdict::StrongBogomolov);
  }
}

TEST_CASE("certificate JSON layout") {
  const auto j = certificate_to_json(check_criterion(kWorked, Place(Integer(2))));
  CHECK(j.at("verdict") == "strong_bogomolov");
  CHECK(j.at("p") == 2);
  CHECK(j.at("e") == 1);
  CHECK(j.at("witness").at("slope") == "1/5");
  CHECK(j.at("witness").at("zeta_of_X_valuation") == "-1/5");
  CHECK(j.at("witness").at("segment") == Json::parse(R"([[0,"-1"],[5,"0"]])"));
  CHECK(certificate_to_json(check_criterion(RationalPoly{3, 0, 1}, Place(Integer(5)))).at("witness").is_null());
}
