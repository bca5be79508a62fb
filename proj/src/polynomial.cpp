#include "nadyn/polynomial.hpp"

#include <algorithm>
#include <set>

#include "nadyn/error.hpp"

namespace nadyn {

RationalPoly::RationalPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

RationalPoly::RationalPoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { trim(); }

RationalPoly RationalPoly::identity() { return RationalPoly({Rational(0), Rational(1)}); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly(std::vector<Rational>{c}); }

RationalPoly RationalPoly::monomial(const Rational& c, std::size_t exponent) {
  std::vector<Rational> coeffs(exponent + 1);
  coeffs[exponent] = c;
  return RationalPoly(std::move(coeffs));
}

const Rational& RationalPoly::leading_coefficient() const {
  if (coeffs_.empty()) throw PreconditionError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> product(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPoly compose(const RationalPoly& outer, const RationalPoly& inner) {
  const auto coeffs = outer.coefficients();
  RationalPoly result;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    result *= inner;
    result += RationalPoly::constant(*it);
  }
  return result;
}

std::vector<Rational> taylor_coefficients(const RationalPoly& poly, const Rational& a) {
  std::vector<Rational> work(poly.coefficients().begin(), poly.coefficients().end());
  const std::size_t n = work.size();
  // After pass k, work[k] holds c_k; each pass divides the remaining quotient by (X - a).
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i > k; --i) work[i - 1] += a * work[i];
  return work;
}

RationalPoly iterate(const RationalPoly& phi, unsigned m, std::size_t degree_cap) {
  const int d = phi.degree();
  if (d >= 2) {
    std::size_t degree = 1;
    for (unsigned k = 0; k < m; ++k) {
      if (degree > degree_cap / static_cast<std::size_t>(d))
        throw ResourceError("iterate degree " + std::to_string(d) + "^" + std::to_string(m) +
                            " exceeds the degree cap " + std::to_string(degree_cap));
      degree *= static_cast<std::size_t>(d);
    }
  }
  RationalPoly result = RationalPoly::identity();
  for (unsigned k = 0; k < m; ++k) result = compose(phi, result);
  return result;
}

std::vector<Rational> rational_fixed_points(const RationalPoly& phi) {
  if (phi.degree() < 1) throw PreconditionError("fixed points need a polynomial of degree >= 1");
  const RationalPoly shifted = phi - RationalPoly::identity();
  if (shifted.is_zero()) throw PreconditionError("every point is fixed by the identity map");

  // Clear denominators to an integer polynomial with the same roots.
  Integer lcm_den = 1;
  for (const auto& c : shifted.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : shifted.coefficients()) ints.push_back(Integer(c * lcm_den));

  std::set<Rational> roots;
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.insert(Rational(0));
  if (low + 1 < ints.size()) {
    const auto numerators = divisors(ints[low]);
    const auto denominators = divisors(ints.back());
    for (const auto& q : denominators) {
      for (const auto& p : numerators) {
        for (int sign : {1, -1}) {
          Rational x{Integer(sign * p), q};
          x.canonicalize();
          if (phi(x) == x) roots.insert(x);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

std::string to_string(const RationalPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  const auto coeffs = poly.coefficients();
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (i == 0) {
      out += to_string(magnitude);
      continue;
    }
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += "X";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace nadyn
