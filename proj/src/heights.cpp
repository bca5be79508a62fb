#include "nadyn/heights.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "nadyn/berkovich.hpp"
#include "nadyn/error.hpp"

namespace nadyn {

namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon() / 2;
constexpr std::size_t kMaxExactBits = 1U << 12;
constexpr std::size_t kArchimedeanExactBits = 4096;
constexpr int kArchimedeanMaxSteps = 4000;
constexpr int kContainerLadder = 8;
constexpr int kContainerMaxIter = 64;
constexpr long kTruncatedDigits = 512;
constexpr int kTruncatedMaxSteps = 4096;
constexpr double kNegligible = 1e-20;

void require_dynamical(const RationalPoly& phi) {
  if (phi.degree() < 2) throw PreconditionError("canonical heights require a polynomial of degree >= 2");
}

double log_plus(double t) { return t > 1.0 ? std::log(t) : 0.0; }

LocalHeight exact_local(const Rational& coefficient, const Integer& p, std::optional<std::size_t> step) {
  LocalHeight h;
  h.log_p_coefficient = coefficient;
  h.value = coefficient.get_d() * std::log(p.get_d());
  h.escape_step = step;
  return h;
}

// Some disc around z lies in the filled Julia set, so z has a bounded orbit.
bool bounded_by_container(const RationalPoly& phi, const Rational& z, const Place& place, const Rational& threshold) {
  const Integer start = ceil(threshold);
  for (int j = 0; j < kContainerLadder; ++j) {
    const DiscPoint disc(z, Valuation(Rational(start + j)), place);
    if (std::holds_alternative<BoundedCertified>(filled_julia_membership(phi, disc, kContainerMaxIter))) return true;
  }
  return false;
}

// kappa_p / log p: a bound for g on the disc |z| <= p^(-v_C), built from the
// image bound of that disc and the leading-coefficient shift.
double kappa_coefficient(const RationalPoly& phi, const Place& place, const Rational& threshold, const Rational& lead) {
  const long d = phi.degree();
  Rational image_bound = Rational(0);
  bool any = false;
  const auto coeffs = phi.coefficients();
  for (long i = 0; i <= d; ++i) {
    if (coeffs[i] == 0) continue;
    const Rational term = -val(coeffs[i], place).value() - threshold * i;
    if (!any || term > image_bound) image_bound = term;
    any = true;
  }
  return std::max(0.0, image_bound.get_d()) + std::fabs(lead.get_d()) / (d - 1);
}

}  // namespace

double weil_height(const Rational& x) {
  if (x == 0) return 0.0;
  return std::max(log_abs(x.get_num()), log_abs(x.get_den()));
}

LocalHeight local_escape_rate(const RationalPoly& phi, const Rational& x, const Integer& p, int max_iter) {
  require_dynamical(phi);
  if (max_iter <= 0) throw PreconditionError("max_iter must be positive");
  const Place place(p);
  const long d = phi.degree();
  const Rational threshold = escape_threshold(phi, place);
  const Rational lead = val(phi.leading_coefficient(), place).value();

  auto escaped_at = [&](const Rational& valuation, int step) {
    // In the dominance regime log|phi(z)| = d log|z| + log|a_d| exactly, so
    // g(z) = log|z| + log|a_d|/(d-1) and g(x) = d^(-m) g(z).
    Rational coefficient = -valuation - lead / (d - 1);
    coefficient /= Rational(power(Rational(d), static_cast<unsigned long>(step)));
    return exact_local(coefficient, p, static_cast<std::size_t>(step));
  };

  // Largest step whose iterate is known to satisfy val >= v_C.
  int certified = -1;
  std::set<Rational> seen;
  Rational z = x;
  int steps = 0;
  for (; steps < max_iter; ++steps) {
    const Valuation vz = val(z, place);
    if (vz < Valuation(threshold)) return escaped_at(vz.value(), steps);
    certified = steps;
    if (!seen.insert(z).second) return exact_local(Rational(0), p, std::nullopt);
    if (bit_size(z) > kMaxExactBits) break;
    z = phi(z);
  }
  if (bounded_by_container(phi, z, place, threshold)) return exact_local(Rational(0), p, std::nullopt);

  // Truncated phase: follow the disc D(z_m, p^-rho) around a short p-adic
  // center. While val(center) < rho the true iterate has that valuation, so an
  // escape seen here is still exact; rho only shrinks by the precision lost
  // per step.
  const double kappa = std::log(p.get_d()) * kappa_coefficient(phi, place, threshold, lead);
  const Rational start = z == 0 ? threshold : std::max(threshold, val(z, place).value());
  DiscPoint disc = DiscPoint(z, Valuation(Rational(start + kTruncatedDigits)), place).canonical();
  for (; steps < kTruncatedMaxSteps; ++steps) {
    if (std::pow(static_cast<double>(d), -certified) * kappa < kNegligible) break;
    const Rational rho = disc.radius_exponent().value();
    const Valuation vc = val(disc.center(), place);
    if (vc < Valuation(rho)) {
      if (vc < Valuation(threshold)) return escaped_at(vc.value(), steps);
    } else if (rho < threshold) {
      break;
    }
    certified = steps;
    disc = pushforward(phi, disc);
  }

  // Unresolved: 0 <= g(x) = d^(-m) g(z_m) <= d^(-m) kappa_p, where z_m is the
  // last iterate known to lie in |z| <= p^(-v_C).
  LocalHeight h;
  h.value = 0.0;
  h.error_bound = std::pow(static_cast<double>(d), -std::max(certified, 0)) * kappa;
  return h;
}

LocalHeight archimedean_escape_rate(const RationalPoly& phi, const Rational& x, double epsilon) {
  require_dynamical(phi);
  if (!(epsilon > 0)) throw PreconditionError("epsilon must be positive");
  const int d = phi.degree();
  std::vector<double> a;
  for (const auto& c : phi.coefficients()) a.push_back(c.get_d());
  for (double c : a)
    if (!std::isfinite(c)) throw ResourceError("coefficient outside double range at the archimedean place");
  const double lead_abs = std::fabs(a[d]);
  const double log_lead = std::log(lead_abs);
  double tail_sum = 0.0;
  for (int i = 0; i < d; ++i) tail_sum += std::fabs(a[i]) / lead_abs;
  tail_sum *= 1 + 4 * d * kUnitRoundoff;

  // |z| >= radius: |phi(z)/(a_d z^d) - 1| <= tail_sum/|z| <= 1/2 and |phi(z)| >= |z|.
  const double radius = std::max({1.0, 2 * tail_sum, std::pow(2.0 / lead_abs, 1.0 / (d - 1))}) * (1 + 1e-12);
  const double log_radius = std::log(radius);
  double image_of_disc = 0.0;
  for (int i = 0; i <= d; ++i) image_of_disc += std::fabs(a[i]) * std::pow(radius, i);
  const double shift = (std::fabs(log_lead) + 1.0) / (d - 1);
  // sup of g over |z| <= radius.
  const double kappa = log_plus(image_of_disc) + shift;

  auto regime = [&](double log_mag, double mag_low, double log_err, double weight) -> std::optional<LocalHeight> {
    if (log_mag < log_radius || !(mag_low >= radius)) return std::nullopt;
    const double tail = 2 * tail_sum / ((d - 1) * mag_low);
    const double err = weight * (tail + log_err) * (1 + 1e-12);
    if (err > epsilon) return std::nullopt;
    LocalHeight h;
    h.value = weight * (log_mag + log_lead / (d - 1));
    h.error_bound = err;
    return h;
  };
  auto bounded = [&](double log_mag_plus, double weight) -> std::optional<LocalHeight> {
    const double ub = weight * std::max(kappa, log_mag_plus + shift) * (1 + 1e-12);
    if (ub > epsilon) return std::nullopt;
    LocalHeight h;
    h.value = 0.0;
    h.error_bound = ub;
    return h;
  };

  Rational z = x;
  int m = 0;
  double weight = 1.0;
  std::optional<std::size_t> first_escape;
  for (; m < kArchimedeanMaxSteps && bit_size(z) <= kArchimedeanExactBits; ++m, weight /= d) {
    if (z != 0) {
      const double lz = log_abs(z);
      const double mag = lz > 700 ? std::numeric_limits<double>::infinity() : std::exp(lz);
      if (auto h = regime(lz, mag, 1e-15 * (std::fabs(lz) + 1), weight)) {
        h->escape_step = m;
        return *h;
      }
      if (auto h = bounded(std::max(0.0, lz), weight)) return *h;
    } else if (auto h = bounded(0.0, weight)) {
      return *h;
    }
    z = phi(z);
  }

  double zd = z.get_d();
  double err = std::fabs(zd) * 2 * kUnitRoundoff + std::numeric_limits<double>::denorm_min();
  const double gamma = (4 * d + 4) * kUnitRoundoff;
  std::vector<double> c(d + 1), t(d + 1);
  for (; m < kArchimedeanMaxSteps; ++m, weight /= d) {
    if (!std::isfinite(zd) || !std::isfinite(err))
      throw ResourceError("epsilon too small for double precision at the archimedean place; use interval arithmetic");
    const double mag = std::fabs(zd);
    if (err <= mag / 2) {
      const double low = mag - err;
      if (auto h = regime(std::log(mag), low, err / low + 2 * kUnitRoundoff * std::fabs(std::log(mag)), weight))
        return *h;
    }
    if (auto h = bounded(log_plus(mag + err), weight)) return *h;

    // Taylor coefficients at zd (c) and of the absolute-value polynomial at |zd| (t).
    std::copy(a.begin(), a.end(), c.begin());
    for (int i = 0; i <= d; ++i) t[i] = std::fabs(a[i]);
    for (int k = 0; k < d; ++k)
      for (int i = d; i > k; --i) {
        c[i - 1] += zd * c[i];
        t[i - 1] += mag * t[i];
      }
    double propagated = 0.0;
    double power = 1.0;
    for (int n = 1; n <= d; ++n) {
      power *= err;
      propagated += (std::fabs(c[n]) + gamma * t[n]) * power;
    }
    err = propagated + gamma * t[0];
    zd = c[0];
  }
  throw ResourceError("epsilon too small for double precision at the archimedean place; use interval arithmetic");
}

std::vector<Integer> relevant_primes(const RationalPoly& phi, const Rational& x) {
  std::set<Integer> primes;
  auto add = [&](const Integer& den) {
    for (const auto& q : prime_factors(den)) primes.insert(q);
  };
  for (const auto& c : phi.coefficients()) add(c.get_den());
  add(x.get_den());
  return {primes.begin(), primes.end()};
}

HeightResult canonical_height(const RationalPoly& phi, const Rational& x, double epsilon) {
  require_dynamical(phi);
  if (!(epsilon > 0)) throw PreconditionError("epsilon must be positive");
  HeightResult result;
  const auto primes = relevant_primes(phi, x);

  if (is_preperiodic(phi, x).preperiodic) {
    result.preperiodic = true;
    for (const auto& q : primes) result.local_parts[q.get_str()] = exact_local(Rational(0), q, std::nullopt);
    result.local_parts["inf"] = LocalHeight{};
    return result;
  }

  double finite_error = 0.0;
  for (const auto& q : primes) {
    auto part = local_escape_rate(phi, x, q);
    result.value += part.value;
    finite_error += part.error_bound;
    result.local_parts[q.get_str()] = std::move(part);
  }
  if (finite_error > epsilon / 2)
    throw ResourceError("finite-place contributions could not be resolved to the requested epsilon");
  auto inf = archimedean_escape_rate(phi, x, epsilon - finite_error);
  result.value += inf.value;
  result.error_bound = finite_error + inf.error_bound;
  result.local_parts["inf"] = std::move(inf);
  return result;
}

// With D the common denominator, b_i = D a_i and x = m/n in lowest terms,
// phi(x) = F(m, n) / (D n^d) where F(m, n) = sum b_i m^i n^(d-i). Then
//   gcd(F(m, n), D n^d) <= D |b_d|^d, and
//   max(|F|, D |n|^d) >= c max(|m|, |n|)^d,  c = min(D T^-d, |b_d|/2),
// with T = max(1, 2 sum_{i<d} |b_i| / |b_d|) (split on |m| <= T|n|). So
//   h(phi(x)) >= d h(x) - C,  C = log D + d log|b_d| - log c,
// and h(x) > C/(d-1) forces h(phi(x)) > h(x), hence strict growth forever.
double preperiodicity_height_bound(const RationalPoly& phi) {
  require_dynamical(phi);
  const int d = phi.degree();
  Integer common = 1;
  for (const auto& c : phi.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> b;
  for (const auto& c : phi.coefficients()) b.push_back(Integer(c * common));
  const double log_common = log_abs(common);
  const double log_lead = log_abs(b[d]);
  double ratio = 0.0;
  for (int i = 0; i < d; ++i)
    if (b[i] != 0) ratio += std::exp(log_abs(b[i]) - log_lead);
  const double log_t = std::log(std::max(1.0, 2 * ratio));
  const double log_c = std::min(log_common - d * log_t, log_lead - std::log(2.0));
  const double big_c = std::max(0.0, log_common + d * log_lead - log_c);
  return big_c / (d - 1) * (1 + 1e-12) + 1e-12;
}

PreperiodicityResult is_preperiodic(const RationalPoly& phi, const Rational& x) {
  require_dynamical(phi);
  PreperiodicityResult result;
  result.height_bound = preperiodicity_height_bound(phi);
  std::map<Rational, std::size_t> index;
  std::vector<Rational> orbit;
  Rational z = x;
  for (std::size_t m = 0;; ++m) {
    if (auto it = index.find(z); it != index.end()) {
      result.preperiodic = true;
      result.preperiod = it->second;
      result.period = m - it->second;
      result.cycle.assign(orbit.begin() + static_cast<std::ptrdiff_t>(it->second), orbit.end());
      return result;
    }
    if (weil_height(z) > result.height_bound) {
      result.escape_step = m;
      return result;
    }
    index.emplace(z, m);
    orbit.push_back(z);
    z = phi(z);
  }
}

std::vector<Rational> enumerate_rationals(double max_log_height, std::size_t max_points) {
  if (!(max_log_height >= 0)) throw PreconditionError("height cap must be >= 0");
  const double bound = std::floor(std::exp(max_log_height) + 1e-9);
  if (bound > 1e9) throw ResourceError("enumeration size cap exceeded");
  const long n_max = static_cast<long>(bound);
  if (static_cast<double>(2 * n_max + 1) * static_cast<double>(n_max) > static_cast<double>(max_points)) {
    std::size_t count = 0;
    for (long den = 1; den <= n_max; ++den)
      for (long num = -n_max; num <= n_max; ++num)
        if (std::gcd(num, den) == 1) ++count;
    if (count > max_points) throw ResourceError("enumeration size cap exceeded");
  }
  std::vector<Rational> xs;
  for (long den = 1; den <= n_max; ++den)
    for (long num = -n_max; num <= n_max; ++num)
      if (std::gcd(num, den) == 1) xs.emplace_back(num, den);
  return xs;
}

SurveyResult survey(const RationalPoly& phi, const Integer& p, double max_log_height, const SurveyOptions& options) {
  require_dynamical(phi);
  const Place place(p);
  const auto xs = enumerate_rationals(max_log_height, options.max_points);
  SurveyResult result;
  result.records.resize(xs.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < xs.size(); i = next++) {
      try {
        const auto h = canonical_height(phi, xs[i], options.epsilon);
        auto& rec = result.records[i];
        rec.x = xs[i];
        rec.height = h.value;
        rec.error_bound = h.error_bound;
        rec.preperiodic = h.preperiodic;
        rec.at_prime = local_escape_rate(phi, xs[i], place.prime());
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = xs.size();
      }
    }
  };
  unsigned workers = options.workers != 0 ? options.workers : std::max(1U, std::thread::hardware_concurrency());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& rec : result.records) {
    if (rec.preperiodic) {
      result.preperiodic_points.push_back(rec.x);
    } else if (!result.min_positive || rec.height < result.min_positive->height) {
      result.min_positive = rec;
    }
  }
  return result;
}

void write_survey_csv(std::ostream& out, const SurveyResult& result) {
  out << "x,num,den,canonical_height,error_bound,preperiodic\n";
  char buf[64];
  for (const auto& rec : result.records) {
    out << to_string(rec.x) << ',' << rec.x.get_num().get_str() << ',' << rec.x.get_den().get_str() << ',';
    std::snprintf(buf, sizeof buf, "%.17g", rec.height);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.3g", rec.error_bound);
    out << buf << ',' << (rec.preperiodic ? "true" : "false") << '\n';
  }
}

}  // namespace nadyn
