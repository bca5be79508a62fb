#include "nadyn/cli.hpp"

#include <cmath>
#include <functional>
#include <iomanip>

#include "CLI11.hpp"
#include "nadyn/bogomolov.hpp"
#include "nadyn/bounds.hpp"
#include "nadyn/error.hpp"
#include "nadyn/parse.hpp"
#include "nadyn/serialize.hpp"

namespace nadyn::cli {

namespace {

struct Options {
  std::string poly;
  std::string prime;
  long ram = 1;
  std::string center;
  std::string rho;
  int max_iter = kDefaultMaxIter;
  std::string fixed;
  std::string point;
  double eps = 1e-8;
  double max_height = 0.0;
  long max_e = 0;
  double constant = 1.0;
  std::string format = "csv";
  unsigned workers = 0;
};

Place place_from(const std::string& text, long ram = 1) {
  const Rational p = parse_rational(text);
  if (p.get_den() != 1) throw PreconditionError("prime must be an integer, got " + text);
  return Place(p.get_num(), ram);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact non-archimedean polynomial dynamics", "nadyn"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto* np = app.add_subcommand("np", "Newton polygon of a polynomial (JSON)");
  np->add_option("poly", o.poly, "Polynomial in X")->required();
  np->add_option("--prime", o.prime, "Prime p")->required();
  np->callback([&] {
    action = [&] {
      out << Json(newton_polygon(parse_polynomial(o.poly), place_from(o.prime).prime())).dump() << '\n';
      return kExitOk;
    };
  });

  auto* bog = app.add_subcommand("bogomolov", "Newton-polygon criterion for the strong Bogomolov property (JSON)");
  bog->add_option("poly", o.poly, "Polynomial in X")->required();
  bog->add_option("--prime", o.prime, "Prime p")->required();
  bog->add_option("--ram", o.ram, "Ramification index e of the base field over Q")->capture_default_str();
  bog->callback([&] {
    action = [&] {
      const auto cert = check_criterion(parse_polynomial(o.poly), place_from(o.prime, o.ram));
      out << certificate_to_json(cert).dump() << '\n';
      if (cert.verdict == Verdict::Inconclusive) {
        err << "inconclusive: the sufficient criterion does not apply (this is not a failure of the property)\n";
        return kExitInconclusive;
      }
      return kExitOk;
    };
  });

  auto* disc = app.add_subcommand("disc-eval", "Seminorm of a polynomial at a disc point (JSON)");
  disc->add_option("poly", o.poly, "Polynomial in X")->required();
  disc->add_option("--center", o.center, "Disc center a")->required();
  disc->add_option("--rho", o.rho, "Radius exponent (r = p^-rho), or inf")->required();
  disc->add_option("--prime", o.prime, "Prime p")->required();
  disc->callback([&] {
    action = [&] {
      const DiscPoint zeta(parse_rational(o.center), parse_valuation(o.rho), place_from(o.prime));
      const Valuation v = seminorm(zeta, parse_polynomial(o.poly));
      Json j{{"point", disc_point_to_json(zeta)}, {"valuation", v.to_string()}};
      j["log_value"] =
          v.is_finite() ? Json(-v.value().get_d() * std::log(zeta.place().prime().get_d())) : Json(nullptr);
      out << j.dump() << '\n';
      return kExitOk;
    };
  });

  auto* member = app.add_subcommand("member", "Filled Julia set membership of a disc point (JSON)");
  member->add_option("poly", o.poly, "Polynomial in X")->required();
  member->add_option("--center", o.center, "Disc center a")->required();
  member->add_option("--rho", o.rho, "Radius exponent (r = p^-rho), or inf")->required();
  member->add_option("--prime", o.prime, "Prime p")->required();
  member->add_option("--max-iter", o.max_iter, "Iteration cap")->capture_default_str();
  member->callback([&] {
    action = [&] {
      const DiscPoint zeta(parse_rational(o.center), parse_valuation(o.rho), place_from(o.prime));
      Json j = verdict_to_json(filled_julia_membership(parse_polynomial(o.poly), zeta, o.max_iter));
      j["point"] = disc_point_to_json(zeta);
      out << j.dump() << '\n';
      return kExitOk;
    };
  });

  auto* mphi = app.add_subcommand("mphi", "Maximal filled-Julia point above a bounded rational point (JSON)");
  mphi->add_option("poly", o.poly, "Polynomial in X")->required();
  mphi->add_option("--fixed", o.fixed, "Rational point with a bounded orbit")->required();
  mphi->add_option("--prime", o.prime, "Prime p")->required();
  mphi->add_option("--max-iter", o.max_iter, "Iteration cap per membership test")->capture_default_str();
  mphi->callback([&] {
    action = [&] {
      MaxPointOptions opts;
      opts.max_iter = o.max_iter;
      const Rational a = parse_rational(o.fixed);
      const Place place = place_from(o.prime);
      Json j = max_point_to_json(max_point(parse_polynomial(o.poly), a, place, opts));
      j["center"] = to_string(a);
      j["p"] = place.prime().get_si();
      out << j.dump() << '\n';
      return kExitOk;
    };
  });

  auto* height = app.add_subcommand("height", "Canonical height of a rational point (JSON)");
  height->add_option("poly", o.poly, "Polynomial in X")->required();
  height->add_option("x", o.point, "Rational point")->required();
  height->add_option("--eps", o.eps, "Error target")->capture_default_str();
  height->callback([&] {
    action = [&] {
      const auto h = canonical_height(parse_polynomial(o.poly), parse_rational(o.point), o.eps);
      out << std::setprecision(17) << height_to_json(h).dump() << '\n';
      return kExitOk;
    };
  });

  auto* surv = app.add_subcommand("survey", "Canonical heights of all rationals up to a naive height (CSV)");
  surv->add_option("poly", o.poly, "Polynomial in X")->required();
  surv->add_option("--prime", o.prime, "Prime p of the unramified extension")->required();
  surv->add_option("--max-height", o.max_height, "Logarithmic naive-height cap H")->required();
  surv->add_option("--eps", o.eps, "Error target")->capture_default_str();
  surv->add_option("--workers", o.workers, "Worker threads (0: all cores)")->capture_default_str();
  surv->callback([&] {
    action = [&] {
      SurveyOptions opts;
      opts.epsilon = o.eps;
      opts.workers = o.workers;
      const auto result = survey(parse_polynomial(o.poly), place_from(o.prime).prime(), o.max_height, opts);
      write_survey_csv(out, result);
      err << "surveyed " << result.records.size() << " rationals (desk-scale evidence, not a proof)\n";
      if (result.min_positive)
        err << "minimum positive canonical height " << std::setprecision(12) << result.min_positive->height
            << " at x = " << to_string(result.min_positive->x) << '\n';
      err << "preperiodic points found:";
      for (const auto& x : result.preperiodic_points) err << ' ' << to_string(x);
      if (result.preperiodic_points.empty()) err << " none";
      err << '\n';
      return kExitOk;
    };
  });

  auto* bounds = app.add_subcommand("bounds", "Height lower-bound comparison table");
  bounds->add_option("--max-e", o.max_e, "Largest ramification index")->required();
  bounds->add_option("--constant", o.constant, "Constant C in both bounds")->capture_default_str();
  bounds->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  bounds->callback([&] {
    action = [&] {
      const auto table = bound_table(o.max_e, o.constant);
      if (o.format == "json") {
        Json rows = Json::array();
        for (const auto& r : table.rows)
          rows.push_back({{"e", r.e},
                          {"lcm", r.lcm.get_str()},
                          {"pottmeyer", r.pottmeyer},
                          {"new_bound", r.new_bound},
                          {"nine_exp", r.nine_exp},
                          {"log_pottmeyer", r.log_pottmeyer},
                          {"log_new_bound", r.log_new_bound},
                          {"lcm_le_3e", r.lcm_within_three_power},
                          {"new_ge_nine_exp", r.new_at_least_nine_exp}});
        out << Json{{"rows", rows}, {"crossover", table.crossover ? Json(*table.crossover) : Json(nullptr)}}.dump()
            << '\n';
      } else {
        write_bound_csv(out, table);
      }
      if (table.crossover) err << "lcm bound exceeds the super-exponential bound from e = " << *table.crossover << '\n';
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    return action();
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ResourceError& e) {
    err << e.what() << '\n';
    return kExitPrecondition;
  }
}

}  // namespace nadyn::cli
