#include <cmath>
#include <sstream>

#include "doctest.h"
#include "nadyn/cli.hpp"
#include "nadyn/serialize.hpp"

using namespace nadyn;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("np") {
  const auto r = run({"np", "X-8", "--prime", "2"});
  CHECK(r.code == cli::kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j.at("segments").size() == 1);
  CHECK(j.at("segments")[0].at("slope") == "-3");
  CHECK(j.get<NewtonPolygon>() == newton_polygon(RationalPoly{-8, 1}, Integer(2)));
}

TEST_CASE("bogomolov") {
  const auto worked = run({"bogomolov", "X^5+X^2+X+1/2", "--prime", "2"});
  CHECK(worked.code == cli::kExitOk);
  const auto j = Json::parse(worked.out);
  CHECK(j.at("verdict") == "strong_bogomolov");
  CHECK(j.at("witness").at("slope") == "1/5");
  const auto cert = certificate_from_json(j);
  CHECK(cert == check_criterion(RationalPoly{Rational(1, 2), 1, 1, 0, 0, 1}, Place(Integer(2))));
  CHECK(certificate_to_json(cert) == j);

  const auto flat = run({"bogomolov", "X^2+3", "--prime", "5"});
  CHECK(flat.code == cli::kExitInconclusive);
  CHECK(Json::parse(flat.out).at("witness").is_null());
  CHECK(run({"bogomolov", "X^5+X^2+X+1/2", "--prime", "2", "--ram", "5"}).code == cli::kExitInconclusive);

  const auto zero = run({"bogomolov", "X^2+X", "--prime", "5"});
  CHECK(zero.code == cli::kExitPrecondition);
  CHECK(zero.err == "constant term vanishes; Newton polygon hypothesis violated\n");
}

TEST_CASE("disc-eval") {
  const auto r = run({"disc-eval", "X^2", "--center", "0", "--rho", "-1", "--prime", "3"});
  CHECK(r.code == cli::kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j.at("valuation") == "-2");
  CHECK(j.at("log_value").get<double>() == doctest::Approx(2 * std::log(3.0)));
  CHECK(disc_point_from_json(j.at("point")) == DiscPoint(0, Rational(-1), Place(Integer(3))));
  const auto type_one = Json::parse(run({"disc-eval", "X", "--center", "5", "--rho", "inf", "--prime", "5"}).out);
  CHECK(type_one.at("valuation") == "1");
  CHECK(Json::parse(run({"disc-eval", "X-5", "--center", "5", "--rho", "inf", "--prime", "5"}).out)
            .at("log_value")
            .is_null());
}

TEST_CASE("member") {
  const auto escaped = Json::parse(run({"member", "X^2+1/3", "--center", "0", "--rho", "inf", "--prime", "3"}).out);
  CHECK(verdict_from_json(escaped) == MembershipVerdict{Escaped{1}});
  const auto bounded = Json::parse(run({"member", "X^2", "--center", "-1/2", "--rho", "0", "--prime", "3"}).out);
  CHECK(bounded.at("verdict") == "bounded_certified");
  const auto capped =
      run({"member", "X^2-X", "--center", "1/3", "--rho", "inf", "--prime", "5", "--max-iter", "2"});
  CHECK(Json::parse(capped.out).at("verdict") == "bounded_up_to");
  CHECK(run({"member", "X^2", "--center", "0", "--rho", "0", "--prime", "3", "--max-iter", "0"}).code ==
        cli::kExitPrecondition);
}

TEST_CASE("mphi") {
  const auto r = run({"mphi", "X^3", "--fixed", "0", "--prime", "2"});
  CHECK(r.code == cli::kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j.at("exact") == "0");
  CHECK(j.at("converged") == true);
  CHECK(run({"mphi", "X^2+1/2", "--fixed", "0", "--prime", "2"}).code == cli::kExitPrecondition);
}

TEST_CASE("height") {
  const auto r = run({"height", "X^2", "2"});
  CHECK(r.code == cli::kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(std::fabs(j.at("value").get<double>() - std::log(2.0)) <= 1e-8);
  CHECK(j.at("local").contains("inf"));
  const auto fixed = Json::parse(run({"height", "X^2-1", "0", "--eps", "1e-10"}).out);
  CHECK(fixed.at("preperiodic") == true);
  CHECK(fixed.at("value") == 0.0);
  const auto finite = Json::parse(run({"height", "X^2+1/7", "0"}).out);
  CHECK(finite.at("local").at("7").at("log_p_coefficient") == "1/2");
  CHECK(run({"height", "X^2", "2", "--eps", "1e-300"}).code == cli::kExitPrecondition);
}

TEST_CASE("survey") {
  const auto r = run({"survey", "X^2", "--prime", "2", "--max-height", "0"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out ==
        "x,num,den,canonical_height,error_bound,preperiodic\n"
        "-1,-1,1,0,0,true\n0,0,1,0,0,true\n1,1,1,0,0,true\n");
  CHECK(r.err.find("not a proof") != std::string::npos);
  CHECK(r.err.find("preperiodic points found: -1 0 1") != std::string::npos);
}

TEST_CASE("bounds") {
  const auto csv = run({"bounds", "--max-e", "8"});
  CHECK(csv.code == cli::kExitOk);
  CHECK(csv.out.rfind("e,lcm,", 0) == 0);
  CHECK(csv.err.find("from e = 6") != std::string::npos);
  const auto j = Json::parse(run({"bounds", "--max-e", "8", "--format", "json"}).out);
  CHECK(j.at("rows").size() == 8);
  CHECK(j.at("crossover") == 6);
  CHECK(j.at("rows")[5].at("lcm") == "60");
  CHECK(run({"bounds", "--max-e", "8", "--format", "xml"}).code == cli::kExitUsage);
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"np", "X-8"}).code == cli::kExitUsage);
  const auto bad = run({"np", "X^^2", "--prime", "2"});
  CHECK(bad.code == cli::kExitUsage);
  CHECK(bad.err.find("position 2") != std::string::npos);
  CHECK(run({"np", "X-8", "--prime", "4"}).code == cli::kExitPrecondition);
  CHECK(run({"np", "X-8", "--prime", "two"}).code == cli::kExitUsage);
  CHECK(run({"np", "0", "--prime", "2"}).code == cli::kExitPrecondition);
}

TEST_CASE("repeated runs are identical") {
  const std::vector<std::string> args{"survey", "X^2-3/4", "--prime", "2", "--max-height", "2", "--workers", "3"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
}
