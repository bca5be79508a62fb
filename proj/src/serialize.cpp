#include "nadyn/serialize.hpp"

#include "nadyn/error.hpp"

namespace nadyn {

namespace {

Json prime_json(const Integer& p) {
  if (p.fits_slong_p()) return Json(p.get_si());
  return Json(p.get_str());
}

Integer prime_from(const Json& j) { return j.is_string() ? Integer(j.get<std::string>(), 10) : Integer(j.get<long>()); }

Json vertex_json(const NewtonVertex& v) { return Json::array({v.index, to_string(v.value)}); }

NewtonVertex vertex_from(const Json& j) {
  return {j.at(0).get<long>(), parse_rational(j.at(1).get<std::string>())};
}

Json local_json(const LocalHeight& h) {
  Json j{{"value", h.value}, {"error_bound", h.error_bound}};
  if (h.log_p_coefficient) j["log_p_coefficient"] = to_string(*h.log_p_coefficient);
  if (h.escape_step) j["escape_step"] = *h.escape_step;
  return j;
}

}  // namespace

void to_json(Json& j, const NewtonPolygon& polygon) {
  j = Json::object();
  j["vertices"] = Json::array();
  for (const auto& v : polygon.vertices) j["vertices"].push_back(vertex_json(v));
  j["segments"] = Json::array();
  for (const auto& s : polygon.segments) j["segments"].push_back({{"slope", to_string(s.slope)}, {"length", s.length}});
}

void from_json(const Json& j, NewtonPolygon& polygon) {
  polygon = {};
  for (const auto& v : j.at("vertices")) polygon.vertices.push_back(vertex_from(v));
  for (const auto& s : j.at("segments"))
    polygon.segments.push_back({parse_rational(s.at("slope").get<std::string>()), s.at("length").get<long>()});
}

Json disc_point_to_json(const DiscPoint& zeta) {
  Json j{{"center", to_string(zeta.center())},
         {"rho", zeta.radius_exponent().to_string()},
         {"p", prime_json(zeta.place().prime())}};
  if (zeta.place().ramification() != 1) j["e"] = zeta.place().ramification();
  return j;
}

DiscPoint disc_point_from_json(const Json& j) {
  const Integer prime = prime_from(j.at("p"));
  return DiscPoint(parse_rational(j.at("center").get<std::string>()), parse_valuation(j.at("rho").get<std::string>()),
                   Place(prime, j.value("e", 1L)));
}

Json verdict_to_json(const MembershipVerdict& verdict) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Escaped>)
          return {{"verdict", "escaped"}, {"step", v.step}};
        else if constexpr (std::is_same_v<T, BoundedCertified>)
          return {{"verdict", "bounded_certified"}, {"cycle_start", v.cycle_start}, {"cycle_length", v.cycle_length}};
        else
          return {{"verdict", "bounded_up_to"}, {"max_iter", v.iterations}};
      },
      verdict);
}

MembershipVerdict verdict_from_json(const Json& j) {
  const auto tag = j.at("verdict").get<std::string>();
  if (tag == "escaped") return Escaped{j.at("step").get<std::size_t>()};
  if (tag == "bounded_certified")
    return BoundedCertified{j.at("cycle_start").get<std::size_t>(), j.at("cycle_length").get<std::size_t>()};
  if (tag == "bounded_up_to") return BoundedUpTo{j.at("max_iter").get<std::size_t>()};
  throw PreconditionError("unknown membership verdict '" + tag + "'");
}

Json certificate_to_json(const BogomolovCertificate& cert) {
  Json j{{"verdict", to_string(cert.verdict)},
         {"p", prime_json(cert.place.prime())},
         {"e", cert.place.ramification()},
         {"slope_floor", to_string(cert.slope_floor)},
         {"abstract", cert.abstract_coefficients}};
  if (cert.witness) {
    const auto& w = *cert.witness;
    j["witness"] = {{"slope", to_string(w.slope)},
                    {"segment", Json::array({vertex_json(w.left), vertex_json(w.right)})},
                    {"zeta_of_X_valuation", to_string(w.zeta_of_x_valuation)}};
  } else {
    j["witness"] = nullptr;
  }
  j["polygon"] = cert.polygon;
  return j;
}

BogomolovCertificate certificate_from_json(const Json& j) {
  BogomolovCertificate cert;
  const auto tag = j.at("verdict").get<std::string>();
  if (tag != "strong_bogomolov" && tag != "inconclusive") throw PreconditionError("unknown verdict '" + tag + "'");
  cert.verdict = tag == "strong_bogomolov" ? Verdict::StrongBogomolov : Verdict::Inconclusive;
  cert.place = Place(prime_from(j.at("p")), j.at("e").get<long>());
  cert.slope_floor = parse_rational(j.at("slope_floor").get<std::string>());
  cert.abstract_coefficients = j.value("abstract", false);
  if (const auto& w = j.at("witness"); !w.is_null()) {
    cert.witness = BogomolovWitness{parse_rational(w.at("slope").get<std::string>()), vertex_from(w.at("segment").at(0)),
                                    vertex_from(w.at("segment").at(1)),
                                    parse_rational(w.at("zeta_of_X_valuation").get<std::string>())};
  }
  cert.polygon = j.at("polygon").get<NewtonPolygon>();
  return cert;
}

Json max_point_to_json(const MaxPointResult& result) {
  Json j{{"bracket", Json::array({to_string(result.lower), result.upper.to_string()})},
         {"converged", result.converged},
         {"refinements", result.refinements}};
  j["exact"] = result.exact ? Json(to_string(*result.exact)) : Json(nullptr);
  return j;
}

Json height_to_json(const HeightResult& result) {
  Json j{{"value", result.value}, {"error_bound", result.error_bound}, {"preperiodic", result.preperiodic}};
  j["local"] = Json::object();
  for (const auto& [label, part] : result.local_parts) j["local"][label] = local_json(part);
  return j;
}

}  // namespace nadyn
