#pragma once

// JSON forms of the public types. Rationals travel as "num/den" strings
// ("num" for integers) and infinite valuations as "inf".

#include "json.hpp"
#include "nadyn/berkovich.hpp"
#include "nadyn/bogomolov.hpp"
#include "nadyn/heights.hpp"
#include "nadyn/newton.hpp"

namespace nadyn {

using Json = nlohmann::json;

void to_json(Json& j, const NewtonPolygon& polygon);
void from_json(const Json& j, NewtonPolygon& polygon);

Json disc_point_to_json(const DiscPoint& zeta);
DiscPoint disc_point_from_json(const Json& j);

Json verdict_to_json(const MembershipVerdict& verdict);
MembershipVerdict verdict_from_json(const Json& j);

Json certificate_to_json(const BogomolovCertificate& cert);
BogomolovCertificate certificate_from_json(const Json& j);

Json max_point_to_json(const MaxPointResult& result);
Json height_to_json(const HeightResult& result);

}  // namespace nadyn
