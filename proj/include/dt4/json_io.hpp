#pragma once

#include <string>

#include <json.hpp>

#include "dt4/char_class.hpp"
#include "dt4/geometry.hpp"
#include "dt4/partitions.hpp"
#include "dt4/rational_function.hpp"

namespace dt4 {

using nlohmann::json;

// Box sets are serialized as sorted coordinate lists, characters as sorted
// [a1,a2,a3,a4,a5,multiplicity] rows in canonical form, polynomials as
// sorted [exponent-vector, coeff-num, coeff-den] triples with decimal
// string coefficients (values outgrow JSON numbers).

json to_json(const PlanePartition& p);
json to_json(const SolidPartition& p);
json to_json(const CurvePartition& p);
json to_json(const CharClass& c);
json to_json(const Poly& p);
json to_json(const RationalFunction& f);
json to_json(const ThetaClass& t);
json to_json(const NormalDegrees& m);
json to_json(const ToricGeometry& g);
json to_json(const DTResult& r);

PlanePartition plane_from_json(const json& j);
SolidPartition solid_from_json(const json& j);
CurvePartition curve_from_json(const json& j);
NormalDegrees degrees_from_json(const json& j);
RationalFunction rational_function_from_json(const json& j);

/// Parses {"kind": "C4"|"LocalCurve"|"KP3"|"custom", ...}; strict about
/// unknown keys. Throws InvalidGeometry / json exceptions on bad input.
ToricGeometry geometry_from_json(const json& j);

/// Rejects any key of j outside `allowed`.
void require_keys(const json& j, std::initializer_list<std::string> allowed,
                  const std::string& where);

}  // namespace dt4
