#include "dt4/json_io.hpp"

#include <algorithm>
#include <stdexcept>

#include "dt4/errors.hpp"

namespace dt4 {

namespace {

std::string int_str(const BigInt& v) { return v.str(); }

json coeff_json(const Rational& r) {
  return json::array({int_str(boost::multiprecision::numerator(r)),
                      int_str(boost::multiprecision::denominator(r))});
}

}  // namespace

void require_keys(const json& j, std::initializer_list<std::string> allowed,
                  const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const auto& a : allowed) ok = ok || key == a;
    if (!ok)
      throw std::invalid_argument(where + ": unknown field '" + key + "'");
  }
}

json to_json(const PlanePartition& p) {
  json out = json::array();
  for (const auto& b : p.boxes) out.push_back(json::array({b[0], b[1], b[2]}));
  return out;
}

json to_json(const SolidPartition& p) {
  json out = json::array();
  for (const auto& b : p.boxes)
    out.push_back(json::array({b[0], b[1], b[2], b[3]}));
  return out;
}

json to_json(const CurvePartition& p) {
  json legs = json::array();
  for (const auto& leg : p.legs) legs.push_back(to_json(leg));
  json extra = json::array();
  for (const auto& b : p.extra)
    extra.push_back(json::array({b[0], b[1], b[2], b[3]}));
  return json{{"legs", legs}, {"extra", extra}};
}

json to_json(const CharClass& c) {
  json out = json::array();
  for (const auto& [w, m] : c.terms()) {
    const auto& e = w.exponents();
    out.push_back(json::array({e[0], e[1], e[2], e[3], e[4], m}));
  }
  return out;
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(json::array({json::array({e[0], e[1], e[2], e[3]}),
                               int_str(boost::multiprecision::numerator(c)),
                               int_str(boost::multiprecision::denominator(c))}));
  return out;
}

json to_json(const RationalFunction& f) {
  return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const ThetaClass& t) {
  json coeffs = json::array();
  for (int k = 0; k <= t.order(); ++k) coeffs.push_back(to_json(t.at(k)));
  return json{{"order", t.order()}, {"lead", coeff_json(t.lead())},
              {"coeff", coeffs}};
}

json to_json(const NormalDegrees& m) {
  return json::array({m.m2, m.m3, m.m4});
}

json to_json(const ToricGeometry& g) {
  json edges = json::array();
  for (const auto& e : g.edges)
    edges.push_back(json{{"va", e.va},
                         {"axis_a", e.axis_a},
                         {"vb", e.vb},
                         {"axis_b", e.axis_b},
                         {"m", to_json(e.m)},
                         {"matching", json::array({e.matching[0], e.matching[1],
                                                   e.matching[2]})},
                         {"class", e.cls}});
  return json{{"kind", g.kind},
              {"vertices", g.vertices.size()},
              {"edges", edges}};
}

json to_json(const DTResult& r) {
  json out{{"n", r.n},
           {"d", r.beta},
           {"insertion", r.insertion},
           {"terms", r.term_count}};
  switch (r.mode) {
    case ValueMode::Cohomological: out["mode"] = "cohomological"; break;
    case ValueMode::KTheoretic: out["mode"] = "k-theoretic"; break;
    case ValueMode::Elliptic: out["mode"] = "elliptic"; break;
  }
  if (r.theta_value) {
    out["value"] = to_json(*r.theta_value);
  } else {
    out["value"] = to_json(r.value);
  }
  if (!r.per_point.empty()) {
    json pts = json::array();
    for (const auto& t : r.per_point)
      pts.push_back(json{{"sign_exponent", t.sign_exponent},
                         {"value", to_json(t.value)}});
    out["per_point"] = pts;
  }
  return out;
}

PlanePartition plane_from_json(const json& j) {
  PlanePartition p;
  for (const auto& b : j)
    p.boxes.push_back({b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>()});
  std::sort(p.boxes.begin(), p.boxes.end());
  if (!p.is_downward_closed())
    throw std::invalid_argument("plane partition is not downward closed");
  return p;
}

SolidPartition solid_from_json(const json& j) {
  SolidPartition p;
  for (const auto& b : j)
    p.boxes.push_back({b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>(),
                       b.at(3).get<int>()});
  std::sort(p.boxes.begin(), p.boxes.end());
  if (!p.is_downward_closed())
    throw std::invalid_argument("solid partition is not downward closed");
  return p;
}

CurvePartition curve_from_json(const json& j) {
  require_keys(j, {"legs", "extra"}, "curve partition");
  CurvePartition c;
  const auto& legs = j.at("legs");
  for (std::size_t a = 0; a < 4; ++a) c.legs[a] = plane_from_json(legs.at(a));
  for (const auto& b : j.at("extra"))
    c.extra.push_back({b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>(),
                       b.at(3).get<int>()});
  std::sort(c.extra.begin(), c.extra.end());
  if (!c.is_valid())
    throw std::invalid_argument("curve partition violates closure");
  return c;
}

NormalDegrees degrees_from_json(const json& j) {
  return NormalDegrees{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()};
}

namespace {

Rational rational_from_strings(const json& num, const json& den) {
  return Rational(BigInt(num.get<std::string>()), BigInt(den.get<std::string>()));
}

Poly poly_from_json(const json& j) {
  Poly p;
  for (const auto& t : j) {
    const auto& e = t.at(0);
    p.add_term({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(),
                e.at(3).get<int>()},
               rational_from_strings(t.at(1), t.at(2)));
  }
  return p;
}

}  // namespace

RationalFunction rational_function_from_json(const json& j) {
  require_keys(j, {"num", "den"}, "rational function");
  return RationalFunction(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

ToricGeometry geometry_from_json(const json& j) {
  require_keys(j, {"kind", "m", "vertices", "edges"}, "geometry");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "C4") return build_c4();
  if (kind == "LocalCurve")
    return build_local_curve(degrees_from_json(j.at("m")));
  if (kind == "KP3") return build_kp3();
  if (kind != "custom") throw InvalidGeometry("unknown geometry kind " + kind);
  std::vector<ToricEdge> edges;
  for (const auto& je : j.at("edges")) {
    require_keys(je, {"va", "axis_a", "vb", "axis_b", "m", "matching", "class"},
                 "custom edge");
    ToricEdge e;
    e.va = je.at("va").get<int>();
    e.axis_a = je.at("axis_a").get<int>();
    e.vb = je.at("vb").get<int>();
    e.axis_b = je.at("axis_b").get<int>();
    e.m = degrees_from_json(je.at("m"));
    const auto& mt = je.at("matching");
    e.matching = {mt.at(0).get<int>(), mt.at(1).get<int>(), mt.at(2).get<int>()};
    e.cls = je.value("class", 0);
    edges.push_back(e);
  }
  return build_custom(j.at("vertices").get<int>(), std::move(edges));
}

}  // namespace dt4
