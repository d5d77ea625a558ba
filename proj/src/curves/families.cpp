#include "sextic/curves/families.hpp"

#include "json.hpp"
#include <stdexcept>

namespace sextic {

namespace {

using nlohmann::json;

Number root3() { return Number::sqrt_of(3); }

// (-1/2 + sign sqrt(3)/6) r
Number inflection_parameter(const TrigonalCurve& curve, int sign) {
  return (Number(Rational(-1, 2)) + Number(sign) * root3() / Number(6)) * curve.r();
}

json interval_json(const RootInterval& iv) { return json::array({iv.lo.get_str(), iv.hi.get_str()}); }

}  // namespace

std::vector<std::string> family_names() { return {"2e6+2a2+a3", "3e6+a1", "2e6+a5+a2.1", "2e6+a5+a2.2"}; }

NamedFamily named_family(const std::string& name, const TrigonalCurve& curve) {
  const Number& r = curve.r();
  if (name == "2e6+2a2+a3") {
    return {name, -r / Number(6), quadruple_section(curve), parse_singularity_set("(2E6+2A2)+A3"),
            "double tangent at t1 = t2 = -r/6"};
  }
  if (name == "3e6+a1") {
    Number t = -r / Number(3);
    return {name, t, cusp_tangent_section(curve, t), parse_singularity_set("(3E6)+A1"),
            "through the cusp, tangent at t = -r/3"};
  }
  if (name == "2e6+a5+a2.1" || name == "2e6+a5+a2.2") {
    Number t = inflection_parameter(curve, name.back() == '1' ? 1 : -1);
    return {name, t, inflection_section(curve, t), parse_singularity_set("(2E6+A5)+A2"),
            std::string("inflection at t = (-1/2 ") + (name.back() == '1' ? "+" : "-") +
                " sqrt(3)/6) r, through the cusp"};
  }
  throw std::out_of_range("unknown family " + name);
}

std::vector<Realization> table_realizations(const TrigonalCurve& curve) {
  const Number& r = curve.r();
  Number r4 = r * r * r * r;
  Number unit = Number(1) / r4;
  auto set = parse_singularity_set;
  return {
      {set("(3E6)+A1"), "cusp tangent at t = -r/3", cusp_tangent_section(curve, -r / Number(3))},
      {set("(3E6)"), "c = 0, b = -1/r, a = 1/r^4", cusp_flex_section(curve, unit)},
      {set("(2E6+A5)+A2"), "inflection through the cusp", inflection_section(curve, inflection_parameter(curve, 1))},
      {set("(2E6+A5)+A1"), "cusp tangent at t = r", cusp_tangent_section(curve, r)},
      {set("(2E6+A5)"), "c = 0, b = 0, a = -1/r^4", Section(-unit, Number(0), Number(0))},
      {set("(2E6+2A2)+A3"), "quadruple point at t = -r/6", quadruple_section(curve)},
      {set("(2E6+2A2)+A2"), "inflection at t = r", inflection_section(curve, r)},
      {set("(2E6+2A2)+2A1"), "double tangent at t = r/2", double_tangent_section(curve, r / Number(2))},
      {set("(2E6+2A2)+A1"), "tangent at t = r, a = 1/r^4", tangent_section(curve, r, unit)},
      {set("(2E6+2A2)"), "a = 1/r^4, b = 1/r, c = 1", Section(unit, Number(1) / r, Number(1))},
  };
}

std::string section_json(const Section& s) {
  return json{{"a", s.a.to_string()}, {"b", s.b.to_string()}, {"c", s.c.to_string()}}.dump();
}

std::string divisor_json(const IntersectionDivisor& d) {
  json entries = json::array();
  for (const auto& e : d.entries) {
    json j{{"multiplicity", e.multiplicity}, {"at_cusp", e.at_cusp}, {"at_vertical_tangent", e.at_vertical_tangent},
           {"real", e.t.real()}};
    if (e.t.exact) {
      j["t"] = e.t.exact->to_string();
    } else {
      j["minimal_factor"] = upoly_to_string(e.t.factor);
      if (e.t.interval) j["interval"] = interval_json(*e.t.interval);
    }
    if (e.x_exact) j["x"] = e.x_exact->to_string();
    if (e.t.real()) j["x_approx"] = e.x_approx;
    entries.push_back(std::move(j));
  }
  return json{{"total", d.total()}, {"entries", entries}}.dump();
}

std::string classification_json(const Classification& c) {
  json j{{"set", c.set.to_string()}, {"milnor", c.set.total_milnor()}, {"degenerate", c.degenerate}};
  if (!c.note.empty()) j["note"] = c.note;
  return j.dump();
}

std::string fibers_json(const FiberList& f) {
  json list = json::array();
  for (const auto& x : f.fibers) {
    json j{{"x_approx", x.x}, {"label", x.label}, {"multiplicity", x.multiplicity}};
    if (x.x_exact) j["x"] = x.x_exact->to_string();
    j["kind"] = x.kind == FiberKind::Cusp ? "cusp" : x.kind == FiberKind::VerticalTangent ? "vertical-tangent" : "intersection";
    list.push_back(std::move(j));
  }
  return json{{"fibers", list}, {"nonreal", f.nonreal}}.dump();
}

}  // namespace sextic
