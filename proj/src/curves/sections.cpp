#include "sextic/curves/sections.hpp"

#include <stdexcept>

namespace sextic {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

// (a, b, c) of the double tangent family without the exclusion checks
Section double_tangent_raw(const Number& r, const Number& t) {
  Number u = Number(3) * t - r, v = Number(3) * t + Number(2) * r;
  Number d = u * u * v * v;
  Number a = Number(-27) / d;
  Number b = Number(2) * r * (Number(27) * t * t + Number(9) * r * t - Number(2) * r * r) / d;
  Number w = Number(3) * t + r;
  Number c = Number(-2) * t * t * t * w * w * w / d;
  return {a, b, c};
}

}  // namespace

Section::Section(Number a_, Number b_, Number c_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
  if (is_zero(a)) throw std::domain_error("section requires a != 0");
}

std::string Section::to_string() const {
  return "(" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")";
}

Section tangent_section(const TrigonalCurve& curve, const Number& t, const Number& a) {
  const Number& r = curve.r();
  require(!is_zero(t), "tangent point at the cusp");
  Number v = Number(3) * t + Number(2) * r;
  require(!is_zero(v), "tangent point at the vertical tangency");
  Number g = t * t * (t + r);
  Number b = Number(-2) * g * a - Number(2) / v;
  Number c = g * g * a - t * t * t / v;
  return {a, b, c};
}

Section double_tangent_section(const TrigonalCurve& curve, const Number& t) {
  const Number& r = curve.r();
  require(!is_zero(t), "double tangent at the cusp");
  require(!is_zero(Number(6) * t + r), "double tangent degenerates to a quadruple point");
  require(!is_zero(Number(3) * t + Number(2) * r), "double tangent at the vertical tangency");
  return double_tangent_raw(r, t);
}

Section inflection_section(const TrigonalCurve& curve, const Number& t) {
  const Number& r = curve.r();
  require(!is_zero(t), "inflection at the cusp");
  Number v = Number(3) * t + Number(2) * r;
  require(!is_zero(v), "inflection at the vertical tangency");
  Number v3 = v * v * v;
  Number a = Number(3) / (t * v3);
  Number b = Number(-2) * (Number(12) * t * t + Number(15) * r * t + Number(4) * r * r) / v3;
  Number c = -(t * t * t) * (Number(6) * t * t + Number(6) * r * t + r * r) / v3;
  return {a, b, c};
}

Section cusp_tangent_section(const TrigonalCurve& curve, const Number& t) {
  const Number& r = curve.r();
  require(!is_zero(t), "cusp tangent at the cusp");
  require(!is_zero(t + r), "cusp tangent at the smooth point of the cusp fiber");
  Number v = Number(3) * t + Number(2) * r;
  require(!is_zero(v), "cusp tangent at the vertical tangency");
  Number w = t + r;
  Number a = Number(1) / (t * w * w * v);
  Number b = Number(-2) * (Number(2) * t + r) / (w * v);
  return {a, b, Number(0)};
}

Section quadruple_section(const TrigonalCurve& curve) {
  return double_tangent_raw(curve.r(), -curve.r() / Number(6));
}

Section cusp_flex_section(const TrigonalCurve& curve, const Number& a) {
  return {a, Number(-1) / curve.r(), Number(0)};
}

}  // namespace sextic
