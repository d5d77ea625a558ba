#include "sextic/curves/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sextic {

namespace {

std::string format_x(const std::optional<Number>& exact, double x) {
  if (exact && exact->is_rational()) return exact->to_string();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::string("~") + buf;
}

}  // namespace

std::string intersection_label(int multiplicity) {
  switch (multiplicity) {
    case 1: return "transversal intersection";
    case 2: return "tangency";
    case 3: return "inflection tangency";
    case 4: return "quadruple intersection";
    default: return std::to_string(multiplicity) + "-fold intersection";
  }
}

Classification classify_sextic(const Section& s, const TrigonalCurve& curve) {
  Classification out;
  const Number& r = curve.r();
  if (is_zero(r)) {
    out.degenerate = true;
    out.note = "isotrivial curve r = 0";
    return out;
  }
  IntersectionDivisor div = intersection_divisor(s, curve);
  out.set.inner = {{'E', 6}, {'E', 6}};
  if (!is_zero(s.c))
    out.set.inner.insert(out.set.inner.end(), {{'A', 2}, {'A', 2}});
  else if (s.b == Number(-1) / r)
    out.set.inner.push_back({'E', 6});
  else
    out.set.inner.push_back({'A', 5});
  for (const auto& e : div.entries) {
    if (e.at_cusp || e.multiplicity < 2) continue;
    out.set.outer.push_back({'A', e.multiplicity - 1});
  }
  out.set = out.set.canonical();
  if (div.meets_vertical_tangent()) {
    out.degenerate = true;
    out.note = "section meets the vertical tangency point";
  }
  return out;
}

std::vector<double> FiberList::positions() const {
  std::vector<double> x;
  for (const auto& f : fibers) x.push_back(f.x);
  return x;
}

FiberList singular_fibers(const Section& s, const TrigonalCurve& curve) {
  FiberList out;
  Number xv = curve.vertical_tangent_x();
  out.fibers.push_back({FiberKind::Cusp, Number(0), 0.0, 0, ""});
  out.fibers.push_back({FiberKind::VerticalTangent, xv, xv.to_double(), 0, ""});
  IntersectionDivisor div = intersection_divisor(s, curve);
  for (const auto& e : div.entries) {
    if (!e.t.real()) {
      out.nonreal = true;
      continue;
    }
    auto same = [&](const SingularFiber& f) {
      if (e.x_exact && f.x_exact) return *e.x_exact == *f.x_exact;
      return std::abs(f.x - e.x_approx) <= 1e-12 * std::max(1.0, std::abs(f.x));
    };
    auto it = std::find_if(out.fibers.begin(), out.fibers.end(), same);
    if (it != out.fibers.end()) {
      it->multiplicity += e.multiplicity;
      continue;
    }
    out.fibers.push_back({FiberKind::Intersection, e.x_exact, e.x_approx, e.multiplicity, ""});
  }
  std::sort(out.fibers.begin(), out.fibers.end(), [](const auto& a, const auto& b) { return a.x < b.x; });
  for (auto& f : out.fibers) {
    std::string x = "x=" + format_x(f.x_exact, f.x);
    switch (f.kind) {
      case FiberKind::Cusp: f.label = "cusp " + x; break;
      case FiberKind::VerticalTangent: f.label = "vertical tangent " + x; break;
      case FiberKind::Intersection: f.label = intersection_label(f.multiplicity) + " " + x; break;
    }
  }
  return out;
}

NPoly sextic_equation(const Section& s, const TrigonalCurve& curve) {
  std::vector<std::string> v{"x", "y"};
  NPoly x = NPoly::variable(v, "x"), y = NPoly::variable(v, "y");
  NPoly sx = s.a * x.pow(2) + s.b * x + NPoly::constant(v, s.c);
  return curve.equation().substitute("y", y.pow(2) + sx);
}

bool verify_torus_structure(const TrigonalCurve& curve) {
  std::vector<std::string> v{"x", "y"};
  NPoly x = NPoly::variable(v, "x"), y = NPoly::variable(v, "y");
  NPoly q = curve.r() * y + x;
  return curve.equation() == y.pow(3) + q.pow(2);
}

}  // namespace sextic
