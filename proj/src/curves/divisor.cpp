#include "sextic/curves/divisor.hpp"

#include <algorithm>
#include <cmath>

namespace sextic {

namespace {

// Isolating intervals are shrunk below this width before x_t is evaluated.
const Rational kWidth(1, Integer(1) << 60);

double midpoint(const RootInterval& iv) { return Rational((iv.lo + iv.hi) / 2).get_d(); }

NUPoly divide_linear(const NUPoly& p, const Number& root) {
  return exact_quotient(p, NUPoly({-root, Number(1)}));
}

}  // namespace

std::string upoly_to_string(const NUPoly& p, const std::string& var) {
  return from_univariate(p, {var}, var).to_string();
}

std::string AlgebraicRoot::to_string() const {
  if (exact) return exact->to_string();
  std::string f = upoly_to_string(factor);
  if (!interval) return "root of " + f + " (non-real)";
  return "root of " + f + " in [" + interval->lo.get_str() + ", " + interval->hi.get_str() + "]";
}

int IntersectionDivisor::total() const {
  int n = 0;
  for (const auto& e : entries) n += e.multiplicity;
  return n;
}

std::vector<int> IntersectionDivisor::pattern() const {
  std::vector<int> p;
  for (const auto& e : entries) p.push_back(e.multiplicity);
  std::sort(p.rbegin(), p.rend());
  return p;
}

const DivisorEntry* IntersectionDivisor::at(const Number& t) const {
  for (const auto& e : entries) {
    if (e.t.exact) {
      if (*e.t.exact == t) return &e;
    } else if (is_zero(e.t.factor(t))) {
      // an inexact entry can only hold t if t is a root of its factor in the interval
      if (e.t.interval && !(t < Number(e.t.interval->lo)) && !(Number(e.t.interval->hi) < t)) return &e;
    }
  }
  return nullptr;
}

int IntersectionDivisor::multiplicity_at(const Number& t) const {
  const DivisorEntry* e = at(t);
  return e ? e->multiplicity : 0;
}

int IntersectionDivisor::cusp_multiplicity() const {
  for (const auto& e : entries)
    if (e.at_cusp) return e.multiplicity;
  return 0;
}

bool IntersectionDivisor::meets_vertical_tangent() const {
  return std::any_of(entries.begin(), entries.end(), [](const auto& e) { return e.at_vertical_tangent; });
}

bool IntersectionDivisor::all_real() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.t.real(); });
}

NUPoly intersection_polynomial(const Section& s, const TrigonalCurve& curve) {
  NUPoly xt({Number(0), Number(0), curve.r(), Number(1)});
  NUPoly yt({Number(0), Number(0), Number(-1)});
  return NUPoly({s.a}) * xt * xt + NUPoly({s.b}) * xt + NUPoly({s.c}) - yt;
}

IntersectionDivisor intersection_divisor(const Section& s, const TrigonalCurve& curve) {
  NUPoly p = intersection_polynomial(s, curve);
  IntersectionDivisor out;
  const Number tv = curve.vertical_tangent_t();
  auto add_exact = [&](const Number& t, int m) {
    DivisorEntry e;
    e.t.factor = NUPoly({-t, Number(1)});
    e.t.exact = t;
    e.t.approx = t.to_double();
    e.multiplicity = m;
    e.at_cusp = is_zero(t);
    e.at_vertical_tangent = t == tv;
    e.x_exact = curve.x_at(t);
    e.x_approx = e.x_exact->to_double();
    out.entries.push_back(std::move(e));
  };
  std::vector<DivisorEntry> inexact;
  for (const auto& [f, m] : squarefree_decomposition(p)) {
    NUPoly g = f;
    // the two distinguished points are split off exactly
    for (const Number& t : {Number(0), tv})
      if (is_zero(g(t))) {
        add_exact(t, m);
        g = divide_linear(g, t);
      }
    if (g.degree() <= 0) continue;
    if (g.degree() == 1) {
      add_exact(-g[0] / g[1], m);
      continue;
    }
    SturmChain<Number> chain(g);
    int real = 0;
    for (RootInterval iv : chain.isolate()) {
      ++real;
      DivisorEntry e;
      e.multiplicity = m;
      if (iv.lo == iv.hi) {
        // a rational root found by bisection
        Number t(iv.lo);
        e.t.factor = NUPoly({-t, Number(1)});
        e.t.exact = t;
        e.x_exact = curve.x_at(t);
        e.x_approx = e.x_exact->to_double();
      } else {
        iv = chain.refine(iv, kWidth);
        e.t.factor = g;
        if (iv.lo == iv.hi) {
          e.t.exact = Number(iv.lo);
          e.x_exact = curve.x_at(*e.t.exact);
        }
        e.t.interval = iv;
        e.x_approx = curve.x_at(Number(Rational((iv.lo + iv.hi) / 2))).to_double();
      }
      e.t.approx = e.t.exact ? e.t.exact->to_double() : midpoint(iv);
      inexact.push_back(std::move(e));
    }
    // non-real roots: one entry per root, all sharing the factor
    for (int k = real; k < g.degree(); ++k) {
      DivisorEntry e;
      e.multiplicity = m;
      e.t.factor = g;
      e.t.approx = std::nan("");
      e.x_approx = std::nan("");
      inexact.push_back(std::move(e));
    }
  }
  for (auto& e : inexact) out.entries.push_back(std::move(e));
  std::stable_sort(out.entries.begin(), out.entries.end(), [](const DivisorEntry& a, const DivisorEntry& b) {
    if (a.t.real() != b.t.real()) return a.t.real();
    return a.t.real() && a.t.approx < b.t.approx;
  });
  return out;
}

}  // namespace sextic
