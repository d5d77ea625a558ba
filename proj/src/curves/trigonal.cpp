#include "sextic/curves/trigonal.hpp"

#include <stdexcept>

#include "sextic/algebra/resultant.hpp"

namespace sextic {

NPoly TrigonalCurve::equation() const {
  std::vector<std::string> v{"x", "y"};
  NPoly x = NPoly::variable(v, "x"), y = NPoly::variable(v, "y");
  return y.pow(3) + (r_ * r_) * y.pow(2) + (Number(2) * r_) * (x * y) + x.pow(2);
}

QPoly trigonal_symbolic() {
  std::vector<std::string> v{"x", "y", "r"};
  QPoly x = QPoly::variable(v, "x"), y = QPoly::variable(v, "y"), r = QPoly::variable(v, "r");
  return y.pow(3) + r.pow(2) * y.pow(2) + Rational(2) * (r * x * y) + x.pow(2);
}

QPoly trigonal_discriminant_symbolic() { return discriminant(trigonal_symbolic(), "y"); }

QPoly parameterization_residual_symbolic() {
  std::vector<std::string> v{"x", "y", "r", "t"};
  QPoly f = trigonal_symbolic().with_vars(v);
  QPoly t = QPoly::variable(v, "t"), r = QPoly::variable(v, "r");
  QPoly xt = r * t.pow(2) + t.pow(3);
  QPoly yt = -t.pow(2);
  return f.substitute("x", xt).substitute("y", yt).with_vars({"t", "r"});
}

NPoly parameterization_residual(const TrigonalCurve& curve, const NPoly& x_t, const NPoly& y_t) {
  std::vector<std::string> v{"x", "y", "t"};
  NPoly f = curve.equation().with_vars(v);
  return f.substitute("x", x_t.with_vars(v)).substitute("y", y_t.with_vars(v)).with_vars({"t"});
}

bool verify_parameterization(const TrigonalCurve& curve) {
  std::vector<std::string> v{"t"};
  NPoly t = NPoly::variable(v, "t");
  NPoly xt = curve.r() * t.pow(2) + t.pow(3);
  NPoly yt = -t.pow(2);
  return parameterization_residual(curve, xt, yt).is_zero();
}

QPoly double_tangent_elimination() {
  std::vector<std::string> v{"t1", "t2", "r"};
  QPoly t1 = QPoly::variable(v, "t1"), t2 = QPoly::variable(v, "t2"), r = QPoly::variable(v, "r");
  // tangency at t: b = -2 g(t) a - 2 / D(t), c = g(t)^2 a - t^3 / D(t),
  // with g(t) = t^2 (t + r) and D(t) = 3t + 2r
  auto g = [&](const QPoly& t) { return t.pow(2) * (t + r); };
  auto d = [&](const QPoly& t) { return Rational(3) * t + Rational(2) * r; };
  QPoly d1 = d(t1), d2 = d(t2);
  // each condition b(t1) = b(t2), c(t1) = c(t2) times D(t1) D(t2), as A a + R = 0
  QPoly ab = Rational(-2) * ((g(t1) - g(t2)) * d1 * d2);
  QPoly rb = Rational(-2) * d2 + Rational(2) * d1;
  QPoly ac = (g(t1).pow(2) - g(t2).pow(2)) * d1 * d2;
  QPoly rc = -(t1.pow(3) * d2) + t2.pow(3) * d1;
  QPoly diff = t1 - t2;
  auto strip = [&](const QPoly& p) {
    auto q = p.divide_exact(diff);
    if (!q) throw std::logic_error("condition does not vanish on the diagonal");
    return *q;
  };
  ab = strip(ab);
  rb = strip(rb);
  ac = strip(ac);
  rc = strip(rc);
  // a = -rb/ab = -rc/ac  =>  rb ac - rc ab = 0; ab divides ac, so divide the cross product by ab
  QPoly cross = rb * ac - rc * ab;
  auto e = cross.divide_exact(ab);
  if (!e) throw std::logic_error("a-coefficients not proportional");
  return *e;
}

bool proportional(const QPoly& p, const QPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.vars() != q.vars() || p.size() != q.size()) return false;
  Rational k = p.leading().second / q.leading().second;
  return p == k * q;
}

}  // namespace sextic
