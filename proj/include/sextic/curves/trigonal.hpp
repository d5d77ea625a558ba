#pragma once

#include "sextic/algebra/polynomial.hpp"
#include "sextic/algebra/quadratic.hpp"

namespace sextic {

using Number = QuadraticNumber;
using NPoly = Polynomial<Number>;

/// The trigonal curve f_r(x, y) = y^3 + r^2 y^2 + 2 r x y + x^2 in the
/// affine chart of the Hirzebruch surface, with its rational parameterization
/// x_t = r t^2 + t^3, y_t = -t^2.
class TrigonalCurve {
 public:
  explicit TrigonalCurve(Number r = Number(3)) : r_(std::move(r)) {}

  const Number& r() const { return r_; }
  /// f_r over the variables (x, y).
  NPoly equation() const;
  Number x_at(const Number& t) const { return r_ * t * t + t * t * t; }
  Number y_at(const Number& t) const { return -(t * t); }
  /// Parameter and position of the vertical tangency point.
  Number vertical_tangent_t() const { return Number(-2) * r_ / Number(3); }
  Number vertical_tangent_x() const { return Number(4) * r_ * r_ * r_ / Number(27); }

 private:
  Number r_;
};

/// f_r with r kept symbolic: a polynomial over the variables (x, y, r).
QPoly trigonal_symbolic();

/// y-discriminant of the symbolic f_r, sign convention of discriminant().
QPoly trigonal_discriminant_symbolic();

/// f_r(x_t, y_t) as a polynomial in (t, r); zero exactly when the parameterization is valid.
QPoly parameterization_residual_symbolic();

/// f_r(x_t, y_t) over the variable t for a numeric r and an arbitrary parameterization.
NPoly parameterization_residual(const TrigonalCurve& curve, const NPoly& x_t, const NPoly& y_t);
bool verify_parameterization(const TrigonalCurve& curve);

/// Eliminates a from the tangency conditions at t1 and t2: after removing
/// the trivial factor t1 - t2 from each condition and the common factor of
/// the a-coefficients, the remaining polynomial in (t1, t2, r).
QPoly double_tangent_elimination();

/// True if p = k q for a nonzero rational k.
bool proportional(const QPoly& p, const QPoly& q);

}  // namespace sextic
