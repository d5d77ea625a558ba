#pragma once

#include <complex>
#include <vector>

#include "sextic/curves/trigonal.hpp"

namespace sextic {

using Complex = std::complex<double>;

/// f(x, y) = sum_k c_k(x) y^k with polynomial coefficients c_k.
class FiberPolynomial {
 public:
  FiberPolynomial() = default;
  /// coeffs[k][j] is the coefficient of x^j y^k.
  explicit FiberPolynomial(std::vector<std::vector<Complex>> coeffs);
  /// From a polynomial over the variables (x, y).
  static FiberPolynomial from_polynomial(const NPoly& f);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficients of f(x, .) in ascending powers of y.
  std::vector<Complex> at(Complex x) const;
  Complex operator()(Complex x, Complex y) const;
  const std::vector<std::vector<Complex>>& coefficients() const { return c_; }

  /// The same curve of Sigma_k in the chart x = x0 + 1/x', y = y'/x'^k:
  /// x'^{kd} f(x0 + 1/x', y'/x'^k). The fiber x = x0 goes to infinity and
  /// the fiber at infinity to x' = 0. Requires deg c_m <= k (d - m).
  FiberPolynomial recentered(double x0, int k) const;

 private:
  std::vector<std::vector<Complex>> c_;
};

/// Evaluates sum c_k y^k.
Complex horner(const std::vector<Complex>& c, Complex y);

/// All roots of sum c_k y^k (c_n != 0): companion-matrix eigenvalues, then
/// Newton polishing. `ok` reports whether every polished root passed the
/// relative residual check.
std::vector<Complex> polynomial_roots(const std::vector<Complex>& c, bool* ok = nullptr);

/// Aberth iteration in `bits` of binary precision, started from `guess`
/// (or from a circle if empty); rounded back to double.
std::vector<Complex> polynomial_roots_mp(const std::vector<Complex>& c, int bits, const std::vector<Complex>& guess = {});

/// |f(y)| <= tol * sum |c_k| |y|^k.
bool residual_ok(const std::vector<Complex>& c, Complex y, double tol = 1e-9);

}  // namespace sextic
