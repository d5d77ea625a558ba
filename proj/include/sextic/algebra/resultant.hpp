#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sextic/algebra/polynomial.hpp"

namespace sextic {

/// Sylvester resultant of f and g with respect to var, computed as a
/// fraction-free (Bareiss) determinant over the remaining variables.
template <class K>
Polynomial<K> resultant(const Polynomial<K>& f, const Polynomial<K>& g, const std::string& var) {
  if (!f.has_var(var) && !g.has_var(var)) throw std::invalid_argument("variable absent: " + var);
  if (f.vars() != g.vars()) throw std::invalid_argument("polynomial variable lists differ");
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
  const auto& vars = f.vars();
  int m = f.degree(var), n = g.degree(var);
  int size = m + n;
  if (size == 0) return Polynomial<K>::constant(vars, K(1));
  using P = Polynomial<K>;
  std::vector<std::vector<P>> mat(size, std::vector<P>(size, P(vars)));
  // rows 0..n-1 hold shifted copies of f, rows n..n+m-1 of g; leading coefficient first.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) mat[i][i + (m - k)] = f.coefficient(var, k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) mat[n + i][i + (n - k)] = g.coefficient(var, k);

  P prev = P::constant(vars, K(1));
  bool negate = false;
  for (int k = 0; k < size - 1; ++k) {
    if (mat[k][k].is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < size; ++i)
        if (!mat[i][k].is_zero()) {
          swap = i;
          break;
        }
      if (swap < 0) return P(vars);
      std::swap(mat[k], mat[swap]);
      negate = !negate;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j) {
        P num = mat[i][j] * mat[k][k] - mat[i][k] * mat[k][j];
        auto q = num.divide_exact(prev);
        if (!q) throw std::logic_error("Bareiss step not exact");
        mat[i][j] = std::move(*q);
      }
    prev = mat[k][k];
    for (int i = k + 1; i < size; ++i) mat[i][k] = P(vars);
  }
  P det = mat[size - 1][size - 1];
  return negate ? -det : det;
}

/// disc_y(f) = (-1)^{d(d-1)/2} res(f, df/dy, y) / lc_y(f).
template <class K>
Polynomial<K> discriminant(const Polynomial<K>& f, const std::string& var) {
  int d = f.degree(var);
  if (d <= 0) throw std::invalid_argument("polynomial constant in " + var);
  Polynomial<K> res = resultant(f, f.derivative(var), var);
  auto q = res.divide_exact(f.coefficient(var, d));
  if (!q) throw std::logic_error("resultant not divisible by leading coefficient");
  return ((d * (d - 1) / 2) % 2) ? -*q : *q;
}

template <class K>
Polynomial<K> discriminant_y(const Polynomial<K>& f) {
  return discriminant(f, "y");
}

}  // namespace sextic
