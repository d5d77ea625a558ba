#include "sextic/monodromy/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sextic {

FiberPolynomial::FiberPolynomial(std::vector<std::vector<Complex>> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && std::all_of(c_.back().begin(), c_.back().end(), [](Complex z) { return z == 0.0; }))
    c_.pop_back();
  if (c_.size() < 2) throw std::invalid_argument("fiber polynomial must have positive degree in y");
}

FiberPolynomial FiberPolynomial::from_polynomial(const NPoly& f) {
  int ix = f.index_of("x"), iy = f.index_of("y");
  std::vector<std::vector<Complex>> c(f.degree("y") + 1, std::vector<Complex>(std::max(f.degree("x"), 0) + 1, 0.0));
  for (const auto& [e, v] : f.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (static_cast<int>(i) != ix && static_cast<int>(i) != iy && e[i] != 0)
        throw std::invalid_argument("fiber polynomial in variables other than x, y");
    c[e[iy]][e[ix]] += v.to_double();
  }
  return FiberPolynomial(std::move(c));
}

std::vector<Complex> FiberPolynomial::at(Complex x) const {
  std::vector<Complex> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) out[k] = horner(c_[k], x);
  return out;
}

FiberPolynomial FiberPolynomial::recentered(double x0, int k) const {
  int d = degree();
  std::vector<std::vector<Complex>> out(d + 1);
  for (int m = 0; m <= d; ++m) {
    int w = k * (d - m);
    if (static_cast<int>(c_[m].size()) - 1 > w) {
      for (std::size_t j = w + 1; j < c_[m].size(); ++j)
        if (c_[m][j] != 0.0) throw std::invalid_argument("coefficient degree exceeds the Sigma_k bound");
    }
    // x'^w c_m(x0 + 1/x') = sum_j a_j (1 + x0 x')^j x'^(w - j)
    out[m].assign(w + 1, 0.0);
    for (std::size_t j = 0; j < c_[m].size() && static_cast<int>(j) <= w; ++j) {
      double binom = 1;
      for (std::size_t i = 0; i <= j; ++i) {
        // term binom(j, i) x0^i x'^(i + w - j)
        out[m][i + w - j] += c_[m][j] * binom * std::pow(x0, static_cast<double>(i));
        binom = binom * static_cast<double>(j - i) / static_cast<double>(i + 1);
      }
    }
  }
  return FiberPolynomial(std::move(out));
}

Complex FiberPolynomial::operator()(Complex x, Complex y) const { return horner(at(x), y); }

Complex horner(const std::vector<Complex>& c, Complex y) {
  Complex acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * y + c[i];
  return acc;
}

bool residual_ok(const std::vector<Complex>& c, Complex y, double tol) {
  double scale = 0, ay = std::abs(y), p = 1;
  for (const auto& ck : c) {
    scale += std::abs(ck) * p;
    p *= ay;
  }
  return std::abs(horner(c, y)) <= tol * std::max(scale, 1e-300);
}

std::vector<Complex> polynomial_roots(const std::vector<Complex>& c, bool* ok) {
  int n = static_cast<int>(c.size()) - 1;
  while (n > 0 && c[n] == 0.0) --n;
  if (n <= 0) throw std::invalid_argument("constant polynomial has no roots");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -c[i] / c[n];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalue solver failed");
  std::vector<Complex> roots(n), d(n);
  for (int k = 1; k <= n; ++k) d[k - 1] = static_cast<double>(k) * c[k];
  bool good = true;
  for (int i = 0; i < n; ++i) {
    Complex y = solver.eigenvalues()[i];
    for (int it = 0; it < 4; ++it) {
      Complex fp = horner(d, y);
      if (fp == 0.0) break;
      Complex step = horner(c, y) / fp;
      y -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(y))) break;
    }
    roots[i] = y;
    good = good && residual_ok(c, y);
  }
  if (ok) *ok = good;
  return roots;
}

std::vector<Complex> polynomial_roots_mp(const std::vector<Complex>& c, int bits, const std::vector<Complex>& guess) {
  using boost::multiprecision::mpfr_float;
  struct Z {
    mpfr_float re, im;
  };
  auto add = [](const Z& a, const Z& b) { return Z{a.re + b.re, a.im + b.im}; };
  auto sub = [](const Z& a, const Z& b) { return Z{a.re - b.re, a.im - b.im}; };
  auto mul = [](const Z& a, const Z& b) { return Z{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; };
  auto div = [](const Z& a, const Z& b) {
    mpfr_float d = b.re * b.re + b.im * b.im;
    return Z{(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  };
  auto norm = [](const Z& a) { return a.re * a.re + a.im * a.im; };

  mpfr_float::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2);
  int n = static_cast<int>(c.size()) - 1;
  while (n > 0 && c[n] == 0.0) --n;
  if (n <= 0) throw std::invalid_argument("constant polynomial has no roots");
  std::vector<Z> a(n + 1), da(n);
  for (int k = 0; k <= n; ++k) a[k] = {mpfr_float(c[k].real()), mpfr_float(c[k].imag())};
  for (int k = 1; k <= n; ++k) da[k - 1] = mul(Z{mpfr_float(k), mpfr_float(0)}, a[k]);
  auto eval = [&](const std::vector<Z>& p, const Z& z) {
    Z acc{mpfr_float(0), mpfr_float(0)};
    for (std::size_t i = p.size(); i-- > 0;) acc = add(mul(acc, z), p[i]);
    return acc;
  };
  std::vector<Z> z(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(guess.size()) == n) {
      z[i] = {mpfr_float(guess[i].real()), mpfr_float(guess[i].imag())};
    } else {
      double ang = 2 * std::numbers::pi * (i + 0.25) / n;
      z[i] = {mpfr_float(std::cos(ang)), mpfr_float(std::sin(ang))};
    }
  }
  mpfr_float eps = boost::multiprecision::pow(mpfr_float(2), -bits);
  for (int it = 0; it < 500; ++it) {
    mpfr_float worst(0);
    for (int i = 0; i < n; ++i) {
      Z fp = eval(da, z[i]);
      Z f = eval(a, z[i]);
      if (norm(fp) == 0) continue;
      Z ratio = div(f, fp);
      Z s{mpfr_float(0), mpfr_float(0)};
      for (int j = 0; j < n; ++j)
        if (j != i) s = add(s, div(Z{mpfr_float(1), mpfr_float(0)}, sub(z[i], z[j])));
      Z denom = sub(Z{mpfr_float(1), mpfr_float(0)}, mul(ratio, s));
      Z w = norm(denom) == 0 ? ratio : div(ratio, denom);
      z[i] = sub(z[i], w);
      mpfr_float rel = norm(w) / (1 + norm(z[i]));
      if (rel > worst) worst = rel;
    }
    if (worst < eps * eps) break;
  }
  std::vector<Complex> out(n);
  for (int i = 0; i < n; ++i) out[i] = {z[i].re.convert_to<double>(), z[i].im.convert_to<double>()};
  return out;
}

}  // namespace sextic
