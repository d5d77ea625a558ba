#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sextic/algebra/polynomial.hpp"

namespace sextic {

/// Dense univariate polynomial, coefficients low to high, no trailing zeros.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> c) : c_(std::move(c)) { trim(); }

  static UPoly monomial(const K& c, int k) {
    std::vector<K> v(k + 1, K(0));
    v[k] = c;
    return UPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  K operator[](int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : K(0); }
  K lead() const { return c_.empty() ? K(0) : c_.back(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UPoly(std::move(r));
  }
  UPoly operator-() const {
    std::vector<K> r = c_;
    for (auto& x : r) x = -x;
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UPoly(std::move(r));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<K> r = c_;
    int dd = d.degree();
    if (degree() < dd) return {UPoly(), *this};
    std::vector<K> q(degree() - dd + 1, K(0));
    K inv = K(1) / d.lead();
    for (int k = degree() - dd; k >= 0; --k) {
      K coef = r[k + dd] * inv;
      q[k] = coef;
      if (is_zero_value(coef)) continue;
      for (int j = 0; j <= dd; ++j) r[k + j] -= coef * d.c_[j];
    }
    r.resize(dd);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<K> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(static_cast<long>(i)) * c_[i];
    return UPoly(std::move(r));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    K inv = K(1) / lead();
    std::vector<K> r = c_;
    for (auto& x : r) x *= inv;
    return UPoly(std::move(r));
  }

  template <class V>
  V operator()(const V& x) const {
    V acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + V(c_[i]);
    return acc;
  }

 private:
  static bool is_zero_value(const K& x) { return sextic::is_zero(x); }
  void trim() {
    while (!c_.empty() && sextic::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
UPoly<K> exact_quotient(const UPoly<K>& a, const UPoly<K>& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial quotient");
  return q;
}

/// Yun's algorithm: list of (squarefree factor, multiplicity), nonconstant factors only.
template <class K>
std::vector<std::pair<UPoly<K>, int>> squarefree_decomposition(const UPoly<K>& f) {
  std::vector<std::pair<UPoly<K>, int>> out;
  if (f.degree() <= 0) return out;
  UPoly<K> fp = f.derivative();
  UPoly<K> a = gcd(f, fp);
  UPoly<K> b = exact_quotient(f, a);
  UPoly<K> c = exact_quotient(fp, a);
  UPoly<K> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UPoly<K> g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

/// Polynomial in a single variable extracted from a multivariate one.
template <class K>
UPoly<K> to_univariate(const Polynomial<K>& p, const std::string& var) {
  int i = p.index_of(var);
  int d = std::max(p.degree(var), 0);
  std::vector<K> c(d + 1, K(0));
  for (const auto& [e, coef] : p.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (static_cast<int>(j) != i && e[j] != 0) throw std::invalid_argument("not univariate in " + var);
    c[e[i]] += coef;
  }
  return UPoly<K>(std::move(c));
}

template <class K>
Polynomial<K> from_univariate(const UPoly<K>& u, const std::vector<std::string>& vars, const std::string& var) {
  Polynomial<K> p(vars);
  int i = p.index_of(var);
  for (int k = 0; k <= u.degree(); ++k) {
    std::vector<int> e(vars.size(), 0);
    e[i] = k;
    p.add_term(e, u[k]);
  }
  return p;
}

/// Closed interval [lo, hi] with rational ends; lo == hi marks an exact root.
struct RootInterval {
  Rational lo, hi;
};

/// Sturm sequence root counting and isolation for squarefree p over an
/// ordered field (Rational or QuadraticNumber).
template <class K>
class SturmChain {
 public:
  explicit SturmChain(const UPoly<K>& p) {
    seq_.push_back(p);
    if (p.degree() <= 0) return;
    seq_.push_back(p.derivative());
    while (seq_.back().degree() > 0) {
      auto r = seq_[seq_.size() - 2].divmod(seq_.back()).second;
      if (r.is_zero()) break;
      seq_.push_back(-r);
    }
  }

  int sign_changes(const Rational& x) const {
    int changes = 0, prev = 0;
    for (const auto& q : seq_) {
      int s = sextic::sign(q(K(x)));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++changes;
      prev = s;
    }
    return changes;
  }

  /// Number of distinct roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return sign_changes(lo) - sign_changes(hi); }

  /// Cauchy-type bound: every real root lies in (-B, B).
  Rational bound() const {
    const auto& p = seq_.front();
    Rational m = 0;
    double lead = std::abs(sextic::to_double(p.lead()));
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(std::abs(sextic::to_double(p[i])) / lead));
    Rational b = m + 2;
    b = Rational(Integer(b.get_num() / b.get_den()) + 1);
    return b;
  }

  std::vector<RootInterval> isolate() const {
    std::vector<RootInterval> out;
    if (seq_.front().degree() <= 0) return out;
    Rational b = bound();
    split(-b, b, out);
    return out;
  }

  /// Shrink an isolating interval until hi - lo < width.
  RootInterval refine(RootInterval iv, const Rational& width) const {
    const auto& p = seq_.front();
    while (iv.hi - iv.lo >= width) {
      Rational mid = (iv.lo + iv.hi) / 2;
      int sm = sextic::sign(p(K(mid)));
      if (sm == 0) return {mid, mid};
      if (count(iv.lo, mid) > 0)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
    return iv;
  }

 private:
  void split(const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) const {
    int n = count(lo, hi);
    if (n == 0) return;
    if (n == 1) {
      if (sextic::sign(seq_.front()(K(hi))) == 0)
        out.push_back({hi, hi});
      else
        out.push_back({lo, hi});
      return;
    }
    Rational mid = (lo + hi) / 2;
    split(lo, mid, out);
    split(mid, hi, out);
  }
  std::vector<UPoly<K>> seq_;
};

}  // namespace sextic
