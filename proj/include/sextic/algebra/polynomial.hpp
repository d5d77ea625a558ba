#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sextic/algebra/quadratic.hpp"
#include "sextic/algebra/rational.hpp"

namespace sextic {

/// Monomial order used both for printing and for division: higher total
/// degree first, ties broken by the exponent of the last variable, then the
/// one before it, and so on.
struct TermOrder {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = 0, db = 0;
    for (int e : a) da += e;
    for (int e : b) db += e;
    if (da != db) return da > db;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] > b[i];
    return false;
  }
};

/// Sparse multivariate polynomial over an exact field K.
template <class K>
class Polynomial {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, K, TermOrder>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Polynomial constant(const std::vector<std::string>& vars, const K& c) {
    Polynomial p(vars);
    if (!sextic::is_zero(c)) p.terms_[Exponents(vars.size(), 0)] = c;
    return p;
  }
  static Polynomial variable(const std::vector<std::string>& vars, const std::string& name) {
    Polynomial p(vars);
    Exponents e(vars.size(), 0);
    e[p.index_of(name)] = 1;
    p.terms_[e] = K(1);
    return p;
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  int index_of(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable " + name);
    return static_cast<int>(it - vars_.begin());
  }
  bool has_var(const std::string& name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }

  void add_term(const Exponents& e, const K& c) {
    if (sextic::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (sextic::is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_vars(b);
    Polynomial r(a.vars_);
    Exponents e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  friend Polynomial operator*(const K& s, const Polynomial& p) {
    Polynomial r(p.vars_);
    if (sextic::is_zero(s)) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned n) const {
    Polynomial r = constant(vars_, K(1)), base = *this;
    while (n) {
      if (n & 1u) r *= base;
      n >>= 1u;
      if (n) base *= base;
    }
    return r;
  }

  int degree(const std::string& var) const {
    int i = index_of(var), d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  /// Coefficient of var^k, as a polynomial in the remaining variables.
  Polynomial coefficient(const std::string& var, int k) const {
    int i = index_of(var);
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
      if (e[i] == k) {
        Exponents f = e;
        f[i] = 0;
        r.terms_.emplace(f, c);
      }
    return r;
  }

  Polynomial derivative(const std::string& var) const {
    int i = index_of(var);
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        Exponents f = e;
        f[i] -= 1;
        r.add_term(f, K(static_cast<long>(e[i])) * c);
      }
    return r;
  }

  /// Replace var by q (q must use the same variable list).
  Polynomial substitute(const std::string& var, const Polynomial& q) const {
    check_vars(q);
    int i = index_of(var);
    int d = std::max(degree(var), 0);
    std::vector<Polynomial> powers{constant(vars_, K(1))};
    for (int k = 1; k <= d; ++k) powers.push_back(powers.back() * q);
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
      Polynomial mono(vars_);
      Exponents f = e;
      f[i] = 0;
      mono.terms_.emplace(f, c);
      r += mono * powers[e[i]];
    }
    return r;
  }

  Polynomial evaluate(const std::string& var, const K& value) const {
    return substitute(var, constant(vars_, value));
  }

  /// Constant term value; throws when the polynomial is not constant.
  K constant_value() const {
    if (terms_.empty()) return K(0);
    if (terms_.size() != 1 || total_degree() != 0) throw std::logic_error("not a constant");
    return terms_.begin()->second;
  }
  bool is_constant() const { return terms_.empty() || total_degree() == 0; }

  const std::pair<const Exponents, K>& leading() const { return *terms_.begin(); }

  /// Exact division; nullopt when q does not divide *this.
  std::optional<Polynomial> divide_exact(const Polynomial& q) const {
    check_vars(q);
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial rem = *this, quo(vars_);
    const auto& [lq, cq] = q.leading();
    while (!rem.is_zero()) {
      const auto& [lr, cr] = rem.leading();
      Exponents e(vars_.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = lr[i] - lq[i];
        if (e[i] < 0) return std::nullopt;
      }
      K c = cr / cq;
      Polynomial mono(vars_);
      mono.terms_.emplace(e, c);
      quo.terms_.emplace(e, c);
      rem -= mono * q;
    }
    return quo;
  }

  /// Same polynomial over a (super)set of variable names.
  Polynomial with_vars(const std::vector<std::string>& vars) const {
    std::vector<int> map(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      auto it = std::find(vars.begin(), vars.end(), vars_[i]);
      if (it == vars.end()) {
        for (const auto& [e, c] : terms_)
          if (e[i] != 0) throw std::invalid_argument("variable dropped: " + vars_[i]);
        map[i] = -1;
      } else {
        map[i] = static_cast<int>(it - vars.begin());
      }
    }
    Polynomial r(vars);
    for (const auto& [e, c] : terms_) {
      Exponents f(vars.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (map[i] >= 0) f[map[i]] = e[i];
      r.add_term(f, c);
    }
    return r;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool mono_empty = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
      K mag = c;
      bool neg = false;
      if (is_atomic(c) && sextic::sign(c) < 0) {
        neg = true;
        mag = -c;
      }
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += vars_[i];
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono_empty) {
        out += sextic::to_string(mag);
      } else if (is_one(mag)) {
        out += mono;
      } else {
        std::string cs = sextic::to_string(mag);
        if (!is_atomic(mag)) cs = "(" + cs + ")";
        out += cs + "*" + mono;
      }
    }
    return out;
  }

 private:
  void check_vars(const Polynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("polynomial variable lists differ");
  }
  std::vector<std::string> vars_;
  TermMap terms_;
};

using QPoly = Polynomial<Rational>;
using KPoly = Polynomial<QuadraticNumber>;

/// Coefficient-wise conversion Q -> Q(sqrt d).
inline KPoly lift(const QPoly& p) {
  KPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, QuadraticNumber(c));
  return r;
}

}  // namespace sextic
