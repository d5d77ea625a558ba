#pragma once

#include <string>

#include "sextic/algebra/rational.hpp"

namespace sextic {

/// a + b*sqrt(d) with rational a, b and square-free d > 1.
/// A value with b = 0 carries no radicand and mixes with any field.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Rational& v) : a_(v) {}  // NOLINT
  QuadraticNumber(const Rational& a, const Rational& b, int d);

  static QuadraticNumber sqrt_of(int d) { return {0, 1, d}; }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  int radicand() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }
  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (sgn(x.b_) == 0 || x.d_ == y.d_);
  }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
    return (x - y).sign() < 0;
  }

  /// Exact sign, decided by comparing a^2 with b^2 d when the parts disagree.
  int sign() const;
  QuadraticNumber conjugate() const;
  Rational norm() const;
  double to_double() const;
  std::string to_string() const;

 private:
  int common_radicand(const QuadraticNumber& o) const;
  Rational a_{0};
  Rational b_{0};
  int d_ = 0;
};

inline bool is_zero(const QuadraticNumber& q) { return q.sign() == 0; }
inline bool is_one(const QuadraticNumber& q) { return q.is_rational() && q.rational_part() == 1; }
inline int sign(const QuadraticNumber& q) { return q.sign(); }
inline double to_double(const QuadraticNumber& q) { return q.to_double(); }
inline std::string to_string(const QuadraticNumber& q) { return q.to_string(); }
inline bool is_atomic(const QuadraticNumber& q) {
  return q.is_rational() || sgn(q.rational_part()) == 0;
}

}  // namespace sextic
