#include "sextic/algebra/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace sextic {

namespace {

bool square_free(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p)
    if (d % (p * p) == 0) return false;
  return true;
}

}  // namespace

QuadraticNumber::QuadraticNumber(const Rational& a, const Rational& b, int d) : a_(a), b_(b), d_(d) {
  if (sgn(b_) != 0 && !square_free(d_)) throw std::domain_error("radicand must be square-free and > 1");
  if (sgn(b_) == 0) d_ = 0;
}

int QuadraticNumber::common_radicand(const QuadraticNumber& o) const {
  if (sgn(b_) == 0) return o.d_;
  if (sgn(o.b_) == 0) return d_;
  if (d_ != o.d_) throw std::domain_error("mixed radicands");
  return d_;
}

QuadraticNumber QuadraticNumber::operator-() const { return {-a_, -b_, d_}; }

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  d_ = common_radicand(o);
  a_ += o.a_;
  b_ += o.b_;
  if (sgn(b_) == 0) d_ = 0;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) { return *this += -o; }

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  int d = common_radicand(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * d;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = sgn(b_) == 0 ? 0 : d;
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero");
  QuadraticNumber inv = o.conjugate();
  inv.a_ /= n;
  inv.b_ /= n;
  return *this *= inv;
}

int QuadraticNumber::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // opposite signs: compare |a| with |b| sqrt(d)
  Rational lhs = a_ * a_, rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

QuadraticNumber QuadraticNumber::conjugate() const { return {a_, -b_, d_}; }

Rational QuadraticNumber::norm() const { return a_ * a_ - b_ * b_ * d_; }

double QuadraticNumber::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

std::string QuadraticNumber::to_string() const {
  if (sgn(b_) == 0) return a_.get_str();
  std::string rad = "sqrt(" + std::to_string(d_) + ")";
  std::string bpart;
  Rational ab = abs(b_);
  if (ab == 1) {
    bpart = rad;
  } else {
    bpart = ab.get_str() + "*" + rad;
  }
  if (sgn(a_) == 0) return (sgn(b_) < 0 ? "-" : "") + bpart;
  return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + bpart;
}

}  // namespace sextic
