#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/algebra/upoly.hpp"
#include "sextic/curves/sections.hpp"

namespace sextic {

using NUPoly = UPoly<Number>;

/// A root of the intersection polynomial. Roots in the base field are kept
/// exactly; the others are tagged by their squarefree factor and, when real,
/// an isolating rational interval.
struct AlgebraicRoot {
  NUPoly factor;  // squarefree, the root is one of its zeros
  std::optional<Number> exact;
  std::optional<RootInterval> interval;  // empty for non-real roots
  double approx = 0;  // real roots only

  bool real() const { return exact.has_value() || interval.has_value(); }
  std::string to_string() const;
};

struct DivisorEntry {
  AlgebraicRoot t;
  int multiplicity = 0;
  bool at_cusp = false;              // t = 0
  bool at_vertical_tangent = false;  // t = -2r/3
  /// x_t; exact when t is.
  std::optional<Number> x_exact;
  double x_approx = 0;
};

struct IntersectionDivisor {
  std::vector<DivisorEntry> entries;  // real roots by increasing t, then non-real factors

  int total() const;
  /// Multiplicities sorted in decreasing order, e.g. {4, 1, 1}.
  std::vector<int> pattern() const;
  const DivisorEntry* at(const Number& t) const;
  int multiplicity_at(const Number& t) const;
  int cusp_multiplicity() const;
  bool meets_vertical_tangent() const;
  bool all_real() const;
};

/// P(t) = s(x_t) - y_t = a x_t^2 + b x_t + c + t^2, of degree six.
NUPoly intersection_polynomial(const Section& s, const TrigonalCurve& curve);

IntersectionDivisor intersection_divisor(const Section& s, const TrigonalCurve& curve);

std::string upoly_to_string(const NUPoly& p, const std::string& var = "t");

}  // namespace sextic
