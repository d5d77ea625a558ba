#pragma once

#include <string>

#include "sextic/curves/trigonal.hpp"

namespace sextic {

/// A section y = s(x) = a x^2 + b x + c of the Hirzebruch surface, a != 0.
struct Section {
  Number a, b, c;

  Section(Number a_, Number b_, Number c_);
  Number operator()(const Number& x) const { return (a * x + b) * x + c; }
  std::string to_string() const;  // "(a, b, c)"
  friend bool operator==(const Section&, const Section&) = default;
};

/// Sections tangent to the curve at the smooth point of parameter t.
/// The free coefficient a is kept; t must avoid 0 and -2r/3.
Section tangent_section(const TrigonalCurve& curve, const Number& t, const Number& a);

/// The unique section tangent at t and at a second point. Requires t != 0, -r/6, -2r/3.
Section double_tangent_section(const TrigonalCurve& curve, const Number& t);

/// The section with a third order contact at t. Requires t != 0, -2r/3.
Section inflection_section(const TrigonalCurve& curve, const Number& t);

/// The section through the cusp tangent at t. Requires t != 0, -r, -2r/3.
Section cusp_tangent_section(const TrigonalCurve& curve, const Number& t);

/// Limit of the double tangent family as both points merge at t = -r/6:
/// a single point of contact order four.
Section quadruple_section(const TrigonalCurve& curve);

/// The section through the cusp whose contact there is the largest
/// possible: c = 0 and b = -1/r, with a free.
Section cusp_flex_section(const TrigonalCurve& curve, const Number& a);

}  // namespace sextic
