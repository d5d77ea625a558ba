#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sextic/algebra/singularity.hpp"
#include "sextic/curves/divisor.hpp"

namespace sextic {

struct Classification {
  SingularitySet set;
  /// The section meets the vertical tangency point, or r = 0; `set` is then
  /// what the generic rules give and should not be trusted.
  bool degenerate = false;
  std::string note;
};

/// Inner part: two E6 points over the E6 point at infinity, and over the
/// cusp two A2 (c != 0), one A5 (c = 0, b != -1/r) or one E6 (c = 0, b = -1/r).
/// Outer part: one A_{p-1} for every p-fold intersection at a smooth point.
Classification classify_sextic(const Section& s, const TrigonalCurve& curve);

enum class FiberKind { Cusp, VerticalTangent, Intersection };

struct SingularFiber {
  FiberKind kind = FiberKind::Intersection;
  std::optional<Number> x_exact;
  double x = 0;
  /// Intersection multiplicity of the section inside this fiber (0 if it does not meet it there).
  int multiplicity = 0;
  std::string label;  // "tangency x=2", "cusp x=0", ...
};

struct FiberList {
  std::vector<SingularFiber> fibers;  // sorted by x
  bool nonreal = false;               // some intersection point has non-real x

  std::vector<double> positions() const;
};

/// Real singular fibers of the curve plus the section in the affine chart.
FiberList singular_fibers(const Section& s, const TrigonalCurve& curve);

/// The plane sextic f_r(x, y^2 + s(x)) over the variables (x, y).
NPoly sextic_equation(const Section& s, const TrigonalCurve& curve);

/// f_r(x, Y) = Y^3 + (rY + x)^2 identically.
bool verify_torus_structure(const TrigonalCurve& curve);

std::string intersection_label(int multiplicity);

}  // namespace sextic
