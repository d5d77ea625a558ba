#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sextic/curves/classify.hpp"
#include "sextic/groups/presentation.hpp"
#include "sextic/groups/vankampen.hpp"
#include "sextic/monodromy/track.hpp"

namespace sextic {

/// A d-gonal curve in Sigma_k given by f(x, y), its real singular fibers
/// and the base fiber x = base.
struct FiberConfiguration {
  FiberPolynomial f;
  int k = 2;
  std::vector<double> fibers;             // sorted
  std::vector<std::string> fiber_labels;  // parallel to fibers
  double base = 0;
  /// Level of the constant section: exceeds every root modulus met on the loops.
  double level = 0;
  /// Generator names by strand position at the base fiber (decreasing y).
  std::vector<std::string> names;
  double detour_scale = 0.25;  // detour radius as a fraction of the distance to the nearest other fiber

  int degree() const { return f.degree(); }
  double detour_radius(std::size_t i) const;
};

/// Generic configuration; the base point defaults to half the smallest
/// positive fiber (or 1 to the right of the last one if none is positive).
FiberConfiguration make_configuration(FiberPolynomial f, int k, std::vector<double> fibers,
                                      std::vector<std::string> labels = {}, std::optional<double> base = {});

/// The 4-gonal curve f_r (y - s(x)) in Sigma_2 with its singular fibers.
/// Strands at the base fiber are named alpha, beta, gamma in decreasing y,
/// and delta for the section. Throws if a singular fiber is not real.
FiberConfiguration section_configuration(const Section& s, const TrigonalCurve& curve);

/// The same curve in the chart x = x0 + 1/x', y = y'/x'^k. The fiber at
/// infinity becomes the fiber x' = 0 and fiber x_i moves to 1/(x_i - x0).
/// Use it when the fiber at infinity is singular. The fiber x = x0 must be nonsingular.
FiberConfiguration recentered_configuration(const FiberConfiguration& c, double x0);
/// The loop about fibers[i]: a real path from the base point, dodging the
/// fibers in between by counterclockwise half-turns, then a full
/// counterclockwise circle.
Path approach_path(const FiberConfiguration& c, std::size_t i);
Path loop_circle(const FiberConfiguration& c, std::size_t i);

Braid local_braid(const FiberConfiguration& c, std::size_t i, const TrackOptions& opt = {});
Braid local_braid(const FiberConfiguration& c, double fiber, const TrackOptions& opt = {});

struct MonodromyData {
  FiberConfiguration config;
  std::vector<LabeledBraid> braids;  // one per fiber, left to right
  /// Loop indices in the counterclockwise order whose product is the
  /// boundary of the disk: fibers right of the base point from the far
  /// end inward, then those left of it from the far end inward.
  std::vector<int> boundary_order;

  Braid boundary_braid() const;
  /// The boundary braid acts as conjugation by (z_1 ... z_d)^k.
  bool infinity_check() const;
  int delta_index() const;  // position of "delta", or -1
};

MonodromyData braid_monodromy(const FiberConfiguration& c, const TrackOptions& opt = {});

/// Presentation of the group of the curve: braid relations and the relation at infinity.
Presentation monodromy_presentation(const MonodromyData& m);

/// Standard basis at the nonsingular fiber `target`, transported along the
/// real axis with the same detours, as words in the base basis.
std::map<std::string, Word> basis_transport(const FiberConfiguration& c, double target,
                                            const std::vector<std::string>& target_names, const TrackOptions& opt = {});

std::string monodromy_json(const MonodromyData& m);
/// Reads the braid list and names back; the fiber polynomial is not part of the format.
MonodromyData monodromy_from_json(const std::string& text);

}  // namespace sextic
