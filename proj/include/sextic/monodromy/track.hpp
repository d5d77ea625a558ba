#pragma once

#include <stdexcept>
#include <vector>

#include "sextic/braids/braid.hpp"
#include "sextic/monodromy/roots.hpp"

namespace sextic {

/// A line segment or a circular arc in the x-plane, parameterized by s in [0, 1].
struct PathSegment {
  enum Kind { Line, Arc } kind = Line;
  Complex from, to;         // Line
  Complex center;           // Arc
  double radius = 0, angle0 = 0, angle1 = 0;

  static PathSegment line(Complex a, Complex b) { return {Line, a, b, 0, 0, 0, 0}; }
  /// Arc from angle a0 to a1 (counterclockwise when a1 > a0).
  static PathSegment arc(Complex c, double r, double a0, double a1) { return {Arc, 0, 0, c, r, a0, a1}; }
  Complex at(double s) const;
  double length() const;
  PathSegment reversed() const;
};

struct Path {
  std::vector<PathSegment> segments;

  Complex start() const { return segments.front().at(0); }
  Complex end() const { return segments.back().at(1); }
  Path& then(const PathSegment& s) {
    segments.push_back(s);
    return *this;
  }
  Path& then(const Path& p) {
    segments.insert(segments.end(), p.segments.begin(), p.segments.end());
    return *this;
  }
  Path reversed() const;
  static Path circle(Complex center, double radius, double start_angle = 0);
};

struct TrackOptions {
  double threshold = 1.0 / 3;       // max displacement < threshold * min gap
  /// Measure displacement from a secant extrapolation of the last two
  /// samples instead of from the previous roots.
  bool predictor = true;
  double floor = 0x1p-40;           // smallest step, relative to the segment
  double initial_step = 1.0 / 32;   // relative to the segment
  int precision_bits = 256;         // high-precision fallback
  double tilt = 0.1;                // projection direction for crossings, radians
};

class TrackingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Samples of a path with continuously labeled roots: roots[k][i] is root i at xs[k].
struct RootTrajectory {
  std::vector<Complex> xs;
  std::vector<std::vector<Complex>> roots;
  int fallback_steps = 0;  // steps that needed the high-precision solver

  /// Label i ends where label perm[i] started (nearest initial root).
  Permutation permutation() const;
};

RootTrajectory track_roots(const FiberPolynomial& f, const Path& path, const TrackOptions& opt = {});
/// Starts from known roots at path.start(), so consecutive runs keep their labels.
RootTrajectory track_roots(const FiberPolynomial& f, const Path& path, std::vector<Complex> start, const TrackOptions& opt = {});

/// Braid word of a trajectory. Strands are numbered by decreasing
/// u = Re(y e^{-i tilt}); a crossing where the strand leaving position j has
/// the larger v = Im(y e^{-i tilt}) is s_j, otherwise s_j^-1.
Braid braid_of(const RootTrajectory& t, double tilt);

/// Root labels sorted by decreasing u.
std::vector<int> projection_order(const std::vector<Complex>& roots, double tilt);

}  // namespace sextic
