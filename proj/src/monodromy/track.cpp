#include "sextic/monodromy/track.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace sextic {

Complex PathSegment::at(double s) const {
  if (kind == Line) return from + s * (to - from);
  double a = angle0 + s * (angle1 - angle0);
  return center + radius * Complex(std::cos(a), std::sin(a));
}

double PathSegment::length() const {
  return kind == Line ? std::abs(to - from) : radius * std::abs(angle1 - angle0);
}

PathSegment PathSegment::reversed() const {
  return kind == Line ? line(to, from) : arc(center, radius, angle1, angle0);
}

Path Path::reversed() const {
  Path p;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) p.segments.push_back(it->reversed());
  return p;
}

Path Path::circle(Complex center, double radius, double start_angle) {
  Path p;
  p.segments.push_back(PathSegment::arc(center, radius, start_angle, start_angle + 2 * std::numbers::pi));
  return p;
}

Permutation RootTrajectory::permutation() const {
  const auto& a = roots.front();
  const auto& b = roots.back();
  Permutation p(a.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < a.size(); ++j)
      if (std::abs(b[i] - a[j]) < std::abs(b[i] - a[best])) best = j;
    p[i] = static_cast<int>(best);
  }
  return p;
}

std::vector<int> projection_order(const std::vector<Complex>& roots, double tilt) {
  Complex rot = std::polar(1.0, -tilt);
  std::vector<int> idx(roots.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return (roots[a] * rot).real() > (roots[b] * rot).real(); });
  return idx;
}

namespace {

double min_gap(const std::vector<Complex>& r) {
  double g = INFINITY;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j) g = std::min(g, std::abs(r[i] - r[j]));
  return g;
}

struct Crossing {
  double when;
  int a, b;
};

// Crossings of u-order between two samples under linear interpolation.
std::vector<Crossing> crossings(const std::vector<Complex>& p, const std::vector<Complex>& q, Complex rot) {
  std::vector<Crossing> out;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      double d0 = (p[a] * rot).real() - (p[b] * rot).real();
      double d1 = (q[a] * rot).real() - (q[b] * rot).real();
      if ((d0 > 0) == (d1 > 0)) continue;
      out.push_back({d0 / (d0 - d1), static_cast<int>(a), static_cast<int>(b)});
    }
  std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) { return x.when < y.when; });
  return out;
}

// Matches each predicted root to a new one; empty when the step is not certified.
std::vector<Complex> match(const std::vector<Complex>& old, const std::vector<Complex>& pred,
                           const std::vector<Complex>& fresh, double threshold, Complex rot) {
  double gap = std::min({min_gap(old), min_gap(pred), min_gap(fresh)});
  std::vector<Complex> out(old.size());
  std::vector<bool> used(fresh.size(), false);
  double worst = 0;
  for (std::size_t i = 0; i < old.size(); ++i) {
    std::size_t best = 0;
    for (std::size_t j = 1; j < fresh.size(); ++j)
      if (std::abs(fresh[j] - pred[i]) < std::abs(fresh[best] - pred[i])) best = j;
    if (used[best]) return {};
    used[best] = true;
    out[i] = fresh[best];
    worst = std::max(worst, std::abs(fresh[best] - pred[i]));
  }
  if (!(worst < threshold * gap)) return {};
  // each pair's difference vector turns by well under a quarter turn
  for (std::size_t i = 0; i < old.size(); ++i)
    for (std::size_t j = i + 1; j < old.size(); ++j) {
      Complex before = old[i] - old[j], after = out[i] - out[j];
      if (!(std::abs(after - before) < threshold * std::abs(before))) return {};
    }
  // each crossing must swap neighbours and be decided by a v-separation larger than the motion
  std::vector<int> order = projection_order(old, -std::arg(rot));
  for (const auto& c : crossings(old, out, rot)) {
    Complex pa = old[c.a] + c.when * (out[c.a] - old[c.a]);
    Complex pb = old[c.b] + c.when * (out[c.b] - old[c.b]);
    if (std::abs((pa * rot).imag() - (pb * rot).imag()) <= 2 * worst) return {};
    auto ia = std::find(order.begin(), order.end(), c.a) - order.begin();
    auto ib = std::find(order.begin(), order.end(), c.b) - order.begin();
    if (std::abs(ia - ib) != 1) return {};
    std::swap(order[ia], order[ib]);
  }
  return out;
}

}  // namespace

RootTrajectory track_roots(const FiberPolynomial& f, const Path& path, const TrackOptions& opt) {
  bool ok = true;
  auto start = polynomial_roots(f.at(path.start()), &ok);
  if (!ok) start = polynomial_roots_mp(f.at(path.start()), opt.precision_bits, start);
  return track_roots(f, path, std::move(start), opt);
}

RootTrajectory track_roots(const FiberPolynomial& f, const Path& path, std::vector<Complex> start, const TrackOptions& opt) {
  RootTrajectory t;
  Complex rot = std::polar(1.0, -opt.tilt);
  t.xs.push_back(path.start());
  t.roots.push_back(std::move(start));
  for (const auto& seg : path.segments) {
    if (seg.length() == 0) continue;
    double s = 0, h = opt.initial_step;
    while (s < 1) {
      h = std::min(h, 1 - s);
      double next = s + h;
      Complex x = seg.at(next);
      bool ok = true;
      auto fresh = polynomial_roots(f.at(x), &ok);
      if (!ok) {
        // clustered roots: polish in high precision rather than shrinking the step
        fresh = polynomial_roots_mp(f.at(x), opt.precision_bits, fresh);
        ++t.fallback_steps;
      }
      // secant predictor through the last two samples
      std::vector<Complex> pred = t.roots.back();
      if (opt.predictor && t.xs.size() >= 2 && t.xs[t.xs.size() - 1] != t.xs[t.xs.size() - 2]) {
        Complex x1 = t.xs[t.xs.size() - 1], x0 = t.xs[t.xs.size() - 2];
        Complex ratio = (x - x1) / (x1 - x0);
        const auto& y0 = t.roots[t.roots.size() - 2];
        for (std::size_t i = 0; i < pred.size(); ++i) pred[i] += (pred[i] - y0[i]) * ratio;
      }
      auto m = match(t.roots.back(), pred, fresh, opt.threshold, rot);
      if (m.empty()) {
        if (h <= opt.floor) throw TrackingError("root tracking not certified near x = " + std::to_string(x.real()) + " + " + std::to_string(x.imag()) + "i");
        h /= 2;
        continue;
      }
      t.xs.push_back(x);
      t.roots.push_back(std::move(m));
      s = next;
      h = std::min(2 * h, opt.initial_step);
    }
  }
  return t;
}

Braid braid_of(const RootTrajectory& t, double tilt) {
  Complex rot = std::polar(1.0, -tilt);
  int n = static_cast<int>(t.roots.front().size());
  std::vector<int> order = projection_order(t.roots.front(), tilt);  // position -> label
  std::vector<int> letters;
  for (std::size_t k = 0; k + 1 < t.roots.size(); ++k) {
    const auto& p = t.roots[k];
    const auto& q = t.roots[k + 1];
    for (const auto& c : crossings(p, q, rot)) {
      int ia = static_cast<int>(std::find(order.begin(), order.end(), c.a) - order.begin());
      int ib = static_cast<int>(std::find(order.begin(), order.end(), c.b) - order.begin());
      if (std::abs(ia - ib) != 1) throw TrackingError("non-adjacent crossing; step too coarse");
      int j = std::min(ia, ib);
      int upper = order[j], lower = order[j + 1];
      Complex pu = p[upper] + c.when * (q[upper] - p[upper]);
      Complex pl = p[lower] + c.when * (q[lower] - p[lower]);
      bool positive = (pu * rot).imag() > (pl * rot).imag();
      letters.push_back(positive ? j + 1 : -(j + 1));
      std::swap(order[j], order[j + 1]);
    }
  }
  return Braid(n, std::move(letters));
}

}  // namespace sextic
