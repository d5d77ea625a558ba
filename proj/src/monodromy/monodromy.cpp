#include "sextic/monodromy/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sextic {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> base_roots(const FiberConfiguration& c, const TrackOptions& opt) {
  bool ok = true;
  auto r = polynomial_roots(c.f.at(c.base), &ok);
  if (!ok) r = polynomial_roots_mp(c.f.at(c.base), opt.precision_bits, r);
  return r;
}

// Real path from `from` to `to` passing every fiber strictly in between by a
// counterclockwise half-turn: below when heading right, above when heading left.
Path real_path(const FiberConfiguration& c, double from, double to, double stop_short) {
  Path p;
  Complex cur = from;
  if (to > from) {
    for (std::size_t j = 0; j < c.fibers.size(); ++j) {
      double x = c.fibers[j];
      if (x <= from || x >= to) continue;
      double rj = c.detour_radius(j);
      p.then(PathSegment::line(cur, x - rj)).then(PathSegment::arc(x, rj, kPi, 2 * kPi));
      cur = x + rj;
    }
    p.then(PathSegment::line(cur, to - stop_short));
  } else {
    for (std::size_t j = c.fibers.size(); j-- > 0;) {
      double x = c.fibers[j];
      if (x >= from || x <= to) continue;
      double rj = c.detour_radius(j);
      p.then(PathSegment::line(cur, x + rj)).then(PathSegment::arc(x, rj, 0, kPi));
      cur = x - rj;
    }
    p.then(PathSegment::line(cur, to + stop_short));
  }
  return p;
}

Word rho_power(int d, int k) {
  Word rho;
  for (int j = 1; j <= d; ++j) rho.push_back(j);
  return power(rho, k);
}

}  // namespace

double FiberConfiguration::detour_radius(std::size_t i) const {
  double x = fibers[i], gap = INFINITY;
  for (std::size_t j = 0; j < fibers.size(); ++j)
    if (j != i) gap = std::min(gap, std::abs(fibers[j] - x));
  if (!std::isfinite(gap)) gap = 2 * std::abs(x - base);
  return std::min(detour_scale * gap, 0.5 * std::abs(x - base));
}

FiberConfiguration make_configuration(FiberPolynomial f, int k, std::vector<double> fibers,
                                      std::vector<std::string> labels, std::optional<double> base) {
  FiberConfiguration c;
  c.f = std::move(f);
  c.k = k;
  std::vector<std::size_t> idx(fibers.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return fibers[a] < fibers[b]; });
  for (auto i : idx) {
    c.fibers.push_back(fibers[i]);
    c.fiber_labels.push_back(i < labels.size() ? labels[i] : "fiber x=" + std::to_string(fibers[i]));
  }
  if (base) {
    c.base = *base;
  } else {
    auto pos = std::find_if(c.fibers.begin(), c.fibers.end(), [](double x) { return x > 0; });
    c.base = pos != c.fibers.end() ? *pos / 2 : (c.fibers.empty() ? 0.0 : c.fibers.back() + 1);
  }
  if (std::find(c.fibers.begin(), c.fibers.end(), c.base) != c.fibers.end())
    throw std::invalid_argument("base point on a singular fiber");
  for (int j = 1; j <= c.degree(); ++j) c.names.push_back("z" + std::to_string(j));
  return c;
}

FiberConfiguration section_configuration(const Section& s, const TrigonalCurve& curve) {
  FiberList list = singular_fibers(s, curve);
  if (list.nonreal) throw std::domain_error("non-real singular fiber; loop system unsupported");
  std::vector<double> xs;
  std::vector<std::string> labels;
  for (const auto& f : list.fibers) {
    xs.push_back(f.x);
    labels.push_back(f.label);
  }
  std::vector<std::string> v{"x", "y"};
  NPoly x = NPoly::variable(v, "x"), y = NPoly::variable(v, "y");
  NPoly line = y - (s.a * x.pow(2) + s.b * x + NPoly::constant(v, s.c));
  FiberConfiguration c = make_configuration(FiberPolynomial::from_polynomial(curve.equation() * line), 2, xs, labels);
  // name the strands: delta is the section, the trigonal branches alpha, beta, gamma from the top
  auto roots = polynomial_roots(c.f.at(c.base));
  auto order = projection_order(roots, 0.0);
  double ys = s(Number(Rational(c.base))).to_double();
  std::size_t delta = 0;
  for (std::size_t p = 1; p < order.size(); ++p)
    if (std::abs(roots[order[p]] - ys) < std::abs(roots[order[delta]] - ys)) delta = p;
  const char* greek[] = {"alpha", "beta", "gamma"};
  int g = 0;
  for (std::size_t p = 0; p < order.size(); ++p) c.names[p] = p == delta ? "delta" : greek[g++];
  return c;
}

FiberConfiguration recentered_configuration(const FiberConfiguration& c, double x0) {
  std::vector<double> xs{0.0};
  std::vector<std::string> labels{"fiber at infinity"};
  for (std::size_t i = 0; i < c.fibers.size(); ++i) {
    if (c.fibers[i] == x0) throw std::invalid_argument("recentering point is a singular fiber");
    xs.push_back(1 / (c.fibers[i] - x0));
    labels.push_back(c.fiber_labels[i]);
  }
  return make_configuration(c.f.recentered(x0, c.k), c.k, std::move(xs), std::move(labels));
}

Path approach_path(const FiberConfiguration& c, std::size_t i) {
  return real_path(c, c.base, c.fibers[i], c.detour_radius(i));
}

Path loop_circle(const FiberConfiguration& c, std::size_t i) {
  double x = c.fibers[i];
  return Path::circle(x, c.detour_radius(i), x > c.base ? kPi : 0.0);
}

Braid local_braid(const FiberConfiguration& c, std::size_t i, const TrackOptions& opt) {
  RootTrajectory in = track_roots(c.f, approach_path(c, i), base_roots(c, opt), opt);
  RootTrajectory around = track_roots(c.f, loop_circle(c, i), in.roots.back(), opt);
  Braid tau = braid_of(in, opt.tilt);
  return (tau * braid_of(around, opt.tilt) * tau.inverse()).reduced();
}

Braid local_braid(const FiberConfiguration& c, double fiber, const TrackOptions& opt) {
  for (std::size_t i = 0; i < c.fibers.size(); ++i)
    if (c.fibers[i] == fiber) return local_braid(c, i, opt);
  throw std::invalid_argument("not a singular fiber of the configuration");
}

Braid MonodromyData::boundary_braid() const {
  Braid b(config.degree());
  for (int i : boundary_order) b = b * braids[i].braid;
  return b;
}

bool MonodromyData::infinity_check() const {
  int d = config.degree();
  Braid b = boundary_braid();
  Word rho = rho_power(d, config.k);
  for (int j = 1; j <= d; ++j)
    if (artin_act(b, {j}) != free_reduce(concat(concat(rho, {j}), inverse(rho)))) return false;
  return true;
}

int MonodromyData::delta_index() const {
  auto it = std::find(config.names.begin(), config.names.end(), "delta");
  return it == config.names.end() ? -1 : static_cast<int>(it - config.names.begin());
}

MonodromyData braid_monodromy(const FiberConfiguration& c, const TrackOptions& opt) {
  MonodromyData m;
  m.config = c;
  auto start = base_roots(c, opt);
  double level = 0;
  for (std::size_t i = 0; i < c.fibers.size(); ++i) {
    RootTrajectory in = track_roots(c.f, approach_path(c, i), start, opt);
    RootTrajectory around = track_roots(c.f, loop_circle(c, i), in.roots.back(), opt);
    for (const auto* t : {&in, &around})
      for (const auto& rs : t->roots)
        for (auto y : rs) level = std::max(level, std::abs(y));
    Braid tau = braid_of(in, opt.tilt);
    m.braids.push_back({c.fiber_labels[i], (tau * braid_of(around, opt.tilt) * tau.inverse()).reduced()});
  }
  m.config.level = 2 * level + 1;
  for (std::size_t i = c.fibers.size(); i-- > 0;)
    if (c.fibers[i] > c.base) m.boundary_order.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < c.fibers.size(); ++i)
    if (c.fibers[i] < c.base) m.boundary_order.push_back(static_cast<int>(i));
  return m;
}

Presentation monodromy_presentation(const MonodromyData& m) {
  return vankampen(m.braids, m.config.degree(), m.config.k, m.config.names);
}

std::map<std::string, Word> basis_transport(const FiberConfiguration& c, double target,
                                            const std::vector<std::string>& target_names, const TrackOptions& opt) {
  for (double x : c.fibers)
    if (x == target) throw std::invalid_argument("target fiber is singular");
  int d = c.degree();
  Braid tau(d);
  if (target != c.base) {
    RootTrajectory t = track_roots(c.f, real_path(c, c.base, target, 0.0), base_roots(c, opt), opt);
    tau = braid_of(t, opt.tilt);
  }
  Braid back = tau.inverse();
  std::map<std::string, Word> out;
  for (int j = 1; j <= d; ++j) {
    std::string name = j <= static_cast<int>(target_names.size()) ? target_names[j - 1] : "z" + std::to_string(j) + "'";
    out[name] = artin_act(back, {j});
  }
  return out;
}

}  // namespace sextic
