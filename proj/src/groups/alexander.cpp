#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sextic/groups/abelian.hpp"

namespace sextic {

namespace {

using Laurent = std::map<int, Rational>;

void add_to(Laurent& f, int e, const Rational& c) {
  auto& v = f[e];
  v += c;
  if (sgn(v) == 0) f.erase(e);
}

// Fox derivative of w with respect to generator g, pushed through the degree map.
Laurent fox(const Word& w, int g, const std::vector<int>& deg) {
  Laurent out;
  int prefix = 0;
  for (int x : w) {
    int a = std::abs(x);
    if (x > 0) {
      if (a == g) add_to(out, prefix, 1);
      prefix += deg[a - 1];
    } else {
      prefix -= deg[a - 1];
      if (a == g) add_to(out, prefix, -1);
    }
  }
  return out;
}

QUPoly shift_to_poly(const Laurent& f) {
  if (f.empty()) return {};
  int lo = f.begin()->first;
  std::vector<Rational> c(f.rbegin()->first - lo + 1, Rational(0));
  for (const auto& [e, v] : f) c[e - lo] = v;
  return QUPoly(std::move(c));
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

QUPoly minors_gcd(const Presentation& p, const std::vector<int>& deg) {
  int n = p.rank(), m = static_cast<int>(p.relators.size());
  int k = n - 1;
  if (k <= 0) return QUPoly({Rational(1)});
  if (m < k) return {};
  std::vector<std::vector<QUPoly>> fm(m, std::vector<QUPoly>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) fm[i][j] = shift_to_poly(fox(p.relators[i], j + 1, deg));
  std::vector<std::vector<int>> rows, cols;
  combinations(m, k, rows);
  combinations(n, k, cols);
  QUPoly g;
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      std::vector<std::vector<QUPoly>> sub(k, std::vector<QUPoly>(k));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub[a][b] = fm[rs[a]][cs[b]];
      QUPoly d = determinant(sub);
      if (d.is_zero()) continue;
      g = g.is_zero() ? d.monic() : gcd(g, d);
      if (g.degree() == 0) return g;
    }
  return g;
}

// ---- rational linear algebra for the cyclic-cover route ----

using Vec = std::vector<Rational>;

// Reduced row echelon basis with pivot bookkeeping.
struct Echelon {
  std::vector<Vec> rows;
  std::vector<int> pivots;

  void reduce(Vec& v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Rational f = v[pivots[i]];
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (sgn(rows[i][j]) != 0) v[j] -= f * rows[i][j];
    }
  }

  bool insert(Vec v) {
    reduce(v);
    int piv = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(v[j]) != 0) {
        piv = static_cast<int>(j);
        break;
      }
    if (piv < 0) return false;
    Rational inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    for (auto& r : rows) {
      Rational c = r[piv];
      if (sgn(c) == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) r[j] -= c * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
};

// Null space of a (rows x cols) matrix.
std::vector<Vec> kernel(const std::vector<Vec>& a, int cols) {
  Echelon e;
  for (const auto& r : a) e.insert(r);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

QUPoly cover_charpoly(const Presentation& p, const std::vector<int>& deg, int N) {
  int n = p.rank();
  int dim = N * n;
  auto idx = [N](int gen, int power) { return gen * N + ((power % N) + N) % N; };
  // d1: coordinate (g, k) = t^k e_g  ->  t^k (t^{deg g} - 1)
  std::vector<Vec> d1(N, Vec(dim, Rational(0)));
  for (int g = 0; g < n; ++g)
    for (int k = 0; k < N; ++k) {
      d1[((k + deg[g]) % N + N) % N][idx(g, k)] += 1;
      d1[k][idx(g, k)] -= 1;
    }
  std::vector<Vec> ker = kernel(d1, dim);
  // image of d2: t^k * sum_j fox(r, j) e_j
  Echelon image;
  for (const auto& r : p.relators) {
    std::vector<Laurent> f(n);
    for (int j = 0; j < n; ++j) f[j] = fox(r, j + 1, deg);
    for (int k = 0; k < N; ++k) {
      Vec v(dim, Rational(0));
      for (int j = 0; j < n; ++j)
        for (const auto& [e, c] : f[j]) v[idx(j, e + k)] += c;
      image.insert(std::move(v));
    }
  }
  // complement of the image inside the kernel
  Echelon all = image;
  std::vector<Vec> comp;
  for (const auto& v : ker)
    if (all.insert(v)) comp.push_back(v);
  int m = static_cast<int>(comp.size());
  if (m == 0) return QUPoly({Rational(1)});
  // coordinates of t * comp_i in the basis (image rows, comp); keep the comp part
  std::vector<Vec> gens;
  for (const auto& r : image.rows) gens.push_back(r);
  for (const auto& v : comp) gens.push_back(v);
  int total = static_cast<int>(gens.size());
  // solve coordinates by Gaussian elimination on the matrix [gens^T | w]
  auto coordinates = [&](const Vec& w) {
    std::vector<Vec> aug(dim, Vec(total + 1, Rational(0)));
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < total; ++j) aug[i][j] = gens[j][i];
      aug[i][total] = w[i];
    }
    int row = 0;
    std::vector<int> pc;
    for (int col = 0; col < total && row < dim; ++col) {
      int sel = -1;
      for (int i = row; i < dim; ++i)
        if (sgn(aug[i][col]) != 0) {
          sel = i;
          break;
        }
      if (sel < 0) continue;
      std::swap(aug[row], aug[sel]);
      Rational inv = 1 / aug[row][col];
      for (auto& x : aug[row]) x *= inv;
      for (int i = 0; i < dim; ++i) {
        if (i == row || sgn(aug[i][col]) == 0) continue;
        Rational c = aug[i][col];
        for (int j = col; j <= total; ++j) aug[i][j] -= c * aug[row][j];
      }
      pc.push_back(col);
      ++row;
    }
    Vec x(total, Rational(0));
    for (int i = 0; i < row; ++i) x[pc[i]] = aug[i][total];
    return x;
  };
  int off = static_cast<int>(image.rows.size());
  std::vector<std::vector<QUPoly>> tm(m, std::vector<QUPoly>(m));
  for (int i = 0; i < m; ++i) {
    Vec w(dim, Rational(0));
    for (int g = 0; g < n; ++g)
      for (int k = 0; k < N; ++k) w[idx(g, k + 1)] += comp[i][idx(g, k)];
    Vec x = coordinates(w);
    // characteristic matrix t*I - T, with T acting on column vectors
    for (int j = 0; j < m; ++j) {
      Rational tij = x[off + j];
      std::vector<Rational> entry{-tij};
      if (i == j) entry.push_back(Rational(1));
      tm[j][i] = QUPoly(entry);
    }
  }
  return determinant(tm);
}

}  // namespace

QUPoly determinant(std::vector<std::vector<QUPoly>> m) {
  int n = static_cast<int>(m.size());
  if (n == 0) return QUPoly({Rational(1)});
  QUPoly prev({Rational(1)});
  bool neg = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].is_zero()) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          s = i;
          break;
        }
      if (s < 0) return {};
      std::swap(m[k], m[s]);
      neg = !neg;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

QUPoly normalize_integral(const QUPoly& f) {
  if (f.is_zero()) return f;
  int lo = 0;
  while (sgn(f[lo]) == 0) ++lo;
  std::vector<Rational> c(f.coeffs().begin() + lo, f.coeffs().end());
  Integer l = 1, g = 0;
  for (const auto& x : c) l = lcm(l, x.get_den());
  for (auto& x : c) {
    x *= l;
    g = gcd(g, x.get_num());
  }
  for (auto& x : c) x /= g;
  if (sgn(c.back()) < 0)
    for (auto& x : c) x = -x;
  return QUPoly(std::move(c));
}

std::string poly_to_string(const QUPoly& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    Rational c = f[k];
    if (sgn(c) == 0) continue;
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty())
      out += a.get_str();
    else if (a == 1)
      out += mono;
    else
      out += a.get_str() + "*" + mono;
  }
  return out;
}

QUPoly alexander_polynomial(const Presentation& p, const std::vector<int>& degrees) {
  if (static_cast<int>(degrees.size()) != p.rank()) throw std::invalid_argument("degree map size mismatch");
  int N = 0;
  for (const auto& r : p.relators) {
    int d = 0;
    for (int x : r) d += x > 0 ? degrees[x - 1] : -degrees[-x - 1];
    N = std::gcd(N, std::abs(d));
  }
  bool onto = false;
  for (int d : degrees) onto = onto || d != 0;
  if (!onto) throw std::invalid_argument("degree map is trivial");
  if (N == 0) return normalize_integral(minors_gcd(p, degrees));
  return normalize_integral(cover_charpoly(p, degrees, N));
}

QUPoly alexander_polynomial(const Presentation& p) {
  return alexander_polynomial(p, std::vector<int>(p.rank(), 1));
}

}  // namespace sextic
