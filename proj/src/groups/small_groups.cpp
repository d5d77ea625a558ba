#include <stdexcept>

#include "sextic/groups/finite_group.hpp"

namespace sextic {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Extension of N by Z_p: elements x g^a with g x g^-1 = phi(x), g^p = h.
FiniteGroup cyclic_extension(const FiniteGroup& n, const std::vector<int>& phi, int h, int p) {
  int m = n.order(), size = m * p;
  // phi_pow[a] = phi^a
  std::vector<std::vector<int>> phi_pow(p, std::vector<int>(m));
  for (int x = 0; x < m; ++x) phi_pow[0][x] = x;
  for (int a = 1; a < p; ++a)
    for (int x = 0; x < m; ++x) phi_pow[a][x] = phi[phi_pow[a - 1][x]];
  std::vector<std::vector<int>> table(size, std::vector<int>(size));
  std::vector<std::string> names(size);
  for (int a = 0; a < p; ++a)
    for (int x = 0; x < m; ++x) {
      int i = a * m + x;
      names[i] = "(" + std::to_string(x) + "," + std::to_string(a) + ")";
      for (int b = 0; b < p; ++b)
        for (int y = 0; y < m; ++y) {
          int z = n.mul(x, phi_pow[a][y]);
          int c = a + b;
          if (c >= p) {
            z = n.mul(z, h);
            c -= p;
          }
          table[i][b * m + y] = c * m + z;
        }
    }
  return FiniteGroup("", std::move(names), std::move(table));
}

std::vector<std::vector<FiniteGroup>> build(int max_order) {
  std::vector<std::vector<FiniteGroup>> level(max_order + 1);
  level[1].push_back(FiniteGroup::cyclic(1));
  for (int n = 2; n <= max_order; ++n) {
    auto& out = level[n];
    // Every group of order < 60 is solvable, hence has a normal subgroup of prime index.
    for (int p = 2; p <= n; ++p) {
      if (n % p != 0 || !is_prime(p)) continue;
      for (const FiniteGroup& base : level[n / p]) {
        auto autos = automorphisms(base);
        int m = base.order();
        for (const auto& phi : autos) {
          std::vector<int> pw(m);
          for (int x = 0; x < m; ++x) pw[x] = x;
          for (int k = 0; k < p; ++k)
            for (int x = 0; x < m; ++x) pw[x] = phi[pw[x]];
          for (int h = 0; h < m; ++h) {
            if (phi[h] != h) continue;
            bool inner = true;
            for (int x = 0; x < m && inner; ++x) inner = pw[x] == base.mul(base.mul(h, x), base.inv(h));
            if (!inner) continue;
            FiniteGroup g = cyclic_extension(base, phi, h, p);
            bool seen = false;
            for (const auto& known : out)
              if (isomorphic(known, g)) {
                seen = true;
                break;
              }
            if (!seen) out.push_back(std::move(g));
          }
        }
      }
    }
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = FiniteGroup(std::to_string(n) + "#" + std::to_string(k + 1), out[k].elements(), out[k].table());
  }
  level[1][0] = FiniteGroup("1#1", level[1][0].elements(), level[1][0].table());
  return level;
}

}  // namespace

const std::vector<FiniteGroup>& small_groups(int max_order) {
  if (max_order < 1 || max_order > 24) throw std::invalid_argument("small group catalogue covers orders 1..24");
  static std::vector<std::vector<FiniteGroup>> cache[25];
  static std::vector<FiniteGroup> flat[25];
  if (flat[max_order].empty()) {
    cache[max_order] = build(max_order);
    for (const auto& lv : cache[max_order])
      for (const auto& g : lv) flat[max_order].push_back(g);
  }
  return flat[max_order];
}

}  // namespace sextic
