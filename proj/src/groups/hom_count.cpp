#include "sextic/groups/hom_count.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace sextic {

HomCount hom_count(const Presentation& p, const FiniteGroup& target, double budget) {
  int n = p.rank();
  if (std::pow(static_cast<double>(target.order()), n) > budget)
    throw std::length_error("hom_count budget exceeded for target " + target.name());
  // relators checked as soon as their largest generator index is assigned
  std::vector<std::vector<const Word*>> due(n + 1);
  for (const auto& r : p.relators) {
    int top = 0;
    for (int x : r) top = std::max(top, std::abs(x));
    due[top].push_back(&r);
  }
  std::vector<int> img(n + 1, target.identity());
  auto holds = [&](const Word& w) {
    int acc = target.identity();
    for (int x : w) acc = target.mul(acc, x > 0 ? img[x] : target.inv(img[-x]));
    return acc == target.identity();
  };
  for (const Word* r : due[0])
    if (!holds(*r)) return {};
  HomCount out;
  auto search = [&](auto&& self, int g) -> void {
    if (g > n) {
      ++out.homs;
      std::vector<int> gens(img.begin() + 1, img.end());
      if (static_cast<int>(target.generated(gens).size()) == target.order()) ++out.epis;
      return;
    }
    for (int y = 0; y < target.order(); ++y) {
      img[g] = y;
      bool ok = true;
      for (const Word* r : due[g])
        if (!holds(*r)) {
          ok = false;
          break;
        }
      if (ok) self(self, g + 1);
    }
  };
  search(search, 1);
  return out;
}

std::vector<FingerprintEntry> hom_fingerprint(const Presentation& p, int max_order, double budget) {
  std::vector<FingerprintEntry> out;
  for (const auto& g : small_groups(max_order)) out.push_back({g.name(), hom_count(p, g, budget)});
  return out;
}

}  // namespace sextic
