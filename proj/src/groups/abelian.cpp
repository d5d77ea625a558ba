#include "sextic/groups/abelian.hpp"

#include <cstdlib>

namespace sextic {

IntegerMatrix relation_matrix(const Presentation& p) {
  IntegerMatrix m(static_cast<int>(p.relators.size()), p.rank());
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (int x : p.relators[i]) m(static_cast<int>(i), std::abs(x) - 1) += x > 0 ? 1 : -1;
  return m;
}

AbelianInvariants abelianization(const Presentation& p) { return smith_normal_form(relation_matrix(p)).invariants; }

}  // namespace sextic
