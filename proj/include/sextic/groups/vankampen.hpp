#pragma once

#include <string>
#include <vector>

#include "sextic/braids/braid.hpp"
#include "sextic/groups/presentation.hpp"

namespace sextic {

/// z_j^-1 * artin_act(b, z_j) for j = 1..d, freely reduced, trivial ones dropped.
std::vector<Word> braid_relators(const Braid& b);

/// Local braid with a provenance label, e.g. "the tangency point x=2".
struct LabeledBraid {
  std::string label;
  Braid braid;
};

/// Presentation on z_1..z_d (or the given names) with every braid relator
/// and the relation at infinity (z_1 ... z_d)^k; k = 0 gives the affine group.
Presentation vankampen(const std::vector<LabeledBraid>& braids, int strands, int k,
                       const std::vector<std::string>& names = {});

}  // namespace sextic
