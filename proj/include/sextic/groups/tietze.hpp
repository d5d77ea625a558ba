#pragma once

#include <cstddef>

#include "sextic/groups/presentation.hpp"

namespace sextic {

struct TietzeBudget {
  int max_passes = 64;
  std::size_t max_total_length = 20000;  // eliminations never grow past this
};

/// Deterministic Tietze simplification; the output presents an isomorphic
/// group. Eliminated generators are always expressed through the remaining
/// ones, so every surviving generator is one of the input generators.
Presentation tietze_simplify(const Presentation& p, const TietzeBudget& budget = {});

/// Cyclically reduce, drop trivial relators, remove duplicates up to cyclic
/// permutation and inversion.
Presentation tidy_relators(const Presentation& p);

/// Smallest rotation of w or w^-1; equal for cyclic/inverse variants.
Word canonical_cyclic(const Word& w);

/// Remove generator g (1-based) by substituting the word image (over the other generators).
Presentation substitute_generator(const Presentation& p, int g, const Word& image);

std::size_t total_length(const Presentation& p);

}  // namespace sextic
