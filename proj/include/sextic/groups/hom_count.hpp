#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sextic/groups/finite_group.hpp"
#include "sextic/groups/presentation.hpp"

namespace sextic {

struct HomCount {
  std::uint64_t homs = 0;
  std::uint64_t epis = 0;
  friend bool operator==(const HomCount&, const HomCount&) = default;
};

/// Exhaustive count of generator images satisfying every relator.
/// Throws std::length_error when |target|^rank exceeds the budget.
HomCount hom_count(const Presentation& p, const FiniteGroup& target, double budget = 1e9);

struct FingerprintEntry {
  std::string target;
  HomCount count;
  friend bool operator==(const FingerprintEntry&, const FingerprintEntry&) = default;
};

/// Hom and epi counts into every group of the small-group catalogue up to max_order.
std::vector<FingerprintEntry> hom_fingerprint(const Presentation& p, int max_order = 24, double budget = 1e9);

}  // namespace sextic
