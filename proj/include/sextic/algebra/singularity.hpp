#pragma once

#include <string>
#include <vector>

namespace sextic {

/// Simple singularity type A_n, D_n or E_n.
struct SingularityType {
  char kind = 'A';
  int n = 1;

  int milnor() const { return n; }
  std::string to_string() const { return std::string(1, kind) + std::to_string(n); }
  friend auto operator<=>(const SingularityType&, const SingularityType&) = default;
};

SingularityType parse_singularity_type(const std::string& s);

/// Multiset of singular points, each tagged inner (on the torus structure) or outer.
struct SingularitySet {
  std::vector<SingularityType> inner;
  std::vector<SingularityType> outer;

  /// Sorted by decreasing type so that equal multisets compare equal.
  SingularitySet canonical() const;
  int total_milnor() const;
  bool empty() const { return inner.empty() && outer.empty(); }
  /// "(2E6+2A2)+A3"; outer-only sets print without parentheses; empty set prints "0".
  std::string to_string() const;
  friend bool operator==(const SingularitySet& a, const SingularitySet& b);
};

/// Parses "(2E6+A5)+A2", "2A2+A1", "A1" or "0". Without parentheses every point is outer.
SingularitySet parse_singularity_set(const std::string& s);

/// Joins a list of types as "2A2+A1".
std::string types_to_string(std::vector<SingularityType> types);

}  // namespace sextic
