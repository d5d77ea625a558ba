#pragma once

#include <string>
#include <vector>

namespace sextic {

/// Finite group given by a multiplication table over named elements.
/// Element 0 need not be the identity; identity() locates it.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Validates closure, associativity, identity and inverses.
  FiniteGroup(std::string name, std::vector<std::string> elements, std::vector<std::vector<int>> table);

  /// Closure of the given permutations (0-based images) under composition.
  static FiniteGroup from_permutations(const std::string& name, const std::vector<std::vector<int>>& gens);
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);
  /// SL(2, F_p) as 2x2 matrices.
  static FiniteGroup special_linear_2(int p);

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(table_.size()); }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return id_; }
  int element_order(int a) const;
  const std::vector<std::string>& elements() const { return elements_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// Subgroup generated by the given elements (sorted element list).
  std::vector<int> generated(const std::vector<int>& gens) const;
  int involution_count() const;
  int center_size() const;
  int derived_subgroup_size() const;
  std::vector<int> class_sizes() const;  // sorted

  /// Text form: "name: S3\nelements: e, a, ...\ntable:\n<rows of indices>".
  std::string to_text() const;

 private:
  std::string name_;
  std::vector<std::string> elements_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  int id_ = 0;
};

FiniteGroup parse_finite_group(const std::string& text);
FiniteGroup load_finite_group(const std::string& path);

/// Small generating set, chosen greedily among elements of largest order.
std::vector<int> generating_set(const FiniteGroup& g);
/// Every automorphism as an element permutation, sorted.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g);

/// Isomorphism test by invariants plus generator-image backtracking.
bool isomorphic(const FiniteGroup& a, const FiniteGroup& b);

/// All groups of order <= max_order (max_order <= 24) up to isomorphism,
/// ordered by order; names "<order>#<k>".
const std::vector<FiniteGroup>& small_groups(int max_order = 24);

}  // namespace sextic
