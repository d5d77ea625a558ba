#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sextic/groups/presentation.hpp"

namespace sextic {

/// Coset table; column 2k is generator k+1, column 2k+1 its inverse.
struct CosetTable {
  int ngens = 0;
  std::vector<Word> subgroup;
  std::vector<std::vector<int>> rows;
  bool complete = false;

  int index() const { return static_cast<int>(rows.size()); }
  static int column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
  int act(int coset, int letter) const { return rows[coset][column(letter)]; }
  int act(int coset, const Word& w) const;
  /// Every relator returns to its start at every coset.
  bool closes(const Presentation& p) const;
  /// Word leading from coset 0 to each coset along a breadth-first tree.
  std::vector<Word> transversal() const;
};

struct EnumerationStats {
  std::size_t max_live = 0;
  std::size_t defined = 0;
  int lookaheads = 0;
};

/// HLT enumeration with lookahead; cosets renumbered by first appearance.
/// Returns an incomplete table (complete == false, no rows) once more than
/// cap cosets are alive after lookahead.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup = {},
                        std::size_t cap = 1000000, EnumerationStats* stats = nullptr);

/// Order of the quotient by the given extra relators; nullopt when the cap is hit.
std::optional<long> quotient_order(const Presentation& p, const std::vector<Word>& extra, std::size_t cap = 1000000);

/// Presentation of the subgroup described by a complete table, on Schreier
/// generators named "<gen>_<coset>".
Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t);

/// Index-2 subgroup: kernel of delta -> 1, others -> 0 (mod 2), with delta^2
/// adjoined and then eliminated. Generator x at the trivial coset keeps its
/// name, its conjugate by delta is named x + "bar".
Presentation double_cover(const Presentation& p, const std::string& delta);

}  // namespace sextic
