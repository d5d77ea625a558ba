#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sextic/groups/abelian.hpp"
#include "sextic/groups/coset.hpp"

namespace sextic {

/// Invariants used to compare groups whose presentations differ.
/// Quotient orders are nullopt when enumeration exceeds the coset cap.
struct InvariantSuite {
  AbelianInvariants abelianization;
  std::optional<long> mod_squares;
  std::optional<long> mod_fourth_powers;
  QUPoly alexander;
  std::optional<AbelianInvariants> commutant;

  std::string to_string() const;
  friend bool operator==(const InvariantSuite&, const InvariantSuite&) = default;
};

/// x^k for every generator x. For groups generated by conjugate meridians
/// this is the normal closure of a single meridian power.
std::vector<Word> generator_powers(const Presentation& p, int k);

/// Elements of order 2 in the group of a regular (trivial-subgroup) table.
int involution_count(const CosetTable& regular);

/// Abelianization of the commutator subgroup; nullopt if G/G' is infinite
/// or its enumeration exceeds the cap.
std::optional<AbelianInvariants> commutant_abelianization(const Presentation& p, std::size_t cap = 1000000);

InvariantSuite invariant_suite(const Presentation& p, std::size_t cap = 1000000);

}  // namespace sextic
