#pragma once

#include <string>
#include <vector>

#include "sextic/algebra/singularity.hpp"
#include "sextic/groups/presentation.hpp"

namespace sextic {

/// Fundamental group of a Milnor ball minus the perturbed curve.
enum class LocalGroupClass { Braid4, Braid3, FreeAbelian2, Cyclic, Other };
std::string to_string(LocalGroupClass c);

/// Extra relators induced on a global presentation by perturbing one point.
struct PerturbationRule {
  std::string id;                      // e.g. "G3/A3->2A1"
  std::string presentation;            // corpus name the relators refer to
  std::string point;                   // perturbed point, e.g. "outer A3"
  std::string local_set;               // singularities left in the Milnor ball
  std::vector<std::string> relators;   // words or "u = v" over the presentation's generators
  LocalGroupClass local_group;
  std::string expected;                // corpus name of the resulting group, or "Z6"
};

const std::vector<PerturbationRule>& perturbation_rules();
const PerturbationRule& perturbation_rule(const std::string& id);

/// Adjoins the rule's relators (the replaced relation follows from them) and simplifies.
Presentation apply_perturbation(const Presentation& p, const PerturbationRule& rule);

struct LocalPerturbation {
  std::vector<SingularityType> result;
  LocalGroupClass group;
};

/// One-step perturbations of a single point: A_p splits into sums of A_{p_i}
/// with sum(p_i + 1) <= p + 1; E6 uses the explicit list. Throws for other types.
std::vector<LocalPerturbation> perturb_point(const SingularityType& t);

/// Sets reachable by perturbing one point of s; replacement points keep the
/// inner/outer tag of the point they replace. D types are left unexpanded.
std::vector<SingularitySet> enumerate_perturbations(const SingularitySet& s);

/// Types of all proper induced subdiagrams of the Dynkin diagram of t.
std::vector<std::vector<SingularityType>> dynkin_subdiagrams(const SingularityType& t);

}  // namespace sextic
