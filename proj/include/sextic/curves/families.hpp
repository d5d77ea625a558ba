#pragma once

#include <string>
#include <vector>

#include "sextic/curves/classify.hpp"

namespace sextic {

struct NamedFamily {
  std::string name;          // "2e6+2a2+a3", "3e6+a1", "2e6+a5+a2.1", "2e6+a5+a2.2"
  Number t;                  // parameter of the distinguished contact point
  Section section;
  SingularitySet expected;
  std::string construction;
};

std::vector<std::string> family_names();

/// Throws std::out_of_range for an unknown name.
NamedFamily named_family(const std::string& name, const TrigonalCurve& curve = TrigonalCurve());

/// One section per row of the list of sextics with two E6 points and
/// inner part of maximal type, with the expected singularity set.
struct Realization {
  SingularitySet expected;
  std::string construction;
  Section section;
};

std::vector<Realization> table_realizations(const TrigonalCurve& curve = TrigonalCurve());

/// JSON with exact coefficient strings.
std::string section_json(const Section& s);
std::string divisor_json(const IntersectionDivisor& d);
std::string classification_json(const Classification& c);
std::string fibers_json(const FiberList& f);

}  // namespace sextic
