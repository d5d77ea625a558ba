#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sextic/cli/criteria.hpp"

namespace sextic {

/// Bad input from the command line: unknown names, malformed rules.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ScenarioReport {
  std::string id;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string singularities;
  std::string presentation;
  std::string suite;
  std::vector<std::pair<std::string, Source>> values;  // extra report lines with their source
  std::vector<CheckLine> checks;
  bool pass() const;
  std::string text() const;
  std::string json() const;
};

/// Section, intersection divisor, singular fibers and singularity set.
std::string family_report(const std::string& name, const VerifyOptions& opt, bool json);

/// Monodromy, presentation, double cover, simplification and invariants
/// compared with the expected group. With corpus_only the presentation
/// comes from the shipped corpus and no roots are tracked.
ScenarioReport group_scenario(const std::string& name, const VerifyOptions& opt);

/// Applies a named perturbation rule and compares with its expected group.
ScenarioReport perturb_scenario(const std::string& rule, const VerifyOptions& opt);

/// One-step perturbations of every point of a singularity set such as "(2E6+A5)+A2".
std::string perturbation_sets(const std::string& set, bool json);

/// Braids of a named family as MonodromyData JSON or text.
std::string monodromy_report(const std::string& name, const VerifyOptions& opt, bool json);

/// Simplified presentation and invariant suite of a presentation file.
ScenarioReport presentation_scenario(const std::string& path, const VerifyOptions& opt);

}  // namespace sextic
