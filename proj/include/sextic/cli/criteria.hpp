#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sextic/algebra/rational.hpp"

namespace sextic {

struct VerifyOptions {
  Rational r = 3;
  int precision_bits = 256;
  std::size_t coset_cap = 1000000;
  bool corpus_only = false;    // no root tracking; presentations come from the corpus
  std::string section;         // category filter, empty for all
  int significant_figures = 3;
  double monodromy_seconds = 60;
  double coset_seconds = 30;
  double fingerprint_seconds = 120;
  int fingerprint_order = 24;
};

/// Where an expected value comes from: a published statement, a derivation
/// carried out here, or an elementary fact.
enum class Source { Published, Derived, Elementary };
std::string to_string(Source s);

struct CheckLine {
  std::string what;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::string category;  // curves, monodromy, groups, perturbation
  std::string tolerance;
  Source source = Source::Published;
  std::vector<CheckLine> checks;
  bool skipped = false;
  std::string note;
  double seconds = 0;
  bool pass() const;
};

std::vector<std::string> criterion_categories();

/// Runs the criteria in order; the report ordering never depends on timing.
std::vector<CriterionResult> run_criteria(const VerifyOptions& opt);

/// One pass/fail line per criterion, followed by its indented checks.
std::string criteria_text(const std::vector<CriterionResult>& results, bool details = true);
std::string criteria_json(const std::vector<CriterionResult>& results);
bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace sextic
