// Command-line front end: geometry reports, monodromy, groups, perturbations
// and the acceptance run. Exit codes: 0 pass, 1 failure, 2 usage error.
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sextic/cli/criteria.hpp"
#include "sextic/cli/scenarios.hpp"

namespace {

int finish(const sextic::ScenarioReport& r, bool json) {
  std::cout << (json ? r.json() + "\n" : r.text());
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sextics with two E6 points: curves, braid monodromy and fundamental groups"};
  app.require_subcommand(1);

  sextic::VerifyOptions opt;
  std::string r_text = "3";
  bool json = false;
  app.add_option("--r", r_text, "curve parameter r, a rational number")->capture_default_str();
  app.add_option("--precision-bits", opt.precision_bits, "bits for the high-precision root fallback")->capture_default_str();
  app.add_option("--coset-cap", opt.coset_cap, "maximum live cosets in coset enumeration")->capture_default_str();
  app.add_flag("--corpus-only", opt.corpus_only, "take presentations from the corpus; no root tracking");
  app.add_flag("--json", json, "machine-readable output");

  std::string name, rule, set, path;
  auto* family = app.add_subcommand("family", "section, intersection divisor and singularities of a named family");
  family->add_option("name", name, "family name, e.g. 3e6+a1")->required();

  auto* group = app.add_subcommand("group", "fundamental group of a named family against the expected group");
  group->add_option("name", name, "family name")->required();

  auto* mono = app.add_subcommand("monodromy", "braid monodromy of a named family");
  mono->add_option("name", name, "family name")->required();

  auto* perturb = app.add_subcommand("perturb", "perturbation rule on a corpus group, or one-step perturbations of a set");
  auto* rule_opt = perturb->add_option("rule", rule, "rule id, e.g. G3/A2->A1");
  auto* set_opt = perturb->add_option("--set", set, "singularity set, e.g. \"(2E6+A5)+A2\"");
  rule_opt->excludes(set_opt);

  auto* simplify = app.add_subcommand("simplify", "Tietze simplification and invariants of a presentation file");
  simplify->add_option("file", path, "presentation file")->required()->check(CLI::ExistingFile);

  auto* verify = app.add_subcommand("verify", "run the acceptance criteria");
  verify->add_option("--section", opt.section, "only criteria of one category")
      ->check(CLI::IsMember(sextic::criterion_categories()));
  verify->add_option("--sig-figs", opt.significant_figures, "significant figures for intersection x-values")
      ->capture_default_str();
  verify->add_option("--monodromy-seconds", opt.monodromy_seconds, "runtime limit per configuration")->capture_default_str();
  verify->add_option("--coset-seconds", opt.coset_seconds, "runtime limit for the finite quotients")->capture_default_str();
  verify->add_option("--fingerprint-seconds", opt.fingerprint_seconds, "runtime limit for hom fingerprints")
      ->capture_default_str();
  verify->add_option("--fingerprint-order", opt.fingerprint_order, "largest target group order")->capture_default_str();
  bool brief = false;
  verify->add_flag("--brief", brief, "one line per criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    opt.r = sextic::parse_rational(r_text);
  } catch (const std::exception& e) {
    std::cerr << "--r: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*family) {
      std::cout << sextic::family_report(name, opt, json);
      return 0;
    }
    if (*group) return finish(sextic::group_scenario(name, opt), json);
    if (*mono) {
      std::cout << sextic::monodromy_report(name, opt, json);
      return 0;
    }
    if (*perturb) {
      if (!set.empty()) {
        std::cout << sextic::perturbation_sets(set, json);
        return 0;
      }
      if (rule.empty()) {
        std::cerr << "perturb: give a rule id or --set\n";
        return 2;
      }
      return finish(sextic::perturb_scenario(rule, opt), json);
    }
    if (*simplify) return finish(sextic::presentation_scenario(path, opt), json);
    if (*verify) {
      auto results = sextic::run_criteria(opt);
      std::cout << (json ? sextic::criteria_json(results) + "\n" : sextic::criteria_text(results, !brief));
      return sextic::all_pass(results) ? 0 : 1;
    }
  } catch (const sextic::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
