#include "sextic/cli/scenarios.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"
#include "sextic/curves/classify.hpp"
#include "sextic/curves/families.hpp"
#include "sextic/groups/corpus.hpp"
#include "sextic/groups/invariants.hpp"
#include "sextic/groups/perturbation.hpp"
#include "sextic/groups/tietze.hpp"
#include "sextic/monodromy/monodromy.hpp"

namespace sextic {

namespace {

const std::map<std::string, std::string>& expected_groups() {
  static const std::map<std::string, std::string> m = {
      {"2e6+2a2+a3", "G3"}, {"3e6+a1", "G0"}, {"2e6+a5+a2.1", "G2prime"}, {"2e6+a5+a2.2", "G2second"}};
  return m;
}

NamedFamily family_or_usage(const std::string& name, const TrigonalCurve& curve) {
  try {
    return named_family(name, curve);
  } catch (const std::out_of_range&) {
    std::string known;
    for (const auto& n : family_names()) known += (known.empty() ? "" : ", ") + n;
    throw UsageError("unknown family '" + name + "' (known: " + known + ")");
  }
}

TrackOptions track_options(const VerifyOptions& opt) {
  TrackOptions t;
  t.precision_bits = opt.precision_bits;
  return t;
}

void fill_suite(ScenarioReport& r, const Presentation& p, const std::string& expected, const VerifyOptions& opt) {
  r.presentation = p.to_string();
  InvariantSuite s = invariant_suite(p, opt.coset_cap);
  r.suite = s.to_string();
  r.values.emplace_back("abelianization " + s.abelianization.to_string(), Source::Derived);
  r.values.emplace_back("Alexander polynomial " + poly_to_string(s.alexander), Source::Derived);
  if (expected == "Z6") {
    r.checks.push_back({"abelian", "Z6", s.abelianization.to_string() + (s.commutant && s.commutant->to_string() == "0" ? ", commutant 0" : ""),
                        s.abelianization.to_string() == "Z6" && s.commutant && s.commutant->to_string() == "0"});
    return;
  }
  InvariantSuite want = invariant_suite(corpus_presentation(expected), opt.coset_cap);
  r.checks.push_back({"invariant suite of " + expected, want.to_string(), s.to_string(), s == want});
}

}  // namespace

bool ScenarioReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

std::string ScenarioReport::text() const {
  std::ostringstream s;
  s << "scenario " << id << "\n";
  for (const auto& [k, v] : inputs) s << "  " << k << ": " << v << "\n";
  if (!singularities.empty()) s << "  singularities: " << singularities << "\n";
  if (!presentation.empty()) s << "  presentation: " << presentation << "\n";
  if (!suite.empty()) s << "  invariants: " << suite << "\n";
  for (const auto& [v, src] : values) s << "  " << v << "  [" << to_string(src) << "]\n";
  for (const auto& c : checks)
    s << "  " << (c.pass ? "ok  " : "BAD ") << c.what << ": expected " << c.expected << ", got " << c.actual << "\n";
  s << (pass() ? "PASS" : "FAIL") << "\n";
  return s.str();
}

std::string ScenarioReport::json() const {
  nlohmann::json j;
  j["id"] = id;
  for (const auto& [k, v] : inputs) j["inputs"][k] = v;
  j["singularities"] = singularities;
  j["presentation"] = presentation;
  j["invariants"] = suite;
  j["values"] = nlohmann::json::array();
  for (const auto& [v, src] : values) j["values"].push_back({{"value", v}, {"source", to_string(src)}});
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"what", c.what}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  j["pass"] = pass();
  return j.dump(2);
}

std::string family_report(const std::string& name, const VerifyOptions& opt, bool json) {
  TrigonalCurve curve{Number(opt.r)};
  NamedFamily f = family_or_usage(name, curve);
  IntersectionDivisor d = intersection_divisor(f.section, curve);
  FiberList fibers = singular_fibers(f.section, curve);
  Classification c = classify_sextic(f.section, curve);
  if (json) {
    nlohmann::json j;
    j["family"] = name;
    j["r"] = to_string(opt.r);
    j["t"] = f.t.to_string();
    j["construction"] = f.construction;
    j["section"] = nlohmann::json::parse(section_json(f.section));
    j["divisor"] = nlohmann::json::parse(divisor_json(d));
    j["fibers"] = nlohmann::json::parse(fibers_json(fibers));
    j["classification"] = nlohmann::json::parse(classification_json(c));
    j["expected"] = f.expected.to_string();
    return j.dump(2) + "\n";
  }
  std::ostringstream s;
  s << "family " << name << " at r = " << to_string(opt.r) << "\n";
  s << "  " << f.construction << ", t = " << f.t.to_string() << "\n";
  s << "  section (a, b, c) = " << f.section.to_string() << "\n";
  s << "  P(t) = " << upoly_to_string(intersection_polynomial(f.section, curve)) << "\n";
  s << "  intersection divisor (total " << d.total() << "):\n";
  for (const auto& e : d.entries) {
    s << "    t = " << e.t.to_string() << "  multiplicity " << e.multiplicity;
    if (e.t.real()) s << "  x = " << (e.x_exact ? e.x_exact->to_string() : "~" + std::to_string(e.x_approx));
    if (e.at_cusp) s << "  (cusp)";
    if (e.at_vertical_tangent) s << "  (vertical tangent)";
    s << "\n";
  }
  s << "  singular fibers:\n";
  for (const auto& x : fibers.fibers) s << "    " << x.label << "\n";
  if (fibers.nonreal) s << "    plus non-real intersection fibers\n";
  s << "  singularities: " << c.set.to_string() << (c.degenerate ? " (degenerate: " + c.note + ")" : "") << "\n";
  s << "  expected: " << f.expected.to_string() << "\n";
  return s.str();
}

ScenarioReport group_scenario(const std::string& name, const VerifyOptions& opt) {
  TrigonalCurve curve{Number(opt.r)};
  NamedFamily f = family_or_usage(name, curve);
  ScenarioReport r;
  r.id = "group " + name;
  r.inputs = {{"r", to_string(opt.r)}, {"section", f.section.to_string()}, {"mode", opt.corpus_only ? "corpus" : "monodromy"}};
  r.singularities = classify_sextic(f.section, curve).set.to_string();
  std::string stage = "monodromy";
  try {
    Presentation p;
    if (opt.corpus_only) {
      stage = "corpus";
      p = corpus_presentation("pi1bar_" + name);
    } else {
      MonodromyData m = braid_monodromy(section_configuration(f.section, curve), track_options(opt));
      for (const auto& b : m.braids) r.values.emplace_back(b.label + ": " + b.braid.to_string(), Source::Derived);
      stage = "vankampen";
      p = monodromy_presentation(m);
    }
    stage = "double_cover";
    Presentation dc = double_cover(p, "delta");
    stage = "tietze_simplify";
    Presentation simple = tietze_simplify(dc);
    stage = "invariant_suite";
    fill_suite(r, simple, expected_groups().at(name), opt);
  } catch (const std::exception& e) {
    r.checks.push_back({"stage " + stage, "success", std::string("error: ") + e.what(), false});
  }
  return r;
}

ScenarioReport perturb_scenario(const std::string& id, const VerifyOptions& opt) {
  const PerturbationRule* rule = nullptr;
  try {
    rule = &perturbation_rule(id);
  } catch (const std::invalid_argument& e) {
    std::string known;
    for (const auto& x : perturbation_rules()) known += (known.empty() ? "" : ", ") + x.id;
    throw UsageError(std::string(e.what()) + " (known: " + known + ")");
  }
  ScenarioReport r;
  r.id = "perturb " + id;
  r.inputs = {{"presentation", rule->presentation}, {"point", rule->point}, {"local set", rule->local_set}};
  r.values.emplace_back("local group " + to_string(rule->local_group), Source::Published);
  fill_suite(r, apply_perturbation(corpus_presentation(rule->presentation), *rule), rule->expected, opt);
  return r;
}

std::string perturbation_sets(const std::string& text, bool json) {
  SingularitySet set;
  try {
    set = parse_singularity_set(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad singularity set: ") + e.what());
  }
  nlohmann::json j;
  std::ostringstream s;
  s << "one-step perturbations of " << set.to_string() << "\n";
  std::vector<SingularityType> points = set.inner;
  points.insert(points.end(), set.outer.begin(), set.outer.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& t : points) {
    if (t.kind != 'A' && !(t.kind == 'E' && t.n == 6)) continue;
    std::vector<std::string> local;
    for (const auto& p : perturb_point(t)) local.push_back((p.result.empty() ? "0" : types_to_string(p.result)) + " (" + to_string(p.group) + ")");
    s << "  " << t.to_string() << " -> " << local.size() << ": ";
    for (std::size_t i = 0; i < local.size(); ++i) s << (i ? ", " : "") << local[i];
    s << "\n";
    j["local"][t.to_string()] = local;
  }
  std::vector<std::string> sets;
  for (const auto& x : enumerate_perturbations(set)) sets.push_back(x.to_string());
  s << "  resulting sets (" << sets.size() << "):\n";
  for (const auto& x : sets) s << "    " << x << "\n";
  j["set"] = set.to_string();
  j["results"] = sets;
  return json ? j.dump(2) + "\n" : s.str();
}

std::string monodromy_report(const std::string& name, const VerifyOptions& opt, bool json) {
  TrigonalCurve curve{Number(opt.r)};
  NamedFamily f = family_or_usage(name, curve);
  FiberConfiguration cfg = section_configuration(f.section, curve);
  MonodromyData m = braid_monodromy(cfg, track_options(opt));
  if (json) return monodromy_json(m) + "\n";
  std::ostringstream s;
  s << "monodromy of " << name << " at r = " << to_string(opt.r) << ", base x = " << cfg.base << "\n";
  s << "  strands:";
  for (const auto& n : cfg.names) s << " " << n;
  s << "\n";
  for (const auto& b : m.braids) s << "  " << b.label << ": " << b.braid.to_string() << "\n";
  auto rc = recentered_configuration(cfg, -1.0);
  MonodromyData mi = braid_monodromy(rc, track_options(opt));
  s << "  boundary product is conjugation by rho^2 (chart centered at infinity): " << (mi.infinity_check() ? "yes" : "no") << "\n";
  return s.str();
}

ScenarioReport presentation_scenario(const std::string& path, const VerifyOptions& opt) {
  Presentation p;
  try {
    p = load_presentation(path);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  ScenarioReport r;
  r.id = "simplify " + path;
  r.inputs = {{"generators", std::to_string(p.rank())}, {"relators", std::to_string(p.relators.size())}};
  Presentation q = tietze_simplify(p);
  r.presentation = q.to_string();
  r.suite = invariant_suite(q, opt.coset_cap).to_string();
  return r;
}

}  // namespace sextic
