#include "sextic/cli/criteria.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sextic/algebra/resultant.hpp"
#include "sextic/algebra/upoly.hpp"
#include "sextic/curves/classify.hpp"
#include "sextic/curves/families.hpp"
#include "sextic/groups/coset.hpp"
#include "sextic/groups/corpus.hpp"
#include "sextic/groups/hom_count.hpp"
#include "sextic/groups/invariants.hpp"
#include "sextic/groups/perturbation.hpp"
#include "sextic/groups/tietze.hpp"
#include "sextic/monodromy/monodromy.hpp"

namespace sextic {

std::string to_string(Source s) {
  switch (s) {
    case Source::Published: return "published";
    case Source::Derived: return "derived";
    case Source::Elementary: return "elementary";
  }
  return "?";
}

bool CriterionResult::pass() const {
  if (skipped) return true;
  return std::all_of(checks.begin(), checks.end(), [](const CheckLine& c) { return c.pass; });
}

bool all_pass(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.pass(); });
}

std::vector<std::string> criterion_categories() { return {"curves", "monodromy", "groups", "perturbation"}; }

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void check(CriterionResult& r, std::string what, std::string expected, std::string actual, bool pass) {
  r.checks.push_back({std::move(what), std::move(expected), std::move(actual), pass});
}

void check_equal(CriterionResult& r, std::string what, const std::string& expected, const std::string& actual) {
  check(r, std::move(what), expected, actual, expected == actual);
}

std::string fmt(double v, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

// Rounds to n significant figures.
double round_sig(double v, int n) {
  if (v == 0) return 0;
  double d = std::ceil(std::log10(std::fabs(v)));
  double scale = std::pow(10.0, n - d);
  return std::round(v * scale) / scale;
}

bool same_sig(double a, double b, int n) {
  double x = round_sig(a, n), y = round_sig(b, n);
  return std::fabs(x - y) <= 1e-9 * std::max(std::fabs(x), 1.0);
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string pattern_string(const std::vector<int>& p) {
  std::vector<std::string> s;
  for (int m : p) s.push_back(std::to_string(m));
  return join(s, "+");
}

TrackOptions track_options(const VerifyOptions& opt) {
  TrackOptions t;
  t.precision_bits = opt.precision_bits;
  return t;
}

// The groups of the four main configurations.
const std::vector<std::pair<std::string, std::string>>& family_groups() {
  static const std::vector<std::pair<std::string, std::string>> v = {
      {"2e6+2a2+a3", "G3"}, {"3e6+a1", "G0"}, {"2e6+a5+a2.1", "G2prime"}, {"2e6+a5+a2.2", "G2second"}};
  return v;
}

const std::vector<std::string>& corpus_groups() {
  static const std::vector<std::string> v = {"G0", "G3", "G2prime", "G2second", "B3torus"};
  return v;
}

// ---- curves ----

void discriminant(CriterionResult& res, const VerifyOptions& opt) {
  QPoly disc = trigonal_discriminant_symbolic();
  const auto& vars = disc.vars();
  QPoly x = QPoly::variable(vars, "x"), r = QPoly::variable(vars, "r");
  QPoly expected = -(x.pow(3) * (Rational(27) * x - Rational(4) * r.pow(3)));
  check(res, "disc_y f_r over Q[x, r]", expected.to_string(), disc.to_string(), disc == expected);

  TrigonalCurve curve{Number(opt.r)};
  if (sgn(opt.r) == 0) {
    check(res, "root multiset at r", "r != 0", "r = 0", false);
    return;
  }
  NPoly d = discriminant_y(curve.equation());
  auto parts = squarefree_decomposition(to_univariate(d, "x"));
  std::vector<std::string> got;
  bool ok = parts.size() == 2;
  Number v = curve.vertical_tangent_x();
  for (const auto& [f, m] : parts) {
    got.push_back("(" + upoly_to_string(f, "x") + ")^" + std::to_string(m));
    if (m == 3) ok = ok && f == NUPoly({Number(0), Number(1)});
    else if (m == 1) ok = ok && f == NUPoly({-v, Number(1)});
    else ok = false;
  }
  check(res, "root multiset at r = " + to_string(opt.r), "{0 (x3), " + v.to_string() + " (x1)}", join(got, " "), ok);
}

void parameterization(CriterionResult& res, const VerifyOptions& opt) {
  QPoly sym = parameterization_residual_symbolic();
  check(res, "f_r(x_t, y_t) over Q[t, r]", "0", sym.to_string(), sym.is_zero());
  bool at = verify_parameterization(TrigonalCurve{Number(opt.r)});
  check(res, "f_r(x_t, y_t) at r = " + to_string(opt.r), "0", at ? "0" : "nonzero", at);
}

void double_tangent(CriterionResult& res, const VerifyOptions&) {
  QPoly e = double_tangent_elimination();
  const auto& vars = e.vars();
  QPoly t1 = QPoly::variable(vars, "t1"), t2 = QPoly::variable(vars, "t2"), r = QPoly::variable(vars, "r");
  QPoly expected = (t1 - t2).pow(2) * (Rational(3) * t1 + Rational(3) * t2 + r);
  check(res, "eliminant up to a constant", expected.to_string(), e.to_string(), proportional(e, expected));
}

void family_coefficients(CriterionResult& res, const VerifyOptions& opt) {
  Number r(opt.r);
  if (sgn(opt.r) == 0) {
    check(res, "families at r", "r != 0", "r = 0", false);
    return;
  }
  Number r4 = r * r * r * r, s3 = Number::sqrt_of(3);
  struct Row {
    std::string name;
    Number t, a, b, c;
  };
  std::vector<Row> rows = {
      {"2e6+2a2+a3", -r / Number(6), Number(-16) / (Number(3) * r4), Number(-88) / (Number(81) * r), r * r / Number(4374)},
      {"3e6+a1", -r / Number(3), Number(-27) / (Number(4) * r4), Number(-1) / r, Number(0)},
      {"2e6+a5+a2.1", (Number(Rational(-1, 2)) + s3 / Number(6)) * r, Number(12) * (Number(3) - Number(2) * s3) / r4,
       Number(-4) * (Number(2) - s3) / r, Number(0)},
      {"2e6+a5+a2.2", (Number(Rational(-1, 2)) - s3 / Number(6)) * r, Number(12) * (Number(3) + Number(2) * s3) / r4,
       Number(-4) * (Number(2) + s3) / r, Number(0)},
  };
  TrigonalCurve curve{r};
  for (const auto& row : rows) {
    NamedFamily f = named_family(row.name, curve);
    Section want(row.a, row.b, row.c);
    check(res, row.name + " (a, b, c)", want.to_string(), f.section.to_string(), f.section == want);
    check(res, row.name + " t", row.t.to_string(), f.t.to_string(), f.t == row.t);
  }
}

void intersection_data(CriterionResult& res, const VerifyOptions& opt) {
  TrigonalCurve curve{Number(3)};
  struct Row {
    std::string name;
    std::vector<double> xs;
    std::vector<int> pattern;
  };
  std::vector<Row> rows = {{"2e6+2a2+a3", {0.0459, -19.1, 0.625}, {4, 1, 1}},
                           {"3e6+a1", {-16, 2}, {3, 2, 1}},
                           {"2e6+a5+a2.1", {-18.4, 0.951}, {3, 2, 1}},
                           {"2e6+a5+a2.2", {4.94, 3.55}, {3, 2, 1}}};
  int n = opt.significant_figures;
  for (const auto& row : rows) {
    auto d = intersection_divisor(named_family(row.name, curve).section, curve);
    std::vector<double> got;
    for (const auto& e : d.entries)
      if (!e.at_cusp && e.t.real()) got.push_back(e.x_exact ? to_double(*e.x_exact) : e.x_approx);
    std::vector<std::string> want_s, got_s;
    for (double x : row.xs) want_s.push_back(fmt(x));
    for (double x : got) got_s.push_back(fmt(round_sig(x, n)) + " (" + fmt(x) + ")");
    bool ok = got.size() == row.xs.size();
    std::vector<bool> used(got.size(), false);
    for (double x : row.xs) {
      bool found = false;
      for (std::size_t i = 0; i < got.size() && !found; ++i)
        if (!used[i] && same_sig(got[i], x, n)) used[i] = found = true;
      ok = ok && found;
    }
    check(res, row.name + " x-values", "{" + join(want_s) + "}", "{" + join(got_s) + "}", ok);
    check_equal(res, row.name + " multiplicities", pattern_string(row.pattern), pattern_string(d.pattern()));
    check_equal(res, row.name + " total", "6", std::to_string(d.total()));
  }
}

void classification_table(CriterionResult& res, const VerifyOptions& opt) {
  const std::vector<std::string> table = {"(3E6)+A1",      "(3E6)",         "(2E6+A5)+A2",   "(2E6+A5)+A1",
                                          "(2E6+A5)",      "(2E6+2A2)+A3",  "(2E6+2A2)+A2",  "(2E6+2A2)+2A1",
                                          "(2E6+2A2)+A1",  "(2E6+2A2)"};
  if (sgn(opt.r) == 0) {
    check(res, "realizations at r", "r != 0", "r = 0", false);
    return;
  }
  TrigonalCurve curve{Number(opt.r)};
  std::set<std::string> realized;
  for (const auto& z : table_realizations(curve)) {
    Classification c = classify_sextic(z.section, curve);
    std::string got = c.set.to_string() + (c.degenerate ? " (degenerate)" : "");
    check(res, z.construction + " " + z.section.to_string(), z.expected.to_string(), got,
          !c.degenerate && c.set == z.expected);
    if (!c.degenerate && c.set == z.expected) realized.insert(c.set.to_string());
  }
  std::set<std::string> want;
  for (const auto& s : table) want.insert(parse_singularity_set(s).to_string());
  check(res, "realized sets", std::to_string(want.size()) + " rows", std::to_string(realized.size()) + " rows",
        realized == want);
}

// ---- monodromy ----

void infinity(CriterionResult& res, const VerifyOptions& opt) {
  if (opt.corpus_only) {
    res.skipped = true;
    res.note = "root tracking disabled by --corpus-only";
    return;
  }
  TrigonalCurve curve{Number(opt.r)};
  for (const auto& [name, group] : family_groups()) {
    auto t0 = Clock::now();
    std::string got;
    bool ok = false;
    try {
      // the fiber at infinity is singular, so the disk is taken in the chart centered there
      auto cfg = recentered_configuration(section_configuration(named_family(name, curve).section, curve), -1.0);
      MonodromyData m = braid_monodromy(cfg, track_options(opt));
      ok = m.infinity_check();
      got = ok ? "conjugation by rho^2" : "differs: " + m.boundary_braid().to_string();
    } catch (const std::exception& e) {
      got = std::string("error: ") + e.what();
    }
    double s = since(t0);
    check(res, name + " boundary product", "conjugation by rho^2", got, ok);
    check(res, name + " runtime", "<= " + fmt(opt.monodromy_seconds) + " s", fmt(s, 3) + " s", s <= opt.monodromy_seconds);
  }
}

void regression(CriterionResult& res, const VerifyOptions& opt) {
  TrigonalCurve curve{Number(opt.r)};
  for (const auto& [name, group] : family_groups()) {
    std::string got;
    bool ok = false;
    try {
      Presentation p;
      if (opt.corpus_only) {
        p = corpus_presentation("pi1bar_" + name);
      } else {
        auto cfg = section_configuration(named_family(name, curve).section, curve);
        p = monodromy_presentation(braid_monodromy(cfg, track_options(opt)));
      }
      InvariantSuite s = invariant_suite(tietze_simplify(double_cover(p, "delta")), opt.coset_cap);
      InvariantSuite want = invariant_suite(corpus_presentation(group), opt.coset_cap);
      got = s.to_string();
      ok = s == want;
      check(res, name + " vs " + group, want.to_string(), got, ok);
    } catch (const std::exception& e) {
      check(res, name + " vs " + group, "suite of " + group, std::string("error: ") + e.what(), false);
    }
  }
}

// ---- groups ----

void abelianizations(CriterionResult& res, const VerifyOptions&) {
  for (const auto& g : corpus_groups())
    check_equal(res, g, "Z6", abelianization(corpus_presentation(g)).to_string());
}

std::string order_string(const std::optional<long>& o) { return o ? std::to_string(*o) : "over cap"; }

void finite_quotients(CriterionResult& res, const VerifyOptions& opt) {
  auto t0 = Clock::now();
  auto quotient = [&](const std::string& g, int k) {
    Presentation p = corpus_presentation(g);
    for (const auto& w : generator_powers(p, k)) p.add_relator(w);
    return p;
  };
  auto order = [&](const std::string& g, int k) {
    Presentation p = corpus_presentation(g);
    return quotient_order(p, generator_powers(p, k), opt.coset_cap);
  };
  auto involutions = [&](const std::string& g) -> std::string {
    CosetTable t = todd_coxeter(quotient(g, 2), {}, opt.coset_cap);
    return t.complete ? std::to_string(involution_count(t)) : "over cap";
  };
  check_equal(res, "B3torus mod squares", "6", order_string(order("B3torus", 2)));
  check_equal(res, "G0 mod squares", "24", order_string(order("G0", 2)));
  check_equal(res, "G3 mod squares", "24", order_string(order("G3", 2)));
  check_equal(res, "G3 mod squares, involutions", "1", involutions("G3"));
  check_equal(res, "G0 mod squares, involutions", "9", involutions("G0"));
  check_equal(res, "G0 mod 4th powers", "192", order_string(order("G0", 4)));
  check_equal(res, "G3 mod 4th powers", "1536", order_string(order("G3", 4)));
  double s = since(t0);
  check(res, "runtime", "<= " + fmt(opt.coset_seconds) + " s", fmt(s, 3) + " s", s <= opt.coset_seconds);
}

void alexander(CriterionResult& res, const VerifyOptions& opt) {
  for (const auto& g : corpus_groups()) {
    Presentation p = corpus_presentation(g);
    check_equal(res, g + " Alexander polynomial", "t^2 - t + 1", poly_to_string(alexander_polynomial(p)));
    bool torsion = g == "G2prime" || g == "G2second";
    auto c = commutant_abelianization(p, opt.coset_cap);
    check_equal(res, g + " commutant abelianization", torsion ? "Z2 x Z2 x Z^2" : "Z^2", c ? c->to_string() : "unknown");
  }
}

void properness(CriterionResult& res, const VerifyOptions& opt) {
  auto order = [&](const std::string& g, int k) {
    Presentation p = corpus_presentation(g);
    return quotient_order(p, generator_powers(p, k), opt.coset_cap);
  };
  auto g3 = order("G3", 4), g0 = order("G0", 4);
  check(res, "G3 -> G0 proper: mod 4th powers", "1536 > 192", order_string(g3) + " > " + order_string(g0),
        g3 && g0 && *g3 == 1536 && *g0 == 192);
  auto s0 = order("G0", 2), sb = order("B3torus", 2);
  check(res, "G0 -> B3/(s1 s2)^3 proper: mod squares", "24 > 6", order_string(s0) + " > " + order_string(sb),
        s0 && sb && *s0 == 24 && *sb == 6);
  auto base = commutant_abelianization(corpus_presentation("B3torus"), opt.coset_cap);
  for (std::string g : {"G2prime", "G2second"}) {
    auto c = commutant_abelianization(corpus_presentation(g), opt.coset_cap);
    check(res, g + " -> B3/(s1 s2)^3 proper: commutant", "Z2 x Z2 x Z^2 vs Z^2",
          (c ? c->to_string() : "unknown") + " vs " + (base ? base->to_string() : "unknown"),
          c && base && c->to_string() == "Z2 x Z2 x Z^2" && base->to_string() == "Z^2");
  }
}

void fingerprints(CriterionResult& res, const VerifyOptions& opt) {
  auto t0 = Clock::now();
  auto a = hom_fingerprint(corpus_presentation("G2prime"), opt.fingerprint_order);
  auto b = hom_fingerprint(corpus_presentation("G2second"), opt.fingerprint_order);
  double s = since(t0);
  std::vector<std::string> diff;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (!(a[i] == b[i]))
      diff.push_back(a[i].target + ": " + std::to_string(a[i].count.homs) + "/" + std::to_string(a[i].count.epis) +
                     " vs " + std::to_string(b[i].count.homs) + "/" + std::to_string(b[i].count.epis));
  check(res, "targets of order <= " + std::to_string(opt.fingerprint_order), "equal (hom, epi) counts",
        diff.empty() ? std::to_string(a.size()) + " targets equal" : join(diff, "; "), diff.empty() && a.size() == b.size());
  check(res, "runtime", "<= " + fmt(opt.fingerprint_seconds) + " s", fmt(s, 3) + " s", s <= opt.fingerprint_seconds);
}

// ---- perturbation ----

void collapses(CriterionResult& res, const VerifyOptions& opt) {
  for (std::string id : {"eq1/A1->0", "G3/A3->A2", "eq3/A2->A1", "G3/A3->2A1"}) {
    const PerturbationRule& rule = perturbation_rule(id);
    InvariantSuite got = invariant_suite(apply_perturbation(corpus_presentation(rule.presentation), rule), opt.coset_cap);
    InvariantSuite want = invariant_suite(corpus_presentation(rule.expected), opt.coset_cap);
    check(res, id + " gives " + rule.expected, want.to_string(), got.to_string(), got == want);
  }
}

std::string local_list(const std::vector<LocalPerturbation>& v, bool with_group) {
  std::vector<std::string> s;
  for (const auto& p : v) s.push_back(types_to_string(p.result) + (with_group ? ":" + to_string(p.group) : ""));
  std::sort(s.begin(), s.end());
  return join(s);
}

std::string sorted_list(std::vector<std::string> s) {
  for (auto& x : s) {
    std::vector<SingularityType> t;
    if (x != "0") {
      auto set = parse_singularity_set(x);
      t = set.outer;
    }
    x = types_to_string(t);
  }
  std::sort(s.begin(), s.end());
  return join(s);
}

std::string sorted_pairs(std::vector<std::pair<std::string, std::string>> s) {
  std::vector<std::string> out;
  for (auto& [set, group] : s) {
    std::vector<SingularityType> t;
    if (set != "0") t = parse_singularity_set(set).outer;
    out.push_back(types_to_string(t) + ":" + group);
  }
  std::sort(out.begin(), out.end());
  return join(out);
}

void enumeration(CriterionResult& res, const VerifyOptions&) {
  auto e6 = perturb_point({'E', 6});
  std::vector<std::pair<std::string, std::string>> e6_want = {
      {"2A2+A1", "B4"}, {"A5", "B3"},     {"2A2", "B3"},     {"D5", "Z"},     {"D4", "Z"},  {"A4+A1", "Z"},
      {"A4", "Z"},      {"A3+A1", "Z"},   {"A3", "Z"},       {"A2", "Z"},     {"A2+A1", "Z"}, {"A2+2A1", "Z"},
      {"0", "Z"},       {"A1", "Z"},      {"2A1", "Z"},      {"3A1", "Z"}};
  check_equal(res, "E6: " + std::to_string(e6_want.size()) + " entries", sorted_pairs(e6_want), local_list(e6, true));
  auto a5 = perturb_point({'A', 5});
  std::vector<std::pair<std::string, std::string>> a5_want = {
      {"2A2", "B3"}, {"A3+A1", "ZxZ"}, {"3A1", "ZxZ"}, {"A4", "Z"}, {"A3", "Z"},
      {"A2+A1", "Z"}, {"A2", "Z"},     {"0", "Z"},     {"A1", "Z"}, {"2A1", "Z"}};
  check_equal(res, "A5: " + std::to_string(a5_want.size()) + " entries", sorted_pairs(a5_want), local_list(a5, true));
  auto a2 = perturb_point({'A', 2});
  check_equal(res, "A2", sorted_list({"A1", "0"}), local_list(a2, false));
}

struct Entry {
  int id;
  std::string title, category, tolerance;
  Source source;
  std::function<void(CriterionResult&, const VerifyOptions&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> v = {
      {1, "discriminant of f_r", "curves", "exact", Source::Published, discriminant},
      {2, "parameterization", "curves", "exact", Source::Published, parameterization},
      {3, "double tangent elimination", "curves", "exact", Source::Published, double_tangent},
      {4, "named-family coefficients", "curves", "exact", Source::Published, family_coefficients},
      {5, "intersection data at r = 3", "curves", "x to 3 significant figures; multiplicities exact", Source::Published,
       intersection_data},
      {6, "singularity table realized", "curves", "exact set equality", Source::Derived, classification_table},
      {7, "monodromy at infinity", "monodromy", "exact automorphism equality; <= 60 s each", Source::Published, infinity},
      {8, "presentation regression", "monodromy", "equal invariant suites", Source::Published, regression},
      {9, "abelianization", "groups", "exact", Source::Published, abelianizations},
      {10, "finite quotients", "groups", "exact orders; <= 30 s total", Source::Published, finite_quotients},
      {11, "Alexander data", "groups", "exact", Source::Published, alexander},
      {12, "proper epimorphisms", "groups", "exact", Source::Published, properness},
      {13, "perturbation collapses", "perturbation", "equal invariant suites", Source::Published, collapses},
      {14, "perturbation enumeration", "perturbation", "exact set equality", Source::Published, enumeration},
      {15, "hom fingerprint parity", "groups", "equality; <= 120 s", Source::Derived, fingerprints},
  };
  return v;
}

}  // namespace

std::vector<CriterionResult> run_criteria(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  for (const auto& e : registry()) {
    if (!opt.section.empty() && opt.section != e.category) continue;
    CriterionResult r;
    r.id = e.id;
    r.title = e.title;
    r.category = e.category;
    r.tolerance = e.tolerance;
    r.source = e.source;
    auto t0 = Clock::now();
    try {
      e.run(r, opt);
    } catch (const std::exception& ex) {
      check(r, "run", "no error", std::string("error: ") + ex.what(), false);
    }
    r.seconds = since(t0);
    out.push_back(std::move(r));
  }
  return out;
}

std::string criteria_text(const std::vector<CriterionResult>& results, bool details) {
  std::ostringstream s;
  for (const auto& r : results) {
    s << (r.skipped ? "SKIP" : r.pass() ? "PASS" : "FAIL") << "  " << r.id << ". " << r.title << "  [" << r.tolerance
      << "; " << to_string(r.source) << "; " << fmt(r.seconds, 3) << " s]\n";
    if (!r.note.empty()) s << "      note: " << r.note << "\n";
    if (!details) continue;
    for (const auto& c : r.checks)
      s << "      " << (c.pass ? "ok  " : "BAD ") << c.what << ": expected " << c.expected << ", got " << c.actual << "\n";
  }
  int failed = 0, skipped = 0;
  for (const auto& r : results) {
    failed += !r.pass();
    skipped += r.skipped;
  }
  s << results.size() - failed - skipped << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return s.str();
}

std::string criteria_json(const std::vector<CriterionResult>& results) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json c = nlohmann::json::array();
    for (const auto& x : r.checks)
      c.push_back({{"what", x.what}, {"expected", x.expected}, {"actual", x.actual}, {"pass", x.pass}});
    j.push_back({{"id", r.id},
                 {"title", r.title},
                 {"category", r.category},
                 {"tolerance", r.tolerance},
                 {"source", to_string(r.source)},
                 {"status", r.skipped ? "skip" : r.pass() ? "pass" : "fail"},
                 {"seconds", r.seconds},
                 {"note", r.note},
                 {"checks", c}});
  }
  return j.dump(2);
}

}  // namespace sextic
