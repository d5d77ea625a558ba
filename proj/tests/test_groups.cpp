#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sextic/groups/abelian.hpp"
#include "sextic/groups/corpus.hpp"
#include "sextic/groups/coset.hpp"
#include "sextic/groups/finite_group.hpp"
#include "sextic/groups/hom_count.hpp"
#include "sextic/groups/invariants.hpp"
#include "sextic/groups/perturbation.hpp"
#include "sextic/groups/tietze.hpp"
#include "sextic/groups/vankampen.hpp"

using namespace sextic;

namespace {
Presentation trefoil() { return parse_presentation("gens: a, b; rels: a b a = b a b;"); }
Presentation s3() { return parse_presentation("gens: a, b; rels: a^2, b^2, (a b)^3;"); }
}  // namespace

// ---- hand-checked groups ----

TEST_CASE("trefoil group") {
  Presentation p = trefoil();
  CHECK(abelianization(p).to_string() == "Z");
  CHECK(poly_to_string(alexander_polynomial(p)) == "t^2 - t + 1");
  auto c = commutant_abelianization(p);
  // the commutator subgroup is free of rank 2 but G/G' is infinite
  CHECK_FALSE(c.has_value());
}

TEST_CASE("coset enumeration of S3 and its subgroups") {
  CHECK(todd_coxeter(s3()).index() == 6);
  CHECK(todd_coxeter(s3(), {{1}}).index() == 3);
  CHECK(todd_coxeter(s3(), {{1, 2}}).index() == 2);
  auto t = todd_coxeter(s3());
  CHECK(t.closes(s3()));
  CHECK(involution_count(t) == 3);
}

TEST_CASE("Reidemeister-Schreier on an index-2 subgroup of Z") {
  Presentation z = parse_presentation("gens: a; rels: ;");
  auto t = todd_coxeter(z, {{1, 1}});
  REQUIRE(t.complete);
  Presentation h = reidemeister_schreier(z, t);
  CHECK(h.rank() == 1);
  CHECK(abelianization(h).to_string() == "Z");
}

TEST_CASE("Reidemeister-Schreier on A3 inside S3") {
  auto t = todd_coxeter(s3(), {{1, 2}});
  REQUIRE(t.complete);
  CHECK(abelianization(tietze_simplify(reidemeister_schreier(s3(), t))).to_string() == "Z3");
}

TEST_CASE("hom counts") {
  FiniteGroup sym3 = FiniteGroup::symmetric(3);
  // a free generator may go anywhere
  Presentation free1 = parse_presentation("gens: a; rels: ;");
  CHECK(hom_count(free1, sym3).homs == 6);
  CHECK(hom_count(free1, FiniteGroup::cyclic(3)).epis == 2);
  Presentation z2 = parse_presentation("gens: a; rels: a^2;");
  CHECK(hom_count(z2, sym3).homs == 4);
  CHECK(hom_count(z2, sym3).epis == 0);
  CHECK(hom_count(s3(), sym3).epis == 6);
}

TEST_CASE("small-group catalogue") {
  // numbers of groups of orders 1..8: 1, 1, 1, 2, 1, 2, 1, 5
  CHECK(small_groups(8).size() == 14);
  CHECK(small_groups(24).size() == 74);
  CHECK(FiniteGroup::special_linear_2(3).order() == 24);
  CHECK(FiniteGroup::special_linear_2(3).involution_count() == 1);
  CHECK(FiniteGroup::symmetric(4).involution_count() == 9);
}

TEST_CASE("van Kampen presentation of a node and a cusp") {
  // s1^2: two transversal branches, the group is abelian
  auto node = vankampen({{"node", Braid(2, {1, 1})}}, 2, 0);
  CHECK(abelianization(node).to_string() == "Z^2");
  CHECK(hom_count(node, FiniteGroup::symmetric(3)).epis == 0);
  // s1^3: a cusp gives the braid relation
  auto cusp = vankampen({{"cusp", Braid(2, {1, 1, 1})}}, 2, 0);
  CHECK(abelianization(cusp).to_string() == "Z");
  CHECK(poly_to_string(alexander_polynomial(cusp)) == "t^2 - t + 1");
}

TEST_CASE("presentation text format") {
  Presentation p = parse_presentation("gens: a, b; rels: [a, b] {commute}, a^2 = b^3;");
  CHECK(p.rank() == 2);
  REQUIRE(p.relators.size() == 2);
  CHECK(p.notes[0] == "commute");
  CHECK(parse_presentation(p.to_string()).relators == p.relators);
  CHECK_THROWS_AS(parse_presentation("gens: a; rels: c;"), std::invalid_argument);
}

// ---- corpus ----

TEST_CASE("corpus groups abelianize to Z6") {
  for (std::string g : {"G0", "G3", "G2prime", "G2second", "B3torus"})
    CHECK_MESSAGE(abelianization(corpus_presentation(g)).to_string() == "Z6", g);
}

TEST_CASE("double covers of the trigonal-curve groups match the sextic groups") {
  std::pair<std::string, std::string> cases[] = {{"pi1bar_3e6+a1", "G0"},
                                                 {"pi1bar_2e6+2a2+a3", "G3"},
                                                 {"pi1bar_2e6+a5+a2.1", "G2prime"},
                                                 {"pi1bar_2e6+a5+a2.2", "G2second"}};
  for (const auto& [bar, g] : cases) {
    auto got = invariant_suite(tietze_simplify(double_cover(corpus_presentation(bar), "delta")));
    CHECK_MESSAGE(got == invariant_suite(corpus_presentation(g)), bar);
  }
}

TEST_CASE("unsimplified presentations agree with the simplified ones") {
  CHECK(invariant_suite(corpus_presentation("eq1")) == invariant_suite(corpus_presentation("G0")));
  CHECK(invariant_suite(corpus_presentation("eq3")) == invariant_suite(corpus_presentation("G2prime")));
}

TEST_CASE("Tietze simplification preserves invariants") {
  for (std::string g : {"eq1", "eq3", "G3"}) {
    Presentation p = corpus_presentation(g);
    Presentation q = tietze_simplify(p);
    CHECK(q.rank() <= p.rank());
    CHECK(invariant_suite(q) == invariant_suite(p));
  }
}

// ---- perturbations ----

TEST_CASE("local perturbations") {
  CHECK(perturb_point({'A', 2}).size() == 2);
  CHECK(perturb_point({'A', 5}).size() == 10);
  CHECK(perturb_point({'E', 6}).size() == 16);
  CHECK_THROWS(perturb_point({'D', 4}));
}

TEST_CASE("abelian collapses") {
  for (std::string id : {"G3/A2->A1", "G2prime/A5->A3+A1", "G2prime/A5->A4", "eq1/E6->A1"}) {
    const auto& rule = perturbation_rule(id);
    Presentation p = apply_perturbation(corpus_presentation(rule.presentation), rule);
    CHECK_MESSAGE(abelianization(p).to_string() == "Z6", id);
    auto c = commutant_abelianization(p);
    CHECK_MESSAGE((c && c->to_string() == "0"), id);
  }
}

TEST_CASE("enumerated sets keep the inner and outer tags") {
  auto sets = enumerate_perturbations(parse_singularity_set("(3E6)+A1"));
  bool found = false;
  for (const auto& s : sets) found = found || s == parse_singularity_set("(3E6)");
  CHECK(found);
  for (const auto& s : sets) CHECK(s.total_milnor() < 19);
}
