#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sextic/algebra/resultant.hpp"
#include "sextic/curves/classify.hpp"
#include "sextic/curves/families.hpp"

using namespace sextic;

// ---- hand-checked values at r = 3 ----

TEST_CASE("trigonal curve data") {
  TrigonalCurve c;
  CHECK(c.vertical_tangent_x() == Number(4));
  CHECK(c.vertical_tangent_t() == Number(-2));
  CHECK(c.x_at(Number(Rational(-1, 2))) == Number(Rational(5, 8)));
  CHECK(c.x_at(Number(-1)) == Number(2));
  CHECK(trigonal_discriminant_symbolic().to_string() == "4*x^3*r^3 - 27*x^4");
  CHECK(parameterization_residual_symbolic().is_zero());
  CHECK(verify_parameterization(c));
}

TEST_CASE("double tangent eliminant") {
  QPoly e = double_tangent_elimination();
  auto v = e.vars();
  QPoly t1 = QPoly::variable(v, "t1"), t2 = QPoly::variable(v, "t2"), r = QPoly::variable(v, "r");
  CHECK(e == -((t1 - t2).pow(2) * (Rational(3) * t1 + Rational(3) * t2 + r)));
}

TEST_CASE("3e6+a1 section and divisor") {
  TrigonalCurve c;
  NamedFamily f = named_family("3e6+a1", c);
  CHECK(f.section == Section(Number(Rational(-1, 12)), Number(Rational(-1, 3)), Number(0)));
  IntersectionDivisor d = intersection_divisor(f.section, c);
  CHECK(d.total() == 6);
  CHECK(d.pattern() == std::vector<int>{3, 2, 1});
  CHECK(d.cusp_multiplicity() == 3);
  CHECK(d.multiplicity_at(Number(-1)) == 2);  // x = 2
  CHECK(d.multiplicity_at(Number(-4)) == 1);  // x = -16
  CHECK(c.x_at(Number(-4)) == Number(-16));
}

TEST_CASE("2e6+2a2+a3 quadruple point at x = 5/8") {
  TrigonalCurve c;
  NamedFamily f = named_family("2e6+2a2+a3", c);
  CHECK(f.section == Section(Number(Rational(-16, 243)), Number(Rational(-88, 243)), Number(Rational(1, 486))));
  IntersectionDivisor d = intersection_divisor(f.section, c);
  CHECK(d.pattern() == std::vector<int>{4, 1, 1});
  const DivisorEntry* q = d.at(Number(Rational(-1, 2)));
  REQUIRE(q);
  CHECK(q->multiplicity == 4);
  CHECK(q->x_exact == Number(Rational(5, 8)));
}

TEST_CASE("Galois-conjugate pair") {
  TrigonalCurve c;
  NamedFamily a = named_family("2e6+a5+a2.1", c), b = named_family("2e6+a5+a2.2", c);
  CHECK(a.section.a == b.section.a.conjugate());
  CHECK(a.section.b == b.section.b.conjugate());
  CHECK(classify_sextic(a.section, c).set == parse_singularity_set("(2E6+A5)+A2"));
  CHECK(classify_sextic(b.section, c).set == parse_singularity_set("(2E6+A5)+A2"));
}

TEST_CASE("section guards") {
  CHECK_THROWS_AS(Section(Number(0), Number(1), Number(1)), std::domain_error);
  TrigonalCurve c;
  CHECK_THROWS_AS(cusp_tangent_section(c, Number(0)), std::domain_error);
  CHECK_THROWS_AS(named_family("bogus", c), std::out_of_range);
}

// ---- properties ----

TEST_CASE("every table row is realized for several r") {
  for (long rv : {1L, 2L, 3L, -5L}) {
    TrigonalCurve c{Number(rv)};
    auto rows = table_realizations(c);
    CHECK(rows.size() == 10);
    for (const auto& z : rows) {
      Classification k = classify_sextic(z.section, c);
      CHECK_MESSAGE(!k.degenerate, z.construction);
      CHECK_MESSAGE(k.set == z.expected, z.construction << " at r = " << rv);
    }
  }
}

TEST_CASE("divisor totals are six") {
  TrigonalCurve c;
  for (const auto& z : table_realizations(c)) CHECK(intersection_divisor(z.section, c).total() == 6);
}

TEST_CASE("sextic is of torus type") {
  CHECK(verify_torus_structure(TrigonalCurve()));
  CHECK(verify_torus_structure(TrigonalCurve(Number(Rational(7, 2)))));
}

TEST_CASE("singular fibers of 3e6+a1") {
  TrigonalCurve c;
  FiberList f = singular_fibers(named_family("3e6+a1", c).section, c);
  std::vector<std::string> labels;
  for (const auto& x : f.fibers) labels.push_back(x.label);
  CHECK(labels == std::vector<std::string>{"transversal intersection x=-16", "cusp x=0", "tangency x=2", "vertical tangent x=4"});
  CHECK_FALSE(f.nonreal);
}
