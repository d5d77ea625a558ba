#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sextic/algebra/integer_matrix.hpp"
#include "sextic/algebra/polynomial.hpp"
#include "sextic/algebra/quadratic.hpp"
#include "sextic/algebra/resultant.hpp"
#include "sextic/algebra/singularity.hpp"
#include "sextic/algebra/upoly.hpp"
#include "sextic/algebra/word.hpp"

using namespace sextic;

// ---- hand-checked values ----

TEST_CASE("rational parsing") {
  CHECK(parse_rational("0.625") == Rational(5, 8));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("quadratic numbers") {
  QuadraticNumber s = QuadraticNumber::sqrt_of(3);
  CHECK((1 + s) * (1 - s) == QuadraticNumber(-2));
  CHECK((QuadraticNumber(3) - 2 * s).sign() < 0);  // 3 - 2 sqrt 3 = -0.46
  CHECK((QuadraticNumber(2) - s).sign() > 0);
  CHECK((s * s).is_rational());
  CHECK(QuadraticNumber(1) / (2 + s) == 2 - s);
}

TEST_CASE("discriminant of y^2 - x and of the depressed cubic") {
  std::vector<std::string> v{"x", "y"};
  QPoly x = QPoly::variable(v, "x"), y = QPoly::variable(v, "y");
  CHECK(discriminant_y(y * y - x) == Rational(4) * x);
  std::vector<std::string> w{"p", "q", "y"};
  QPoly p = QPoly::variable(w, "p"), q = QPoly::variable(w, "q"), z = QPoly::variable(w, "y");
  QPoly want = Rational(-4) * p.pow(3) - Rational(27) * q.pow(2);
  CHECK(discriminant_y(z.pow(3) + p * z + q) == want);
}

TEST_CASE("squarefree decomposition of (t-1)^2 (t+2)") {
  using U = UPoly<Rational>;
  U f = U({Rational(-1), Rational(1)}) * U({Rational(-1), Rational(1)}) * U({Rational(2), Rational(1)});
  auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == U({Rational(2), Rational(1)}));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == U({Rational(-1), Rational(1)}));
  CHECK(parts[1].second == 2);
}

TEST_CASE("Sturm isolation of t^2 - 2") {
  UPoly<Rational> f({Rational(-2), Rational(0), Rational(1)});
  auto roots = SturmChain<Rational>(f).isolate();
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].hi <= roots[1].lo);
  SturmChain<Rational> chain(f);
  auto a = chain.refine(roots[0], Rational(1, 1000)), b = chain.refine(roots[1], Rational(1, 1000));
  // 1.414 < sqrt 2 < 1.415
  CHECK(a.lo >= Rational(-1415, 1000));
  CHECK(a.hi <= Rational(-1414, 1000));
  CHECK(b.lo >= Rational(1414, 1000));
  CHECK(b.hi <= Rational(1415, 1000));
}

TEST_CASE("Smith normal form") {
  auto s = smith_normal_form(IntegerMatrix{{2, 4}, {6, 8}});
  CHECK(s.invariants.to_string() == "Z2 x Z4");
  auto z = smith_normal_form(IntegerMatrix{{6}});
  CHECK(z.invariants.to_string() == "Z6");
  auto f = smith_normal_form(IntegerMatrix{{0, 0}});
  CHECK(f.invariants.to_string() == "Z^2");
}

TEST_CASE("singularity sets") {
  auto s = parse_singularity_set("(2E6+2A2)+A3");
  CHECK(s.to_string() == "(2E6+2A2)+A3");
  CHECK(s.total_milnor() == 19);
  CHECK(parse_singularity_set("A1+A2") == parse_singularity_set("A2+A1"));
  CHECK(parse_singularity_set("0").empty());
}

// ---- properties ----

TEST_CASE("free reduction and inverses") {
  Word w{1, 2, -2, 3};
  CHECK(free_reduce(w) == Word{1, 3});
  CHECK(free_reduce(concat(w, inverse(w))).empty());
  CHECK(commutator({1}, {2}) == Word{1, 2, -1, -2});
  CHECK(exponent_sum(power({1, 2}, 3), 1) == 3);
}

TEST_CASE("exact polynomial division round trips") {
  std::vector<std::string> v{"x", "y"};
  QPoly x = QPoly::variable(v, "x"), y = QPoly::variable(v, "y");
  QPoly a = x * x + y - QPoly::constant(v, Rational(3)), b = x - y;
  auto q = (a * b).divide_exact(b);
  REQUIRE(q);
  CHECK(*q == a);
  CHECK_FALSE((a * b + QPoly::constant(v, Rational(1))).divide_exact(b));
}

TEST_CASE("determinant of an integer matrix") {
  CHECK(IntegerMatrix({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}}).determinant() == 4);
  CHECK(IntegerMatrix({{1, 2}, {2, 4}}).determinant() == 0);
}
