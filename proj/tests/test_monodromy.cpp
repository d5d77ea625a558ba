#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sextic/curves/families.hpp"
#include "sextic/groups/corpus.hpp"
#include "sextic/groups/hom_count.hpp"
#include "sextic/groups/invariants.hpp"
#include "sextic/groups/tietze.hpp"
#include "sextic/groups/vankampen.hpp"
#include "sextic/monodromy/monodromy.hpp"

using namespace sextic;

namespace {

// y^2 - x and y^3 - x^2; coefficients[k][j] multiply x^j y^k
FiberPolynomial branch() { return FiberPolynomial({{Complex(0), Complex(-1)}, {Complex(0)}, {Complex(1)}}); }
FiberPolynomial cusp() { return FiberPolynomial({{0.0, 0.0, -1.0}, {0.0}, {0.0}, {1.0}}); }

FiberConfiguration family_config(const std::string& name) {
  TrigonalCurve c;
  return section_configuration(named_family(name, c).section, c);
}

std::vector<std::string> words(const MonodromyData& m) {
  std::vector<std::string> out;
  for (const auto& b : m.braids) out.push_back(b.braid.to_string());
  return out;
}

}  // namespace

// ---- local models ----

TEST_CASE("y^2 = x around the origin swaps the roots") {
  auto t = track_roots(branch(), Path::circle(Complex(0), 1.0, 0.0));
  CHECK(t.permutation() == Permutation{1, 0});
  auto cfg = make_configuration(branch(), 1, {0.0}, {"branch"}, 1.0);
  CHECK(local_braid(cfg, std::size_t(0)).to_string() == "B2: s1");
}

TEST_CASE("y^3 = x^2 around the origin is a 3-cycle") {
  auto t = track_roots(cusp(), Path::circle(Complex(0), 1.0, 0.0));
  auto p = t.permutation();
  CHECK_FALSE(is_identity(p));
  CHECK_FALSE(is_identity(compose(p, p)));
  CHECK(is_identity(compose(compose(p, p), p)));
  auto cfg = make_configuration(cusp(), 1, {0.0}, {"cusp"}, 1.0);
  Braid b = local_braid(cfg, std::size_t(0));
  // rigid rotation by 4 pi / 3, read with strands in decreasing real part
  CHECK(braid_equal(b, Braid(3, {2, 1, 2, 1})));
}

TEST_CASE("a constant path matches every root to itself") {
  Path p{{PathSegment::line(Complex(0.5), Complex(0.5))}};
  auto t = track_roots(cusp(), p);
  CHECK(is_identity(t.permutation()));
}

TEST_CASE("tracking reports a singular path") {
  Path through{{PathSegment::line(Complex(-1), Complex(1))}};
  CHECK_THROWS_AS(track_roots(branch(), through), TrackingError);
}

// ---- the four configurations ----

TEST_CASE("3e6+a1 braids") {
  MonodromyData m = braid_monodromy(family_config("3e6+a1"));
  CHECK(m.config.names == std::vector<std::string>{"alpha", "delta", "beta", "gamma"});
  REQUIRE(m.braids.size() == 4);
  CHECK(m.braids[2].label == "tangency x=2");
  CHECK(braid_equal(m.braids[2].braid, Braid(4, {2, 2, 2, 2})));
  // s2^4 on delta, beta yields (delta beta)^2 = (beta delta)^2
  Presentation rel = vankampen({m.braids[2]}, 4, 0, m.config.names);
  Presentation want = parse_presentation("gens: alpha, delta, beta, gamma; rels: (delta beta)^2 = (beta delta)^2;");
  for (const auto& g : {FiniteGroup::symmetric(3), FiniteGroup::symmetric(4), FiniteGroup::special_linear_2(3)})
    CHECK(hom_count(rel, g) == hom_count(want, g));
  // collisions of two branches leave the permutation trivial
  for (const auto& b : m.braids) {
    bool collision = b.label.find("intersection") != std::string::npos || b.label.find("tangency") != std::string::npos;
    CHECK_MESSAGE(is_identity(permutation_of(b.braid)) == collision, b.label);
  }
}

TEST_CASE("presentations of the four configurations") {
  std::pair<std::string, std::string> cases[] = {
      {"2e6+2a2+a3", "G3"}, {"3e6+a1", "G0"}, {"2e6+a5+a2.1", "G2prime"}, {"2e6+a5+a2.2", "G2second"}};
  for (const auto& [name, group] : cases) {
    MonodromyData m = braid_monodromy(family_config(name));
    Presentation p = tietze_simplify(double_cover(monodromy_presentation(m), "delta"));
    CHECK_MESSAGE(invariant_suite(p) == invariant_suite(corpus_presentation(group)), name);
  }
}

TEST_CASE("monodromy at infinity in the chart centered at infinity") {
  for (const auto& name : family_names()) {
    auto rc = recentered_configuration(family_config(name), -1.0);
    MonodromyData m = braid_monodromy(rc);
    CHECK_MESSAGE(m.infinity_check(), name);
    CHECK(braid_equal(m.boundary_braid(), Braid::full_twist(4).power(2)));
  }
}

TEST_CASE("braids do not depend on the initial step or the detour radius") {
  for (const auto& name : family_names()) {
    FiberConfiguration c = family_config(name);
    auto ref = words(braid_monodromy(c));
    TrackOptions half;
    half.initial_step /= 2;
    CHECK_MESSAGE(words(braid_monodromy(c, half)) == ref, name);
    FiberConfiguration small = c;
    small.detour_scale = 0.125;
    auto alt = braid_monodromy(small);
    auto orig = braid_monodromy(c);
    for (std::size_t i = 0; i < alt.braids.size(); ++i)
      CHECK_MESSAGE(braid_equal(alt.braids[i].braid, orig.braids[i].braid), name << " " << orig.braids[i].label);
  }
}

TEST_CASE("repeated runs are identical") {
  FiberConfiguration c = family_config("2e6+2a2+a3");
  CHECK(words(braid_monodromy(c)) == words(braid_monodromy(c)));
}

TEST_CASE("basis transport") {
  FiberConfiguration c = family_config("2e6+2a2+a3");
  auto id = basis_transport(c, c.base, c.names);
  for (std::size_t j = 0; j < c.names.size(); ++j) CHECK(id.at(c.names[j]) == Word{static_cast<int>(j) + 1});

  // far left of every fiber: alpha1 = delta beta delta^-1, beta1 = beta^-1 alpha beta, gamma1 = gamma
  Presentation names = monodromy_presentation(braid_monodromy(c));
  auto far = basis_transport(c, c.fibers.front() - 5, {"alpha1", "beta1", "gamma1", "delta1"});
  CHECK(names.word_to_string(far.at("alpha1")) == "delta beta delta^-1");
  CHECK(names.word_to_string(far.at("beta1")) == "beta^-1 alpha beta");
  CHECK(names.word_to_string(far.at("gamma1")) == "gamma");

  FiberConfiguration c1 = family_config("2e6+a5+a2.1");
  Presentation n1 = monodromy_presentation(braid_monodromy(c1));
  auto far1 = basis_transport(c1, c1.fibers.front() - 5, {"alpha1", "beta1", "gamma1", "delta1"});
  CHECK(n1.word_to_string(far1.at("alpha1")) == "beta");
  // conjugation by delta^-1 equals conjugation by delta since delta^2 = 1 in the trigonal-curve group
  CHECK(n1.word_to_string(far1.at("beta1")) == "delta^-1 beta^-1 alpha beta delta");
  CHECK(n1.word_to_string(far1.at("gamma1")) == "gamma");
}

TEST_CASE("MonodromyData JSON round trip") {
  MonodromyData m = braid_monodromy(family_config("3e6+a1"));
  MonodromyData back = monodromy_from_json(monodromy_json(m));
  REQUIRE(back.braids.size() == m.braids.size());
  for (std::size_t i = 0; i < m.braids.size(); ++i) {
    CHECK(back.braids[i].label == m.braids[i].label);
    CHECK(back.braids[i].braid == m.braids[i].braid);
  }
  CHECK(back.config.names == m.config.names);
  CHECK(invariant_suite(monodromy_presentation(back)) == invariant_suite(monodromy_presentation(m)));
}

TEST_CASE("non-real fibers are rejected") {
  TrigonalCurve c;
  Section generic(Number(Rational(1, 81)), Number(Rational(1, 3)), Number(1));
  FiberList f = singular_fibers(generic, c);
  REQUIRE(f.nonreal);
  CHECK_THROWS_AS(section_configuration(generic, c), std::domain_error);
}
