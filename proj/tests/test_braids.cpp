#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sextic/braids/braid.hpp"

using namespace sextic;

TEST_CASE("Artin action of s1") {
  Braid s1(2, {1});
  CHECK(artin_act(s1, {1}) == Word{1, 2, -1});
  CHECK(artin_act(s1, {2}) == Word{1});
  // the product z1 z2 is fixed
  CHECK(artin_act(s1, {1, 2}) == Word{1, 2});
}

TEST_CASE("letters act in reading order") {
  Braid s1(3, {1}), s2(3, {2});
  Word z1{1};
  CHECK(artin_act(s1 * s2, z1) == artin_act(s2, artin_act(s1, z1)));
}

TEST_CASE("braid relations") {
  CHECK(braid_equal(Braid(3, {1, 2, 1}), Braid(3, {2, 1, 2})));
  CHECK(braid_equal(Braid(4, {1, 3}), Braid(4, {3, 1})));
  CHECK_FALSE(braid_equal(Braid(3, {1, 2}), Braid(3, {2, 1})));
  CHECK(braid_equal(Braid(3, {1, -1, 2}), Braid(3, {2})));
}

TEST_CASE("permutations") {
  CHECK(permutation_of(Braid(3, {1})) == Permutation{1, 0, 2});
  CHECK(is_identity(permutation_of(Braid(3, {1, 1}))));
  CHECK(permutation_of(Braid(3, {1, 2})).size() == 3);
}

TEST_CASE("text form") {
  Braid b = Braid::parse("B4: s2 s1^-1 s3");
  CHECK(b.strands() == 4);
  CHECK(b.letters() == std::vector<int>{2, -1, 3});
  CHECK(b.to_string() == "B4: s2 s1^-1 s3");
  CHECK(Braid::parse(b.to_string()) == b);
}

TEST_CASE("the full twist is central and acts by conjugation") {
  for (int n = 2; n <= 4; ++n) {
    Braid d2 = Braid::full_twist(n);  // (s1 ... s_{n-1})^n
    for (int i = 1; i < n; ++i) CHECK(braid_equal(d2 * Braid(n, {i}), Braid(n, {i}) * d2));
    Word rho;
    for (int j = 1; j <= n; ++j) rho.push_back(j);
    for (int j = 1; j <= n; ++j) {
      Word img = artin_act(d2, {j});
      CHECK((img == conjugate({j}, rho) || img == conjugate({j}, inverse(rho))));
    }
  }
}

TEST_CASE("inverse and reduction") {
  Braid b(4, {1, 2, -3, 2});
  CHECK(braid_equal(b * b.inverse(), Braid(4)));
  CHECK((b * b.inverse()).reduced().length() == 0);
  CHECK(braid_equal(b.power(3), b * b * b));
}
