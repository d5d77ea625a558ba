#include "sextic/groups/invariants.hpp"

#include "sextic/groups/tietze.hpp"

namespace sextic {

namespace {

std::string order_string(const std::optional<long>& o) { return o ? std::to_string(*o) : "unknown"; }

}  // namespace

std::string InvariantSuite::to_string() const {
  return "abelianization " + abelianization.to_string() + "; mod squares " + order_string(mod_squares) +
         "; mod 4th powers " + order_string(mod_fourth_powers) + "; Alexander " + poly_to_string(alexander) +
         "; commutant " + (commutant ? commutant->to_string() : std::string("unknown"));
}

std::vector<Word> generator_powers(const Presentation& p, int k) {
  std::vector<Word> out;
  for (int g = 1; g <= p.rank(); ++g) out.push_back(Word(k, g));
  return out;
}

int involution_count(const CosetTable& regular) {
  auto words = regular.transversal();
  int count = 0;
  for (int c = 1; c < regular.index(); ++c)
    if (regular.act(c, words[c]) == 0) ++count;
  return count;
}

std::optional<AbelianInvariants> commutant_abelianization(const Presentation& p, std::size_t cap) {
  if (!abelianization(p).is_finite()) return std::nullopt;
  Presentation ab = p;
  for (int a = 1; a <= p.rank(); ++a)
    for (int b = a + 1; b <= p.rank(); ++b) ab.add_relator(commutator(Word{a}, Word{b}));
  // the table of G/G' is a coset table of G' in G
  CosetTable t = todd_coxeter(ab, {}, cap);
  if (!t.complete) return std::nullopt;
  Presentation sub = reidemeister_schreier(p, t);
  return abelianization(tietze_simplify(sub));
}

InvariantSuite invariant_suite(const Presentation& p, std::size_t cap) {
  InvariantSuite s;
  s.abelianization = abelianization(p);
  s.mod_squares = quotient_order(p, generator_powers(p, 2), cap);
  s.mod_fourth_powers = quotient_order(p, generator_powers(p, 4), cap);
  s.alexander = alexander_polynomial(p);
  s.commutant = commutant_abelianization(p, cap);
  return s;
}

}  // namespace sextic
