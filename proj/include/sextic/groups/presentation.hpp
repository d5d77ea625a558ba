#pragma once

#include <string>
#include <vector>

#include "sextic/algebra/word.hpp"

namespace sextic {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<std::string> notes;  // one per relator, may be empty

  int rank() const { return static_cast<int>(generators.size()); }
  /// 1-based index of a generator name; 0 when absent.
  int find(const std::string& name) const;
  int require(const std::string& name) const;

  void add_relator(const Word& w, const std::string& note = {});
  /// Relators freely reduced, trivial ones dropped, notes kept aligned.
  Presentation normalized() const;

  std::string word_to_string(const Word& w) const;
  /// "gens: a, b; rels: a b a^-1 b^-1, a a a;"
  std::string to_string() const;
  /// Parse a word over this presentation's generators ("a b^-1 (a b)^3 [a, b]").
  Word parse_word(const std::string& text) const;
};

/// Text grammar: "gens: a, b; rels: a b a^-1 b^-1, (a b)^3;".
/// Extensions: "u = v = w" chains, "[u, v]" commutators, '#' comments,
/// and an optional "note" in braces after a relator: "a b a^-1 {cusp}".
Presentation parse_presentation(const std::string& text);
Presentation load_presentation(const std::string& path);

}  // namespace sextic
