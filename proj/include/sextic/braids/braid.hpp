#pragma once

#include <string>
#include <vector>

#include "sextic/algebra/word.hpp"

namespace sextic {

/// Braid on n strands as a word in the Artin generators s1..s_{n-1}.
/// Letter i > 0 is s_i, -i its inverse.
class Braid {
 public:
  Braid() = default;
  Braid(int strands, std::vector<int> letters = {});

  int strands() const { return n_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }

  Braid operator*(const Braid& o) const;
  Braid inverse() const;
  Braid power(int k) const;
  /// Cancel adjacent s_i s_i^-1 pairs.
  Braid reduced() const;

  /// Text form "B4: s2 s1 s1 s2 s3 s3" (inverses "s1^-1").
  std::string to_string() const;
  static Braid parse(const std::string& text);

  static Braid full_twist(int n);

  friend bool operator==(const Braid& a, const Braid& b) = default;

 private:
  int n_ = 2;
  std::vector<int> letters_;
};

/// Images of the free generators under an automorphism.
struct FreeGroupAutomorphism {
  int rank = 0;
  std::vector<Word> images;
  Word apply(const Word& w) const;
  friend bool operator==(const FreeGroupAutomorphism&, const FreeGroupAutomorphism&) = default;
};

/// Artin action: s_i sends z_i -> z_i z_{i+1} z_i^-1, z_{i+1} -> z_i.
/// Letters act in reading order: the image under s_a s_b is the s_b-image
/// of the s_a-image.
Word artin_act(const Braid& b, const Word& w);
FreeGroupAutomorphism artin_automorphism(const Braid& b);

/// Equality via the faithful Artin representation.
bool braid_equal(const Braid& a, const Braid& b);

using Permutation = std::vector<int>;  // 0-based images

/// Image in S_n: strand at position p ends at position perm[p].
Permutation permutation_of(const Braid& b);
bool is_identity(const Permutation& p);
Permutation compose(const Permutation& first, const Permutation& second);

}  // namespace sextic
