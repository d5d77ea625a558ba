#pragma once

#include <vector>

namespace sextic {

/// Free-group word: letter g > 0 is generator g (1-based), -g its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int n);
/// Cyclically reduced core of a freely reduced word.
Word cyclic_reduce(const Word& w);
Word conjugate(const Word& w, const Word& by);  // by * w * by^-1
Word commutator(const Word& a, const Word& b);  // a b a^-1 b^-1
int exponent_sum(const Word& w, int gen);

}  // namespace sextic
