#include "sextic/algebra/word.hpp"

#include <algorithm>
#include <cstdlib>

namespace sextic {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

Word power(const Word& w, int n) {
  Word base = n < 0 ? inverse(w) : w;
  Word out;
  for (int i = 0; i < std::abs(n); ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(out);
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  return Word(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

Word conjugate(const Word& w, const Word& by) { return concat(concat(by, w), inverse(by)); }

Word commutator(const Word& a, const Word& b) {
  return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

int exponent_sum(const Word& w, int gen) {
  int s = 0;
  for (int x : w) {
    if (x == gen) ++s;
    if (x == -gen) --s;
  }
  return s;
}

}  // namespace sextic
