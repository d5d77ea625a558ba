#include "sextic/groups/vankampen.hpp"

#include <stdexcept>

namespace sextic {

std::vector<Word> braid_relators(const Braid& b) {
  std::vector<Word> out;
  for (int j = 1; j <= b.strands(); ++j) {
    Word r = free_reduce(concat(Word{-j}, artin_act(b, Word{j})));
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

Presentation vankampen(const std::vector<LabeledBraid>& braids, int strands, int k,
                       const std::vector<std::string>& names) {
  if (k < 0) throw std::invalid_argument("surface index must be non-negative");
  if (!names.empty() && static_cast<int>(names.size()) != strands)
    throw std::invalid_argument("generator name count differs from strand count");
  Presentation p;
  for (int j = 1; j <= strands; ++j) p.generators.push_back(names.empty() ? "z" + std::to_string(j) : names[j - 1]);
  for (const auto& lb : braids) {
    if (lb.braid.strands() != strands) throw std::invalid_argument("inconsistent strand counts in monodromy");
    for (const Word& r : braid_relators(lb.braid)) p.add_relator(r, lb.label);
  }
  if (k == 0) return p;
  Word rho;
  for (int j = 1; j <= strands; ++j) rho.push_back(j);
  p.add_relator(power(rho, k), "the relation at infinity");
  return p;
}

}  // namespace sextic
