#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>

#include "sextic/groups/coset.hpp"
#include "sextic/groups/tietze.hpp"

namespace sextic {

Presentation reidemeister_schreier(const Presentation& p, const CosetTable& t) {
  if (!t.complete) throw std::invalid_argument("coset table incomplete");
  int n = t.index(), k = p.rank();
  // spanning tree by breadth-first search; tree[c][g] marks (c, g) or its reverse as a tree edge
  std::vector<std::vector<bool>> tree(n, std::vector<bool>(k + 1, false));
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int col = 0; col < 2 * k; ++col) {
      int d = t.rows[c][col];
      if (seen[d]) continue;
      seen[d] = true;
      int g = col / 2 + 1;
      if (col % 2 == 0)
        tree[c][g] = true;  // c --g--> d
      else
        tree[d][g] = true;  // d --g--> c
      queue.push_back(d);
    }
  }
  Presentation out;
  std::vector<std::vector<int>> gen(n, std::vector<int>(k + 1, 0));
  for (int c = 0; c < n; ++c)
    for (int g = 1; g <= k; ++g) {
      if (tree[c][g]) continue;
      out.generators.push_back(p.generators[g - 1] + "_" + std::to_string(c));
      gen[c][g] = out.rank();
    }
  auto rewrite = [&](int c, const Word& w) {
    Word r;
    for (int x : w) {
      if (x > 0) {
        if (gen[c][x]) r.push_back(gen[c][x]);
        c = t.act(c, x);
      } else {
        int d = t.act(c, x);
        if (gen[d][-x]) r.push_back(-gen[d][-x]);
        c = d;
      }
    }
    return free_reduce(r);
  };
  for (int c = 0; c < n; ++c)
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      out.add_relator(rewrite(c, p.relators[i]), i < p.notes.size() ? p.notes[i] : std::string());
  return out.normalized();
}

Presentation double_cover(const Presentation& p, const std::string& delta) {
  int d = p.find(delta);
  if (!d) throw std::invalid_argument("delta absent: " + delta);
  Presentation out;
  // gen[coset][g]: Schreier generator for (coset, g); delta edges carry none
  std::vector<std::vector<int>> gen(2, std::vector<int>(p.rank() + 1, 0));
  for (int g = 1; g <= p.rank(); ++g) {
    if (g == d) continue;
    out.generators.push_back(p.generators[g - 1]);
    gen[0][g] = out.rank();
    out.generators.push_back(p.generators[g - 1] + "bar");
    gen[1][g] = out.rank();
  }
  // coset 0 -delta-> 1 is the tree edge; 1 -delta-> 0 is delta^2, trivial once adjoined
  auto rewrite = [&](int c, const Word& w) {
    Word r;
    int start = c;
    for (int x : w) {
      int g = std::abs(x);
      if (g == d) {
        c ^= 1;
        continue;
      }
      r.push_back(x > 0 ? gen[c][g] : -gen[c][g]);
    }
    if (c != start) throw std::invalid_argument("relator has odd exponent sum in " + delta);
    return free_reduce(r);
  };
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    std::string note = i < p.notes.size() ? p.notes[i] : std::string();
    out.add_relator(rewrite(0, p.relators[i]), note);
    out.add_relator(rewrite(1, p.relators[i]), note.empty() ? note : note + " (conjugate)");
  }
  return out.normalized();
}

}  // namespace sextic
