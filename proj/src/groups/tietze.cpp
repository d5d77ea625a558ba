#include "sextic/groups/tietze.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace sextic {

namespace {

Word rotate(const Word& w, std::size_t k) {
  Word out(w.begin() + static_cast<long>(k), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(k));
  return out;
}

int occurrences(const Word& w, int g) {
  int n = 0;
  for (int x : w)
    if (std::abs(x) == g) ++n;
  return n;
}

// Try to shorten the cyclic word target with the relator rel (rel = 1):
// a cyclic subword u of rel with |u| > |rel|/2 is replaced by the inverse
// of the complementary part.
bool shorten_with(Word& target, const Word& rel) {
  std::size_t n = rel.size(), m = target.size();
  if (n == 0 || m == 0) return false;
  for (std::size_t len = n; len * 2 > n; --len) {
    for (int inv = 0; inv < 2; ++inv) {
      Word base = inv ? inverse(rel) : rel;
      for (std::size_t k = 0; k < n; ++k) {
        Word u = rotate(base, k);
        Word piece(u.begin(), u.begin() + static_cast<long>(len));
        Word rest(u.begin() + static_cast<long>(len), u.end());
        if (len > m) continue;
        for (std::size_t s = 0; s < m; ++s) {
          bool match = true;
          for (std::size_t i = 0; i < len && match; ++i) match = target[(s + i) % m] == piece[i];
          if (!match) continue;
          if (len == n && len == m) {
            target.clear();  // target is a cyclic conjugate of rel^{+-1}
            return true;
          }
          Word rt = rotate(target, s);
          Word repl = inverse(rest);
          repl.insert(repl.end(), rt.begin() + static_cast<long>(len), rt.end());
          target = cyclic_reduce(repl);
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

Word canonical_cyclic(const Word& w) {
  Word r = cyclic_reduce(w);
  if (r.empty()) return r;
  Word best = r;
  for (int inv = 0; inv < 2; ++inv) {
    Word base = inv ? inverse(r) : r;
    for (std::size_t k = 0; k < base.size(); ++k) best = std::min(best, rotate(base, k));
  }
  return best;
}

std::size_t total_length(const Presentation& p) {
  std::size_t n = 0;
  for (const auto& r : p.relators) n += r.size();
  return n;
}

Presentation tidy_relators(const Presentation& p) {
  Presentation out{p.generators, {}, {}};
  std::set<Word> seen;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Word r = cyclic_reduce(p.relators[i]);
    if (r.empty()) continue;
    if (!seen.insert(canonical_cyclic(r)).second) continue;
    out.add_relator(r, i < p.notes.size() ? p.notes[i] : std::string());
  }
  return out;
}

Presentation substitute_generator(const Presentation& p, int g, const Word& image) {
  Presentation out;
  for (int i = 1; i <= p.rank(); ++i)
    if (i != g) out.generators.push_back(p.generators[i - 1]);
  auto renum = [g](int x) {
    int a = std::abs(x);
    int b = a > g ? a - 1 : a;
    return x < 0 ? -b : b;
  };
  Word img, img_inv;
  for (int x : image) img.push_back(renum(x));
  img_inv = inverse(img);
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    Word w;
    for (int x : p.relators[k]) {
      if (std::abs(x) == g) {
        const Word& s = x > 0 ? img : img_inv;
        w.insert(w.end(), s.begin(), s.end());
      } else {
        w.push_back(renum(x));
      }
    }
    out.add_relator(free_reduce(w), k < p.notes.size() ? p.notes[k] : std::string());
  }
  return out;
}

Presentation tietze_simplify(const Presentation& input, const TietzeBudget& budget) {
  Presentation cur = tidy_relators(input);
  for (int pass = 0; pass < budget.max_passes; ++pass) {
    bool changed = false;

    // generator elimination: a relator containing g exactly once defines g
    for (;;) {
      long best_cost = 0;
      int best_rel = -1, best_gen = 0;
      for (std::size_t k = 0; k < cur.relators.size(); ++k) {
        const Word& r = cur.relators[k];
        for (int g = cur.rank(); g >= 1; --g) {
          if (occurrences(r, g) != 1) continue;
          long elsewhere = 0;
          for (std::size_t j = 0; j < cur.relators.size(); ++j)
            if (j != k) elsewhere += occurrences(cur.relators[j], g);
          long cost = elsewhere * (static_cast<long>(r.size()) - 2) - static_cast<long>(r.size());
          if (best_rel < 0 || cost < best_cost || (cost == best_cost && r.size() < cur.relators[best_rel].size())) {
            best_cost = cost;
            best_rel = static_cast<int>(k);
            best_gen = g;
          }
        }
      }
      if (best_rel < 0) break;
      if (static_cast<long>(total_length(cur)) + best_cost > static_cast<long>(budget.max_total_length)) break;
      const Word& r = cur.relators[best_rel];
      std::size_t at = 0;
      while (std::abs(r[at]) != best_gen) ++at;
      Word rr = rotate(r, at);
      Word rest(rr.begin() + 1, rr.end());
      // g^e * rest = 1  =>  g = rest^-1 (e = 1) or g = rest (e = -1)
      Word image = rr[0] > 0 ? inverse(rest) : rest;
      Presentation without = cur;
      without.relators.erase(without.relators.begin() + best_rel);
      if (best_rel < static_cast<int>(without.notes.size())) without.notes.erase(without.notes.begin() + best_rel);
      cur = tidy_relators(substitute_generator(without, best_gen, image));
      changed = true;
    }

    // substitution of long shared subwords
    bool shortened = false;
    for (std::size_t i = 0; i < cur.relators.size(); ++i)
      for (std::size_t j = 0; j < cur.relators.size(); ++j) {
        if (i == j || cur.relators[i].empty()) continue;
        if (cur.relators[i].size() > cur.relators[j].size()) continue;
        int guard = 0;
        while (!cur.relators[j].empty() && guard++ < 64 && shorten_with(cur.relators[j], cur.relators[i])) shortened = true;
      }
    if (shortened) {
      cur = tidy_relators(cur);
      changed = true;
    }
    if (!changed) break;
  }
  return cur;
}

}  // namespace sextic
