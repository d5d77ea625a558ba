#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>

#include "sextic/groups/coset.hpp"

namespace sextic {

int CosetTable::act(int coset, const Word& w) const {
  for (int x : w) coset = act(coset, x);
  return coset;
}

bool CosetTable::closes(const Presentation& p) const {
  if (!complete) return false;
  for (int c = 0; c < index(); ++c)
    for (const auto& r : p.relators)
      if (act(c, r) != c) return false;
  return true;
}

std::vector<Word> CosetTable::transversal() const {
  std::vector<Word> out(rows.size());
  std::vector<bool> seen(rows.size(), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    for (int col = 0; col < 2 * ngens; ++col) {
      int d = rows[c][col];
      if (seen[d]) continue;
      seen[d] = true;
      out[d] = out[c];
      out[d].push_back(col % 2 == 0 ? col / 2 + 1 : -(col / 2 + 1));
      queue.push_back(d);
    }
  }
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t cap) : cols_(2 * p.rank()), cap_(cap) {
    for (const auto& r : p.relators) {
      Word w = free_reduce(r);
      if (w.empty()) continue;
      Word c;
      for (int x : w) c.push_back(CosetTable::column(x));
      rels_.push_back(std::move(c));
    }
    new_coset();
  }

  bool run(const std::vector<Word>& subgroup, EnumerationStats* stats) {
    for (const auto& w : subgroup) {
      Word c;
      for (int x : free_reduce(w)) c.push_back(CosetTable::column(x));
      if (!c.empty()) scan_and_fill(0, c);
    }
    for (bool incomplete = true; incomplete;) {
      std::size_t c = 0;
      while (c < parent_.size()) {
        if (alive(c)) process(c);
        ++c;
        if (live_ > cap_ || parent_.size() > 4 * cap_ + 16) {
          remap_cursor_ = c;
          if (live_ > cap_) {
            lookahead(stats);
            if (live_ > cap_) {
              if (stats) fill_stats(stats);
              return false;
            }
          } else {
            compact();
          }
          c = remap_cursor_;
        }
      }
      incomplete = false;
      for (std::size_t k = 0; k < parent_.size() && !incomplete; ++k)
        if (alive(k))
          for (int x = 0; x < cols_; ++x)
            if (at(k, x) < 0) incomplete = true;
    }
    if (stats) fill_stats(stats);
    return true;
  }

  CosetTable table(int ngens, const std::vector<Word>& subgroup) {
    // renumber live cosets in breadth-first order of first appearance
    std::vector<int> order, newnum(parent_.size(), -1);
    order.push_back(0);
    newnum[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < cols_; ++x) {
        int d = at(order[k], x);
        if (newnum[d] < 0) {
          newnum[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    CosetTable t;
    t.ngens = ngens;
    t.subgroup = subgroup;
    t.complete = true;
    t.rows.assign(order.size(), std::vector<int>(cols_));
    for (std::size_t k = 0; k < order.size(); ++k)
      for (int x = 0; x < cols_; ++x) t.rows[k][x] = newnum[at(order[k], x)];
    return t;
  }

 private:
  static int inv(int col) { return col ^ 1; }
  int& at(std::size_t c, int x) { return tab_[c * cols_ + x]; }
  bool alive(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int new_coset() {
    int n = static_cast<int>(parent_.size());
    parent_.push_back(n);
    tab_.resize(tab_.size() + cols_, -1);
    ++live_;
    ++defined_;
    max_live_ = std::max(max_live_, live_);
    return n;
  }

  void process(std::size_t c) {
    for (const auto& r : rels_) {
      scan_and_fill(static_cast<int>(c), r);
      if (!alive(c)) return;
    }
    for (int x = 0; x < cols_ && alive(c); ++x)
      if (at(c, x) < 0) define(static_cast<int>(c), x);
  }

  void define(int c, int x) {
    int n = new_coset();
    at(c, x) = n;
    at(n, inv(x)) = c;
  }

  int rep(int c) {
    int r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      int next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& q) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    --live_;
    q.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> q;
    merge(a, b, q);
    while (!q.empty()) {
      int g = q.front();
      q.pop_front();
      for (int x = 0; x < cols_; ++x) {
        int d = at(g, x);
        if (d < 0) continue;
        if (at(d, inv(x)) == g) at(d, inv(x)) = -1;
        int mu = rep(g), nu = rep(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), q);
        } else if (at(nu, inv(x)) >= 0) {
          merge(mu, at(nu, inv(x)), q);
        } else {
          at(mu, x) = nu;
          at(nu, inv(x)) = mu;
        }
      }
    }
  }

  // fill == false: stop at a gap of length > 1 instead of defining cosets
  void scan(int c, const Word& w, bool fill) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) >= 0) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, inv(w[j])) >= 0) b = at(b, inv(w[j--]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(int c, const Word& w) { scan(c, w, true); }

  void lookahead(EnumerationStats* stats) {
    if (stats) ++stats->lookaheads;
    for (std::size_t c = 0; c < parent_.size(); ++c)
      for (const auto& r : rels_) {
        if (!alive(c)) break;
        scan(static_cast<int>(c), r, false);
      }
    compact();
  }

  // drop dead cosets, keeping order; remap_cursor_ follows the cursor
  void compact() {
    std::vector<int> newnum(parent_.size(), -1);
    int n = 0;
    std::size_t cursor_new = std::size_t(-1);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (c == remap_cursor_) cursor_new = n;
      if (alive(c)) newnum[c] = n++;
    }
    std::vector<int> tab(static_cast<std::size_t>(n) * cols_, -1);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!alive(c)) continue;
      for (int x = 0; x < cols_; ++x) {
        int d = at(c, x);
        tab[newnum[c] * static_cast<std::size_t>(cols_) + x] = d < 0 ? -1 : newnum[rep(d)];
      }
    }
    if (cursor_new == std::size_t(-1)) cursor_new = n;
    tab_ = std::move(tab);
    parent_.resize(n);
    for (int c = 0; c < n; ++c) parent_[c] = c;
    live_ = n;
    remap_cursor_ = cursor_new;
  }

  void fill_stats(EnumerationStats* s) const {
    s->max_live = max_live_;
    s->defined = defined_;
  }

  int cols_;
  std::size_t cap_;
  std::vector<Word> rels_;
  std::vector<int> tab_;
  std::vector<int> parent_;
  std::size_t live_ = 0, max_live_ = 0, defined_ = 0;
  std::size_t remap_cursor_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t cap,
                        EnumerationStats* stats) {
  if (cap < 1) throw std::invalid_argument("coset cap must be positive");
  Enumerator e(p, cap);
  CosetTable t;
  t.ngens = p.rank();
  t.subgroup = subgroup;
  if (!e.run(subgroup, stats)) return t;
  return e.table(p.rank(), subgroup);
}

std::optional<long> quotient_order(const Presentation& p, const std::vector<Word>& extra, std::size_t cap) {
  Presentation q = p;
  for (const auto& w : extra) q.add_relator(w);
  CosetTable t = todd_coxeter(q, {}, cap);
  if (!t.complete) return std::nullopt;
  return t.index();
}

}  // namespace sextic
