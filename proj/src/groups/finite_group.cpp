#include "sextic/groups/finite_group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sextic {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::string> elements, std::vector<std::vector<int>> table)
    : name_(std::move(name)), elements_(std::move(elements)), table_(std::move(table)) {
  int n = order();
  if (n == 0) throw std::invalid_argument("empty group");
  if (static_cast<int>(elements_.size()) != n) throw std::invalid_argument("element list does not match table");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
  }
  id_ = -1;
  for (int e = 0; e < n && id_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) id_ = e;
  }
  if (id_ < 0) throw std::invalid_argument("no identity element");
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == id_) inv_[a] = b;
  for (int a = 0; a < n; ++a)
    if (inv_[a] < 0 || table_[inv_[a]][a] != id_) throw std::invalid_argument("element without inverse");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) throw std::invalid_argument("table not associative");
}

FiniteGroup FiniteGroup::from_permutations(const std::string& name, const std::vector<std::vector<int>>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  std::size_t deg = gens[0].size();
  std::vector<int> id(deg);
  for (std::size_t i = 0; i < deg; ++i) id[i] = static_cast<int>(i);
  std::map<std::vector<int>, int> index{{id, 0}};
  std::vector<std::vector<int>> elems{id};
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(deg);  // apply p then q
    for (std::size_t i = 0; i < deg; ++i) r[i] = q[p[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      auto x = compose(elems[i], g);
      if (index.emplace(x, static_cast<int>(elems.size())).second) elems.push_back(x);
    }
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> names;
  for (const auto& e : elems) {
    std::string s = "[";
    for (std::size_t i = 0; i < deg; ++i) s += (i ? " " : "") + std::to_string(e[i] + 1);
    names.push_back(s + "]");
  }
  return FiniteGroup(name, std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : "g^" + std::to_string(a));
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return FiniteGroup("Z" + std::to_string(n), std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n == 1) return cyclic(1);
  std::vector<int> swap(n), cycle(n);
  for (int i = 0; i < n; ++i) {
    swap[i] = i;
    cycle[i] = (i + 1) % n;
  }
  std::swap(swap[0], swap[1]);
  return from_permutations("S" + std::to_string(n), {swap, cycle});
}

FiniteGroup FiniteGroup::special_linear_2(int p) {
  std::vector<std::array<int, 4>> elems;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if (((a * d - b * c) % p + p) % p == 1) elems.push_back({a, b, c, d});
  std::map<std::array<int, 4>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  int n = static_cast<int>(elems.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    const auto& x = elems[i];
    names.push_back("[" + std::to_string(x[0]) + " " + std::to_string(x[1]) + "; " + std::to_string(x[2]) + " " +
                    std::to_string(x[3]) + "]");
    for (int j = 0; j < n; ++j) {
      const auto& y = elems[j];
      std::array<int, 4> z{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                           (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
      table[i][j] = index.at(z);
    }
  }
  return FiniteGroup("SL(2," + std::to_string(p) + ")", std::move(names), std::move(table));
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  for (int x = a; x != id_; x = table_[x][a]) ++k;
  return k;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::vector<bool> in(order(), false);
  std::vector<int> out{id_};
  in[id_] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      int y = table_[out[i]][g];
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

int FiniteGroup::involution_count() const {
  int k = 0;
  for (int a = 0; a < order(); ++a)
    if (a != id_ && table_[a][a] == id_) ++k;
  return k;
}

int FiniteGroup::center_size() const {
  int k = 0;
  for (int a = 0; a < order(); ++a) {
    bool central = true;
    for (int b = 0; b < order() && central; ++b) central = table_[a][b] == table_[b][a];
    k += central;
  }
  return k;
}

int FiniteGroup::derived_subgroup_size() const {
  std::vector<int> comms;
  std::vector<bool> seen(order(), false);
  for (int a = 0; a < order(); ++a)
    for (int b = 0; b < order(); ++b) {
      int c = table_[table_[a][b]][table_[inv_[a]][inv_[b]]];
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return static_cast<int>(generated(comms).size());
}

std::vector<int> FiniteGroup::class_sizes() const {
  std::vector<bool> seen(order(), false);
  std::vector<int> out;
  for (int a = 0; a < order(); ++a) {
    if (seen[a]) continue;
    int size = 0;
    for (int g = 0; g < order(); ++g) {
      int c = table_[table_[g][a]][inv_[g]];
      if (!seen[c]) {
        seen[c] = true;
        ++size;
      }
    }
    out.push_back(size);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string FiniteGroup::to_text() const {
  std::ostringstream os;
  os << "name: " << name_ << "\nelements: ";
  for (int i = 0; i < order(); ++i) os << (i ? ", " : "") << elements_[i];
  os << "\ntable:\n";
  for (const auto& row : table_) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

FiniteGroup parse_finite_group(const std::string& text) {
  std::istringstream in(text);
  std::string line, name;
  std::vector<std::string> elements;
  std::vector<std::vector<int>> table;
  bool in_table = false;
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    return s;
  };
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("name:", 0) == 0) {
      name = trim(line.substr(5));
    } else if (line.rfind("elements:", 0) == 0) {
      std::istringstream es(line.substr(9));
      std::string e;
      while (std::getline(es, e, ',')) elements.push_back(trim(e));
    } else if (line.rfind("table:", 0) == 0) {
      in_table = true;
    } else if (in_table) {
      std::istringstream rs(line);
      std::vector<int> row;
      int v;
      while (rs >> v) row.push_back(v);
      table.push_back(std::move(row));
    } else {
      throw std::invalid_argument("unexpected line in group file: " + line);
    }
  }
  return FiniteGroup(name, std::move(elements), std::move(table));
}

FiniteGroup load_finite_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_finite_group(ss.str());
}

namespace {

std::vector<int> order_profile(const FiniteGroup& g) {
  std::vector<int> v;
  for (int a = 0; a < g.order(); ++a) v.push_back(g.element_order(a));
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<int> generating_set(const FiniteGroup& g) {
  std::vector<int> cand(g.order());
  for (int a = 0; a < g.order(); ++a) cand[a] = a;
  std::stable_sort(cand.begin(), cand.end(), [&](int x, int y) { return g.element_order(x) > g.element_order(y); });
  std::vector<int> gens;
  std::vector<int> sub = g.generated({});
  for (int a : cand) {
    if (static_cast<int>(sub.size()) == g.order()) break;
    if (std::binary_search(sub.begin(), sub.end(), a)) continue;
    gens.push_back(a);
    sub = g.generated(gens);
  }
  return gens;
}

namespace {

// Extends gens[i] -> images[i] to a map on all of a; empty unless it is an isomorphism.
std::vector<int> extend(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                        const std::vector<int>& images) {
  std::vector<int> phi(a.order(), -1);
  phi[a.identity()] = b.identity();
  std::deque<int> queue{a.identity()};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      int y = a.mul(x, gens[i]);
      int img = b.mul(phi[x], images[i]);
      if (phi[y] < 0) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return {};
      }
    }
  }
  std::vector<bool> hit(b.order(), false);
  for (int v : phi) {
    if (v < 0 || hit[v]) return {};
    hit[v] = true;
  }
  return phi;
}

// Calls visit(phi) for each isomorphism a -> b until visit returns true.
template <class Visit>
bool for_each_isomorphism(const FiniteGroup& a, const FiniteGroup& b, Visit visit) {
  std::vector<int> gens = generating_set(a);
  std::vector<int> images(gens.size());
  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == gens.size()) {
      auto phi = extend(a, b, gens, images);
      return !phi.empty() && visit(phi);
    }
    int ord = a.element_order(gens[i]);
    for (int y = 0; y < b.order(); ++y) {
      if (b.element_order(y) != ord) continue;
      images[i] = y;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return search(search, 0);
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g) {
  std::vector<std::vector<int>> out;
  for_each_isomorphism(g, g, [&](const std::vector<int>& phi) {
    out.push_back(phi);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  if (order_profile(a) != order_profile(b)) return false;
  if (a.center_size() != b.center_size() || a.derived_subgroup_size() != b.derived_subgroup_size()) return false;
  if (a.class_sizes() != b.class_sizes()) return false;
  return for_each_isomorphism(a, b, [](const std::vector<int>&) { return true; });
}

}  // namespace sextic
