#include "sextic/groups/perturbation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sextic/groups/tietze.hpp"

namespace sextic {

std::string to_string(LocalGroupClass c) {
  switch (c) {
    case LocalGroupClass::Braid4: return "B4";
    case LocalGroupClass::Braid3: return "B3";
    case LocalGroupClass::FreeAbelian2: return "ZxZ";
    case LocalGroupClass::Cyclic: return "Z";
    case LocalGroupClass::Other: return "other";
  }
  return "other";
}

const std::vector<PerturbationRule>& perturbation_rules() {
  using C = LocalGroupClass;
  static const std::vector<PerturbationRule> rules = {
      {"eq1/A1->0", "eq1", "outer A1", "0", {"betabar = beta"}, C::Cyclic, "B3torus"},
      {"eq1/E6->2A2", "eq1", "inner E6 over the cusp", "2A2", {"alpha = alphabar", "betabar = beta"}, C::Braid3,
       "B3torus"},
      {"eq1/E6->A1", "eq1", "inner E6 over the cusp", "A1", {"alpha = alphabar = beta = betabar"}, C::Cyclic, "Z6"},
      {"G3/A3->2A1", "G3", "outer A3", "2A1", {"[beta, betabar]"}, C::FreeAbelian2, "G0"},
      {"G3/A3->A2", "G3", "outer A3", "A2", {"betabar = beta"}, C::Cyclic, "B3torus"},
      {"G3/A2->A1", "G3", "inner A2", "A1", {"alpha = beta"}, C::Cyclic, "Z6"},
      {"G3/E6->A1", "G3", "inner E6", "A1", {"betabar = beta^-1 alpha beta = betabar beta betabar^-1"}, C::Cyclic,
       "Z6"},
      {"G2prime/A2->A1", "G2prime", "outer A2", "A1", {"betabar = beta"}, C::Cyclic, "B3torus"},
      {"G2prime/A5->A3+A1", "G2prime", "inner A5", "A3+A1", {"[alpha, beta]"}, C::FreeAbelian2, "Z6"},
      {"G2prime/A5->A4", "G2prime", "inner A5", "A4", {"alpha = beta"}, C::Cyclic, "Z6"},
      {"G2prime/E6->A1", "G2prime", "inner E6", "A1", {"beta = betabar^-1 alphabar betabar = beta betabar beta^-1"},
       C::Cyclic, "Z6"},
      {"G2second/E6->A1", "G2second", "inner E6", "A1", {"betabar = betabar^-1 alphabar betabar = gamma"}, C::Cyclic,
       "Z6"},
      {"eq3/A2->A1", "eq3", "outer A2", "A1", {"betabar = beta"}, C::Cyclic, "B3torus"},
  };
  return rules;
}

const PerturbationRule& perturbation_rule(const std::string& id) {
  for (const auto& r : perturbation_rules())
    if (r.id == id) return r;
  throw std::invalid_argument("unknown perturbation rule: " + id);
}

Presentation apply_perturbation(const Presentation& p, const PerturbationRule& rule) {
  std::string gens;
  for (const auto& g : p.generators) gens += (gens.empty() ? "" : ", ") + g;
  Presentation out = p;
  for (const auto& text : rule.relators) {
    Presentation extra = parse_presentation("gens: " + gens + "; rels: " + text + ";");
    for (const auto& w : extra.relators) out.add_relator(w, "perturbation " + rule.id);
  }
  return tietze_simplify(out);
}

namespace {

using Types = std::vector<SingularityType>;

Types a_types(const std::vector<int>& ps) {
  Types t;
  for (int p : ps) t.push_back({'A', p});
  return t;
}

// Multisets of parts >= 2 with sum <= budget, parts non-increasing.
void parts(int budget, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  for (int q = std::min(budget, max_part); q >= 2; --q) {
    cur.push_back(q);
    parts(budget - q, q, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<LocalPerturbation> perturb_point(const SingularityType& t) {
  std::vector<LocalPerturbation> out;
  if (t.kind == 'A') {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    parts(t.n + 1, t.n + 1, cur, all);
    for (const auto& ps : all) {
      std::vector<int> idx;
      int used = 0, s = 0;
      for (int q : ps) {
        idx.push_back(q - 1);
        used += q;
        s = std::gcd(s, q);
      }
      if (idx.size() == 1 && idx[0] == t.n) continue;  // the point itself
      int d = t.n + 1 - used;
      int ord = d > 0 ? 1 : s;
      LocalGroupClass c = ord == 1   ? LocalGroupClass::Cyclic
                          : ord == 2 ? LocalGroupClass::FreeAbelian2
                          : ord == 3 ? LocalGroupClass::Braid3
                                     : LocalGroupClass::Other;
      out.push_back({a_types(idx), c});
    }
    return out;
  }
  if (t.kind == 'E' && t.n == 6) {
    using C = LocalGroupClass;
    const SingularityType d5{'D', 5}, d4{'D', 4};
    out = {{a_types({2, 2, 1}), C::Braid4}, {a_types({5}), C::Braid3},    {a_types({2, 2}), C::Braid3},
           {{d5}, C::Cyclic},               {{d4}, C::Cyclic},              {a_types({4, 1}), C::Cyclic},
           {a_types({4}), C::Cyclic},       {a_types({3, 1}), C::Cyclic},   {a_types({3}), C::Cyclic},
           {a_types({2}), C::Cyclic},       {a_types({2, 1}), C::Cyclic},   {a_types({2, 1, 1}), C::Cyclic},
           {{}, C::Cyclic},                 {a_types({1}), C::Cyclic},      {a_types({1, 1}), C::Cyclic},
           {a_types({1, 1, 1}), C::Cyclic}};
    return out;
  }
  throw std::domain_error("perturbations of " + t.to_string() + " are not expanded");
}

std::vector<SingularitySet> enumerate_perturbations(const SingularitySet& s) {
  std::vector<SingularitySet> out;
  std::set<std::string> seen;
  const SingularitySet base = s.canonical();
  auto expand = [&](bool inner) {
    const Types& pts = inner ? base.inner : base.outer;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0 && pts[i] == pts[i - 1]) continue;
      for (const auto& lp : perturb_point(pts[i])) {
        SingularitySet n = base;
        Types& target = inner ? n.inner : n.outer;
        target.erase(target.begin() + static_cast<long>(i));
        target.insert(target.end(), lp.result.begin(), lp.result.end());
        n = n.canonical();
        if (seen.insert(n.to_string()).second) out.push_back(n);
      }
    }
  };
  expand(true);
  expand(false);
  return out;
}

namespace {

// Dynkin diagrams as adjacency lists; nodes 0-based.
std::vector<std::vector<int>> dynkin_graph(const SingularityType& t) {
  int n = t.n;
  std::vector<std::vector<int>> g(n);
  auto edge = [&](int a, int b) {
    g[a].push_back(b);
    g[b].push_back(a);
  };
  if (t.kind == 'A') {
    for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
  } else if (t.kind == 'D') {
    for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
    edge(n - 3, n - 1);
  } else {
    // chain 0..n-2, extra node attached to node 2
    for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
    edge(2, n - 1);
  }
  return g;
}

SingularityType classify_tree(const std::vector<int>& nodes, const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(nodes.size());
  std::vector<int> deg(n, 0);
  int branch = -1;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (i != j && std::find(adj[nodes[i]].begin(), adj[nodes[i]].end(), nodes[j]) != adj[nodes[i]].end()) ++deg[i];
    if (deg[i] >= 3) branch = i;
  }
  if (branch < 0) return {'A', n};
  // arm lengths from the branch node
  std::vector<int> arms;
  for (int nb : adj[nodes[branch]]) {
    if (std::find(nodes.begin(), nodes.end(), nb) == nodes.end()) continue;
    int len = 0, prev = nodes[branch], cur = nb;
    for (;;) {
      ++len;
      int next = -1;
      for (int x : adj[cur])
        if (x != prev && std::find(nodes.begin(), nodes.end(), x) != nodes.end()) next = x;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  return {'E', n};
}

}  // namespace

std::vector<std::vector<SingularityType>> dynkin_subdiagrams(const SingularityType& t) {
  auto g = dynkin_graph(t);
  int n = t.n;
  std::set<std::string> seen;
  std::vector<Types> out;
  for (int mask = 0; mask < (1 << n) - 1; ++mask) {
    Types comps;
    std::vector<bool> done(n, false);
    for (int v = 0; v < n; ++v) {
      if (!(mask >> v & 1) || done[v]) continue;
      std::vector<int> comp{v};
      done[v] = true;
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (int w : g[comp[i]])
          if ((mask >> w & 1) && !done[w]) {
            done[w] = true;
            comp.push_back(w);
          }
      comps.push_back(classify_tree(comp, g));
    }
    std::string key = types_to_string(comps);
    if (seen.insert(key).second) out.push_back(comps);
  }
  return out;
}

}  // namespace sextic
