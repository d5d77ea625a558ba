#include "sextic/algebra/singularity.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sextic {

SingularityType parse_singularity_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad singularity type: " + s);
  char k = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (k != 'A' && k != 'D' && k != 'E') throw std::invalid_argument("bad singularity type: " + s);
  int n = std::stoi(s.substr(1));
  if (n < 1 || (k == 'D' && n < 4) || (k == 'E' && (n < 6 || n > 8))) throw std::invalid_argument("bad singularity type: " + s);
  return {k, n};
}

namespace {

void sort_desc(std::vector<SingularityType>& v) {
  std::sort(v.begin(), v.end(), [](const SingularityType& a, const SingularityType& b) {
    // E before D before A, larger index first
    if (a.kind != b.kind) return a.kind > b.kind;
    return a.n > b.n;
  });
}

std::vector<SingularityType> parse_sum(const std::string& s) {
  std::vector<SingularityType> out;
  if (s.empty() || s == "0") return out;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = s.find('+', i);
    if (j == std::string::npos) j = s.size();
    std::string term = s.substr(i, j - i);
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    int mult = k ? std::stoi(term.substr(0, k)) : 1;
    SingularityType t = parse_singularity_type(term.substr(k));
    for (int m = 0; m < mult; ++m) out.push_back(t);
    i = j + 1;
  }
  return out;
}

}  // namespace

std::string types_to_string(std::vector<SingularityType> types) {
  if (types.empty()) return "0";
  sort_desc(types);
  std::string out;
  for (std::size_t i = 0; i < types.size();) {
    std::size_t j = i;
    while (j < types.size() && types[j] == types[i]) ++j;
    if (!out.empty()) out += "+";
    if (j - i > 1) out += std::to_string(j - i);
    out += types[i].to_string();
    i = j;
  }
  return out;
}

SingularitySet SingularitySet::canonical() const {
  SingularitySet c = *this;
  sort_desc(c.inner);
  sort_desc(c.outer);
  return c;
}

int SingularitySet::total_milnor() const {
  int m = 0;
  for (const auto& t : inner) m += t.milnor();
  for (const auto& t : outer) m += t.milnor();
  return m;
}

std::string SingularitySet::to_string() const {
  if (inner.empty()) return types_to_string(outer);
  std::string s = "(" + types_to_string(inner) + ")";
  if (!outer.empty()) s += "+" + types_to_string(outer);
  return s;
}

bool operator==(const SingularitySet& a, const SingularitySet& b) {
  auto x = a.canonical(), y = b.canonical();
  return x.inner == y.inner && x.outer == y.outer;
}

SingularitySet parse_singularity_set(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  SingularitySet out;
  if (!s.empty() && s[0] == '(') {
    auto close = s.find(')');
    if (close == std::string::npos) throw std::invalid_argument("unbalanced parenthesis: " + text);
    out.inner = parse_sum(s.substr(1, close - 1));
    std::string rest = s.substr(close + 1);
    if (!rest.empty()) {
      if (rest[0] != '+') throw std::invalid_argument("expected '+' after inner part: " + text);
      out.outer = parse_sum(rest.substr(1));
    }
  } else {
    out.outer = parse_sum(s);
  }
  return out.canonical();
}

}  // namespace sextic
