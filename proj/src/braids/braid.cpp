#include "sextic/braids/braid.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace sextic {

Braid::Braid(int strands, std::vector<int> letters) : n_(strands), letters_(std::move(letters)) {
  if (n_ < 1) throw std::invalid_argument("braid needs at least one strand");
  for (int x : letters_)
    if (x == 0 || std::abs(x) >= n_) throw std::out_of_range("braid generator index out of range");
}

Braid Braid::operator*(const Braid& o) const {
  if (n_ != o.n_) throw std::invalid_argument("strand count mismatch");
  std::vector<int> l = letters_;
  l.insert(l.end(), o.letters_.begin(), o.letters_.end());
  return Braid(n_, std::move(l));
}

Braid Braid::inverse() const {
  std::vector<int> l(letters_.rbegin(), letters_.rend());
  for (int& x : l) x = -x;
  return Braid(n_, std::move(l));
}

Braid Braid::power(int k) const {
  Braid base = k < 0 ? inverse() : *this;
  Braid out(n_);
  for (int i = 0; i < std::abs(k); ++i) out = out * base;
  return out;
}

Braid Braid::reduced() const { return Braid(n_, free_reduce(letters_)); }

std::string Braid::to_string() const {
  std::string out = "B" + std::to_string(n_) + ":";
  for (int x : letters_) {
    out += " s" + std::to_string(std::abs(x));
    if (x < 0) out += "^-1";
  }
  return out;
}

Braid Braid::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || text.empty() || text[0] != 'B') throw std::invalid_argument("bad braid text: " + text);
  int n = std::stoi(text.substr(1, colon - 1));
  std::istringstream in(text.substr(colon + 1));
  std::string tok;
  std::vector<int> letters;
  while (in >> tok) {
    if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("bad braid letter: " + tok);
    auto caret = tok.find('^');
    int i = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
    int e = 1;
    if (caret != std::string::npos) e = std::stoi(tok.substr(caret + 1));
    for (int k = 0; k < std::abs(e); ++k) letters.push_back(e < 0 ? -i : i);
  }
  return Braid(n, std::move(letters));
}

Braid Braid::full_twist(int n) {
  std::vector<int> delta;
  for (int i = 1; i < n; ++i) delta.push_back(i);
  return Braid(n, delta).power(n);
}

Word FreeGroupAutomorphism::apply(const Word& w) const {
  Word out;
  for (int x : w) {
    int g = std::abs(x);
    if (g > rank) throw std::out_of_range("generator outside automorphism rank");
    const Word& img = images[g - 1];
    if (x > 0)
      out.insert(out.end(), img.begin(), img.end());
    else
      for (auto it = img.rbegin(); it != img.rend(); ++it) out.push_back(-*it);
  }
  return free_reduce(out);
}

namespace {

FreeGroupAutomorphism letter_automorphism(int n, int letter) {
  FreeGroupAutomorphism a{n, {}};
  for (int j = 1; j <= n; ++j) a.images.push_back({j});
  int i = std::abs(letter);
  if (letter > 0) {
    a.images[i - 1] = {i, i + 1, -i};
    a.images[i] = {i};
  } else {
    a.images[i - 1] = {i + 1};
    a.images[i] = {-(i + 1), i, i + 1};
  }
  return a;
}

}  // namespace

Word artin_act(const Braid& b, const Word& w) {
  for (int x : w)
    if (x == 0 || std::abs(x) > b.strands()) throw std::out_of_range("word generator outside braid rank");
  Word cur = free_reduce(w);
  for (int letter : b.letters()) cur = letter_automorphism(b.strands(), letter).apply(cur);
  return cur;
}

FreeGroupAutomorphism artin_automorphism(const Braid& b) {
  FreeGroupAutomorphism a{b.strands(), {}};
  for (int j = 1; j <= b.strands(); ++j) a.images.push_back(artin_act(b, {j}));
  return a;
}

bool braid_equal(const Braid& a, const Braid& b) {
  if (a.strands() != b.strands()) throw std::invalid_argument("strand count mismatch");
  return artin_automorphism(a) == artin_automorphism(b);
}

Permutation permutation_of(const Braid& b) {
  // pos[s] = current position of the strand that started at s
  Permutation pos(b.strands());
  for (int s = 0; s < b.strands(); ++s) pos[s] = s;
  for (int letter : b.letters()) {
    int i = std::abs(letter) - 1;
    for (int& p : pos) {
      if (p == i)
        p = i + 1;
      else if (p == i + 1)
        p = i;
    }
  }
  return pos;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation compose(const Permutation& first, const Permutation& second) {
  Permutation out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

}  // namespace sextic
