#include "sextic/groups/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sextic {

int Presentation::find(const std::string& name) const {
  auto it = std::find(generators.begin(), generators.end(), name);
  return it == generators.end() ? 0 : static_cast<int>(it - generators.begin()) + 1;
}

int Presentation::require(const std::string& name) const {
  int i = find(name);
  if (i == 0) throw std::invalid_argument("unknown generator: " + name);
  return i;
}

void Presentation::add_relator(const Word& w, const std::string& note) {
  relators.push_back(free_reduce(w));
  notes.resize(relators.size() - 1);
  notes.push_back(note);
}

Presentation Presentation::normalized() const {
  Presentation out{generators, {}, {}};
  for (std::size_t i = 0; i < relators.size(); ++i) {
    Word r = free_reduce(relators[i]);
    if (r.empty()) continue;
    out.add_relator(r, i < notes.size() ? notes[i] : std::string());
  }
  return out;
}

std::string Presentation::word_to_string(const Word& w) const {
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    out += generators.at(std::abs(x) - 1);
    if (x < 0) out += "^-1";
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
  out += "; rels: ";
  for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + word_to_string(relators[i]);
  out += ";";
  return out;
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

}  // namespace sextic
