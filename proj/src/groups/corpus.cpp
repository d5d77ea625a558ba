#include "sextic/groups/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <stdexcept>

namespace sextic {

#ifndef SEXTIC_DATA_DIR
#define SEXTIC_DATA_DIR "data"
#endif

std::string data_dir() {
  if (const char* env = std::getenv("SEXTIC_DATA_DIR"); env && *env) return env;
  return SEXTIC_DATA_DIR;
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(data_dir() + "/corpus"))
    if (e.path().extension() == ".pres") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

Presentation corpus_presentation(const std::string& name) {
  return load_presentation(data_dir() + "/corpus/" + name + ".pres");
}

}  // namespace sextic
