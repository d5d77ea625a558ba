#include <stdexcept>

#include "json.hpp"
#include "sextic/monodromy/monodromy.hpp"

namespace sextic {

using nlohmann::json;

std::string monodromy_json(const MonodromyData& m) {
  json fibers = json::array();
  for (std::size_t i = 0; i < m.braids.size(); ++i)
    fibers.push_back({{"x", m.config.fibers[i]}, {"label", m.braids[i].label}, {"braid", m.braids[i].braid.to_string()}});
  json j{{"degree", m.config.degree()},
         {"k", m.config.k},
         {"base", m.config.base},
         {"level", m.config.level},
         {"names", m.config.names},
         {"fibers", fibers},
         {"boundary_order", m.boundary_order}};
  return j.dump(2);
}

MonodromyData monodromy_from_json(const std::string& text) {
  json j = json::parse(text);
  MonodromyData m;
  int d = j.at("degree").get<int>();
  std::vector<std::vector<Complex>> monic(d + 1, std::vector<Complex>{0.0});
  monic[d][0] = 1.0;  // placeholder y^d; the format does not carry the curve
  m.config.f = FiberPolynomial(monic);
  m.config.k = j.at("k").get<int>();
  m.config.base = j.value("base", 0.0);
  m.config.level = j.value("level", 0.0);
  m.config.names = j.at("names").get<std::vector<std::string>>();
  if (static_cast<int>(m.config.names.size()) != d) throw std::invalid_argument("names do not match the degree");
  for (const auto& f : j.at("fibers")) {
    m.config.fibers.push_back(f.value("x", 0.0));
    m.config.fiber_labels.push_back(f.value("label", std::string()));
    Braid b = Braid::parse(f.at("braid").get<std::string>());
    if (b.strands() != d) throw std::invalid_argument("braid strand count differs from the degree");
    m.braids.push_back({m.config.fiber_labels.back(), b});
  }
  m.boundary_order = j.value("boundary_order", std::vector<int>{});
  return m;
}

}  // namespace sextic
