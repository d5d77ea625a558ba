#include "sextic/algebra/rational.hpp"

#include <stdexcept>

namespace sextic {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string whole = s.substr(0, dot);
      std::string frac = s.substr(dot + 1);
      bool neg = !whole.empty() && whole[0] == '-';
      if (neg || (!whole.empty() && whole[0] == '+')) whole.erase(whole.begin());
      if (whole.empty()) whole = "0";
      Integer den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      Integer num(whole + frac, 10);
      Rational q(num, den);
      q.canonicalize();
      return neg ? Rational(-q) : q;
    }
    if (!s.empty() && s[0] == '+') s.erase(s.begin());
    Rational q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational: " + std::string(text));
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace sextic
