#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sextic {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "7", "-3/4", "0.625". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }
inline int sign(const Rational& q) { return sgn(q); }
inline double to_double(const Rational& q) { return q.get_d(); }

// True when the printed form needs no parentheses as a factor.
inline bool is_atomic(const Rational&) { return true; }

}  // namespace sextic
