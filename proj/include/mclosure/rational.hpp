#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mclosure {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" or "p/q" with q > 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

}  // namespace mclosure
