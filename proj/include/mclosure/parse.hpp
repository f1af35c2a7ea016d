#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mclosure/polyvec.hpp"

namespace mclosure {

// Expressions over the ring's variable names: + - * / ^ and parentheses.
// Division only by nonzero constants, exponents are nonnegative integers.
// Throws ParseError with a column position.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

// "(p1, p2, ...)" or a bare polynomial when rank is 1.
PolyVec parse_polyvec(const RingPtr& ring, std::string_view text, std::size_t rank);

// Comma-separated rationals, optionally wrapped in parentheses.
std::vector<Rational> parse_rational_list(std::string_view text);

// Comma-separated nonnegative integers in parentheses, e.g. "(1,0,2)".
std::vector<std::uint32_t> parse_index_list(std::string_view text);

std::string to_string(const Polynomial& p);
std::string to_string(const PolyVec& v);

}  // namespace mclosure
