#pragma once

#include <vector>

#include "mclosure/upoly.hpp"

namespace mclosure {

// Either the exact rational root lo == hi, or an open interval (lo, hi)
// holding exactly one real root, with the square-free part of the input
// taking opposite nonzero signs at lo and hi.
struct IsolatingInterval {
  Rational lo, hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
  bool operator==(const IsolatingInterval& o) const { return lo == o.lo && hi == o.hi && exact == o.exact; }
};

// (p, p', -rem(p, p'), ...) down to the last nonzero remainder.
// The zero polynomial is a domain error.
std::vector<UPoly> sturm_sequence(const UPoly& p);

// Sign changes of the sequence at x, zeros skipped.
int sign_variations(const std::vector<UPoly>& seq, const Rational& x);

// Distinct real roots in (a, b] via a Sturm sequence.
int count_roots(const std::vector<UPoly>& seq, const Rational& a, const Rational& b);

// 1 + max |a_i / a_n|; every complex root has modulus below it.
Rational cauchy_bound(const UPoly& p);

// All distinct real roots, ascending. Constants are a domain error.
std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p);

// Shrink a (non-exact) interval of p to width below `width`.
IsolatingInterval refine(const UPoly& p, IsolatingInterval iv, const Rational& width);

}  // namespace mclosure
