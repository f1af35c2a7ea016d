#pragma once

// Root counting without Sturm sequences: adaptive scan of [-B, B] with
// interval Horner enclosures of q and q'. A cell is settled when the
// enclosure of q excludes 0 (no root) or that of q' excludes 0 (monotone,
// so the endpoint signs decide).

#include <vector>

#include "mclosure/upoly.hpp"

namespace mclosure::testing {

struct ScanRoot {
  Rational lo, hi;  // lo == hi for a grid point root
};

inline void horner_interval(const UPoly& q, const Rational& a, const Rational& b, Rational& lo, Rational& hi) {
  lo = hi = 0;
  for (long i = q.degree(); i >= 0; --i) {
    Rational c[4] = {lo * a, lo * b, hi * a, hi * b};
    Rational mn = c[0], mx = c[0];
    for (const auto& v : c) {
      if (v < mn) mn = v;
      if (v > mx) mx = v;
    }
    lo = mn + q[static_cast<std::size_t>(i)];
    hi = mx + q[static_cast<std::size_t>(i)];
  }
}

inline void scan_cell(const UPoly& q, const UPoly& dq, const Rational& a, const Rational& b, int depth,
                      std::vector<ScanRoot>& out, bool& failed) {
  Rational lo, hi;
  horner_interval(q, a, b, lo, hi);
  if (lo > 0 || hi < 0) return;
  horner_interval(dq, a, b, lo, hi);
  if (lo > 0 || hi < 0) {
    if (sgn(q.eval(a)) * sgn(q.eval(b)) < 0) out.push_back({a, b});
    return;
  }
  if (depth > 400) {
    failed = true;
    return;
  }
  Rational m = (a + b) / 2;
  scan_cell(q, dq, a, m, depth + 1, out, failed);
  if (q.eval(m) == 0) out.push_back({m, m});
  scan_cell(q, dq, m, b, depth + 1, out, failed);
}

// Distinct real roots of p in ascending order, as open cells or points.
inline std::vector<ScanRoot> scan_roots(const UPoly& p, bool& failed) {
  failed = false;
  UPoly q = square_free_part(p);
  Rational B = 1;
  for (long i = 0; i < q.degree(); ++i) {
    Rational r = abs(q[static_cast<std::size_t>(i)] / q.lead());
    if (1 + r > B) B = 1 + r;
  }
  B += 1;
  std::vector<ScanRoot> out;
  if (q.eval(-B) == 0 || q.eval(B) == 0) failed = true;
  scan_cell(q, q.derivative(), -B, B, 0, out, failed);
  return out;
}

}  // namespace mclosure::testing
