#include "mclosure/roots.hpp"

#include <algorithm>

#include "mclosure/error.hpp"
#include "mclosure/factor.hpp"

namespace mclosure {

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  std::vector<UPoly> seq{p};
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    UPoly r = -(seq[seq.size() - 2].rem(seq.back()));
    if (r.is_zero()) break;
    seq.push_back(r);
  }
  return seq;
}

int sign_variations(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_roots(const std::vector<UPoly>& seq, const Rational& a, const Rational& b) {
  return sign_variations(seq, a) - sign_variations(seq, b);
}

Rational cauchy_bound(const UPoly& p) {
  if (p.degree() < 1) throw DomainError("Cauchy bound of a constant");
  Rational m = 0;
  for (long i = 0; i < p.degree(); ++i) m = std::max<Rational>(m, abs(p[static_cast<std::size_t>(i)] / p.lead()));
  return 1 + m;
}

namespace {

void bisect(const std::vector<UPoly>& seq, const Rational& a, const Rational& b, int count,
            std::vector<IsolatingInterval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({a, b, false});
    return;
  }
  Rational m = (a + b) / 2;
  int left = count_roots(seq, a, m);
  bisect(seq, a, m, left, out);
  bisect(seq, m, b, count - left, out);
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p) {
  if (p.degree() < 1) throw DomainError("root isolation of a constant polynomial");
  UPoly sqf = square_free_part(p);
  std::vector<Rational> rational_roots;
  UPoly rest = UPoly::constant(1);
  for (const auto& f : factor_univariate(sqf)) {
    if (f.f.degree() == 1) {
      rational_roots.push_back(-f.f[0] / f.f[1]);
    } else {
      rest = rest * f.f;
    }
  }
  std::vector<IsolatingInterval> out;
  if (rest.degree() >= 1) {
    auto seq = sturm_sequence(rest);
    Rational B = cauchy_bound(rest);
    // rest has no rational roots, so no endpoint is ever a root.
    bisect(seq, -B, B, count_roots(seq, -B, B), out);
    // Separate from the rational roots of p.
    // Bisect until no rational root lies in the closed interval, so the
    // endpoints are nonzero for the whole square-free part.
    for (auto& iv : out) {
      auto touches = [&] {
        for (const auto& q : rational_roots) {
          if (q >= iv.lo && q <= iv.hi) return true;
        }
        return false;
      };
      int slo = rest.sign_at(iv.lo);
      while (touches()) {
        Rational m = (iv.lo + iv.hi) / 2;
        if (rest.sign_at(m) == slo) {
          iv.lo = m;
        } else {
          iv.hi = m;
        }
      }
    }
  }
  for (const auto& q : rational_roots) out.push_back({q, q, true});
  std::sort(out.begin(), out.end(), [](const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.lo; });
  return out;
}

IsolatingInterval refine(const UPoly& p, IsolatingInterval iv, const Rational& width) {
  if (iv.exact) return iv;
  if (width <= 0) throw DomainError("refinement width must be positive");
  UPoly q = square_free_part(p);
  int slo = q.sign_at(iv.lo);
  if (slo == 0 || slo == q.sign_at(iv.hi)) throw DomainError("interval does not bracket a sign change");
  while (iv.hi - iv.lo >= width) {
    Rational m = (iv.lo + iv.hi) / 2;
    int s = q.sign_at(m);
    if (s == 0) return {m, m, true};
    if (s == slo) {
      iv.lo = m;
    } else {
      iv.hi = m;
    }
  }
  return iv;
}

}  // namespace mclosure
