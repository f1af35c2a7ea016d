#pragma once

#include <random>

#include "mclosure/parse.hpp"
#include "mclosure/polyvec.hpp"

namespace mclosure::testing {

inline Rational random_rational(std::mt19937_64& rng, int height, bool allow_fraction = true) {
  std::uniform_int_distribution<int> num(-height, height);
  std::uniform_int_distribution<int> den(1, allow_fraction ? height : 1);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int height, bool allow_fraction = true) {
  for (;;) {
    Rational q = random_rational(rng, height, allow_fraction);
    if (q != 0) return q;
  }
}

// Dense-ish random polynomial of total degree <= deg.
inline Polynomial random_polynomial(std::mt19937_64& rng, const RingPtr& ring, int deg, int nterms,
                                    int height, bool allow_fraction = true) {
  std::uniform_int_distribution<int> e(0, deg);
  std::vector<Term> ts;
  for (int k = 0; k < nterms; ++k) {
    Monomial m(ring->nvars());
    int budget = std::uniform_int_distribution<int>(0, deg)(rng);
    for (int s = 0; s < budget && ring->nvars() > 0; ++s) {
      std::size_t v = std::uniform_int_distribution<std::size_t>(0, ring->nvars() - 1)(rng);
      m[v] += 1;
    }
    (void)e;
    ts.push_back({m, random_rational(rng, height, allow_fraction)});
  }
  return Polynomial::from_terms(ring, ts);
}

inline Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

}  // namespace mclosure::testing
