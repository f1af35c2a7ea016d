#pragma once

#include <vector>

#include "mclosure/polynomial.hpp"
#include "mclosure/upoly.hpp"

namespace mclosure {

struct Factor {
  Polynomial f;
  unsigned multiplicity;
};

struct UFactor {
  UPoly f;
  unsigned multiplicity;
};

// Irreducible factors over Q of a nonzero univariate polynomial. Each factor
// has coprime integer coefficients and positive leading coefficient; the
// list is sorted by degree, then coefficients. Constants give an empty list.
std::vector<UFactor> factor_univariate(const UPoly& f);

// Irreducible factors over Q of a nonzero multivariate polynomial, normalised
// like factor_univariate (leading coefficient in the ring order positive).
// Throws UnsupportedInput when recombination would exceed the subset budget.
std::vector<Factor> factor(const Polynomial& f);

// Yun decomposition: f = c * prod a_i^i with a_i square-free and coprime.
// Entry i-1 holds a_i (possibly 1).
std::vector<UPoly> square_free_decomposition(const UPoly& f);

}  // namespace mclosure
