#pragma once

#include <vector>

#include "mclosure/polynomial.hpp"

namespace mclosure {

// P(x, y) = a(x) y^D + lower terms in y, with y the distinguished variable.
class QuasiMonic {
 public:
  // Throws StructuralError if p has y-degree 0 or its leading coefficient
  // involves y.
  QuasiMonic(Polynomial p, std::size_t var);

  const Polynomial& poly() const { return p_; }
  std::size_t var() const { return var_; }
  const Polynomial& lead() const { return a_; }
  unsigned degree() const { return d_; }

 private:
  Polynomial p_, a_;
  std::size_t var_;
  unsigned d_;
};

// Delta = product of the leading coefficients.
Polynomial leading_product(const std::vector<QuasiMonic>& ps);

struct DivisionCertificate {
  unsigned l = 0;
  std::vector<Polynomial> H;
  Polynomial remainder;
  std::vector<unsigned> bounds;  // deg_{y_mu} remainder <= bounds[mu] = K D_mu - 1
};

// sum_mu (K D_mu - 1)
unsigned degree_bound(const std::vector<unsigned>& Dmus, unsigned K);

// Delta^l P = sum H_mu Ptilde_mu^K + P#, verified before returning.
// The Ps must not involve each other's distinguished variables.
DivisionCertificate reduce_mod_powers(const Polynomial& P, const std::vector<QuasiMonic>& ps, unsigned K);

struct CofactorReduction {
  unsigned l = 0;
  std::vector<Polynomial> H;
};

// Delta^l sum H_mu Ptilde_mu = sum H#_mu Ptilde_mu with total y-degree of
// H#_mu at most D - D_mu (y = the distinguished variables). Requires the
// y-degree of the combination to be <= D and D >= max D_mu (DomainError).
CofactorReduction reduce_cofactor_degrees(const std::vector<Polynomial>& H, const std::vector<QuasiMonic>& ps,
                                          unsigned D);

}  // namespace mclosure
