#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mclosure/linalg.hpp"
#include "mclosure/polyvec.hpp"
#include "mclosure/semialgebraic.hpp"

namespace mclosure {

// Coefficient-table entry of a stratified operator: contributes
// value * z_lambda * d^alpha F_j (alpha over the n + m local coordinates).
struct OmegaEntry {
  std::size_t lambda = 0;
  Monomial alpha;
  std::size_t component = 0;
  Rational value;
};

// Graph {(x, G(x), F(x)) : x in U} in local coordinates (x, y, z); the
// local ring lists the n base, m graph and p coefficient variables in that
// order. Local coordinates are T times the global ones.
struct Stratum {
  RingPtr ring;
  std::size_t n = 0, m = 0, p = 0;
  RingPtr base_ring;
  SemialgebraicDescription U{nullptr};
  std::vector<Polynomial> annihilators;  // P~_mu(x, y_mu), mu < m
  std::vector<Polynomial> coefficients;  // P^_lambda(x, z_lambda), lambda < p
  std::optional<std::vector<Rational>> witness;  // length n, n + m or n + m + p
  std::optional<QMatrix> T;              // (n + m) x (n + m)
  std::vector<OmegaEntry> omega;

  std::size_t y_var(std::size_t mu) const { return n + mu; }
  std::size_t z_var(std::size_t lambda) const { return n + m + lambda; }
  // Throws StructuralError on shape violations.
  void validate() const;
  // Q(local) -> Q(T g) over the global ring; push_forward is the inverse.
  // Without T, local and global variables are matched by name.
  Polynomial pull_back(const Polynomial& local, const RingPtr& global) const;
  PolyVec pull_back(const PolyVec& local, const RingPtr& global) const;
  Polynomial push_forward(const Polynomial& global) const;
  PolyVec push_forward(const PolyVec& global) const;
};

// P_k(x, w_k), each involving the single distinguished variable vars[k] out
// of the vars list.
struct TriangularSystem {
  RingPtr ring;
  std::vector<Polynomial> polys;
  std::vector<std::size_t> vars;
};

// Product over the DNF cells of one equation per cell.
Polynomial annihilating_polynomial(const SemialgebraicDescription& graph);

// Ideal of the irreducible component of W through the rational witness.
SubmoduleBasis select_component(const TriangularSystem& W, const std::vector<Rational>& witness);

// Replace P by dP/dt while g divides dP/dt, g an irreducible factor of P;
// returns the number of replacements. The sum of degrees drops each time.
unsigned derivative_preprocess(Polynomial& P, std::size_t t, const Polynomial& g);

struct ComplexifyResult {
  SubmoduleBasis ideal;                   // reduced Groebner basis over the stratum ring
  std::vector<Rational> witness;          // full local witness (x0, y0[, z0])
  std::vector<Polynomial> annihilators;   // after derivative preprocessing
  std::vector<Polynomial> coefficients;
  std::vector<unsigned> replacements;
};

// I(Gamma) of the stratum graph; z is included when with_coefficients.
ComplexifyResult complexify(const Stratum& s, bool with_coefficients = false, const WitnessOptions& opts = {});

// Intersection over strata of I(E_nu), pulled back to the global ring.
SubmoduleBasis vanishing_ideal(const std::vector<Stratum>& strata, const RingPtr& global,
                               const WitnessOptions& opts = {});

}  // namespace mclosure
