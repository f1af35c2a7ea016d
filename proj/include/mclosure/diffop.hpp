#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mclosure/polyvec.hpp"
#include "mclosure/vanishing.hpp"

namespace mclosure {

struct OpTerm {
  Monomial alpha;  // over all ring variables
  std::size_t component = 0;
  Polynomial coeff;
};

// sum a_alpha^i d^alpha f_i with polynomial coefficients, kept in normal
// form: nonzero coefficients, sorted by (|alpha|, alpha lex, component).
class LinearDiffOp {
 public:
  LinearDiffOp() = default;
  LinearDiffOp(RingPtr ring, std::size_t arity);
  static LinearDiffOp from_terms(RingPtr ring, std::size_t arity, const std::vector<OpTerm>& terms);
  // c d^alpha f_component
  static LinearDiffOp monomial(RingPtr ring, std::size_t arity, Monomial alpha, std::size_t component,
                               const Polynomial& c);

  const RingPtr& ring() const { return ring_; }
  std::size_t arity() const { return arity_; }
  std::vector<OpTerm> terms() const;
  bool is_zero() const { return t_.empty(); }
  unsigned order() const;
  unsigned order_in(const std::vector<std::size_t>& vars) const;
  bool differentiates_only(const std::vector<std::size_t>& vars) const;
  // Highest y-degree of the coefficients in `vars`; -1 for zero.
  long coefficient_degree_in(const std::vector<std::size_t>& vars) const;

  // Restricts the variables this operator may differentiate; existing and
  // later terms outside the blocks are a StructuralError.
  void declare_blocks(std::vector<std::size_t> vars);
  const std::optional<std::vector<std::size_t>>& declared_blocks() const { return blocks_; }

  void add(const Monomial& alpha, std::size_t component, const Polynomial& c);
  LinearDiffOp operator+(const LinearDiffOp& o) const;
  LinearDiffOp operator-(const LinearDiffOp& o) const;
  // Left multiplication of every coefficient.
  LinearDiffOp operator*(const Polynomial& p) const;
  bool operator==(const LinearDiffOp& o) const;
  bool operator!=(const LinearDiffOp& o) const { return !(*this == o); }

  // Coefficients mapped through images (variable i -> images[i]); only
  // valid when the derivative variables keep their indices in target.
  LinearDiffOp map_coefficients(const std::vector<Polynomial>& images, const RingPtr& target) const;

  std::string to_string() const;

 private:
  struct KeyLess {
    bool operator()(const std::pair<Monomial, std::size_t>& a, const std::pair<Monomial, std::size_t>& b) const;
  };
  void check_key(const Monomial& alpha, std::size_t component) const;

  RingPtr ring_;
  std::size_t arity_ = 0;
  std::map<std::pair<Monomial, std::size_t>, Polynomial, KeyLess> t_;
  std::optional<std::vector<std::size_t>> blocks_;
};

Polynomial apply(const LinearDiffOp& L, const PolyVec& P);
// A o L for a scalar operator A (arity 1), expanded by Leibniz.
LinearDiffOp compose(const LinearDiffOp& A, const LinearDiffOp& L);

// Text: one term per line, `coeff ; (a1,...,ak) ; component` with 1-based
// components; blank lines and lines starting with # are skipped.
LinearDiffOp parse_operator(const RingPtr& ring, std::size_t arity, const std::string& text);
std::string print_operator(const LinearDiffOp& L);

// M(L) = { P : L(Q P) = 0 on R^n for all Q } for polynomial coefficients.
SubmoduleBasis mclosure_poly_coeffs(const LinearDiffOp& L);

// X_j = Delta d_{x_j} + sum_mu b_{j mu} d_{y_mu}, Delta = prod_mu dP_mu/dy_mu.
struct TangentFrame {
  RingPtr ring;
  std::size_t n = 0;
  std::vector<std::size_t> graph_vars;
  std::vector<Polynomial> annihilators;  // after preprocessing
  std::vector<unsigned> replacements;
  Polynomial delta;
  std::vector<std::vector<Polynomial>> b;  // b[j][mu]
  std::vector<LinearDiffOp> X;             // scalar vector fields
};

// Base variables are 0..n-1; `ideal` is a Groebner basis of I(V).
TangentFrame build_tangent_frame(const RingPtr& ring, std::size_t n, const std::vector<std::size_t>& graph_vars,
                                 std::vector<Polynomial> annihilators, const SubmoduleBasis& ideal);
// Frame of a complexified stratum; z joins the graph variables when
// with_coefficients (c must then come from complexify with coefficients).
TangentFrame build_tangent_frame(const Stratum& s, const ComplexifyResult& c, bool with_coefficients);

// X^alpha = X_1^alpha_1 ... X_n^alpha_n, alpha over the n base variables.
LinearDiffOp frame_power(const TangentFrame& frame, const Monomial& alpha);

struct XRewrite {
  unsigned D = 0;
  std::vector<std::pair<Monomial, LinearDiffOp>> parts;  // (alpha over x, L_alpha)
};

// Delta^D L = sum_alpha X^alpha o L_alpha with every L_alpha free of
// x-derivatives. The identity is checked exactly.
XRewrite eliminate_x_derivatives(const LinearDiffOp& L, const TangentFrame& frame);

// sum value * z_lambda * d^alpha F_j over a ring whose variables q .. q+K-1
// are z_1..z_K; alpha covers the first q variables.
LinearDiffOp lift_operator(const RingPtr& ring, std::size_t q, const std::vector<OmegaEntry>& omega, std::size_t K,
                           std::size_t arity);

}  // namespace mclosure
