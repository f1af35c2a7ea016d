#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mclosure/monomial.hpp"
#include "mclosure/rational.hpp"
#include "mclosure/ring.hpp"

namespace mclosure {

struct Term {
  Monomial mono;
  Rational coeff;
};

// Sparse polynomial over Q. Terms are nonzero, distinct and sorted descending
// in the ring's order.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial variable(RingPtr ring, const std::string& name);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t nterms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  Rational constant_value() const;

  // Require nonzero.
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Rational coefficient(const Monomial& m) const;

  // Total degree; -1 for zero.
  long degree() const;
  long degree_in(std::size_t var) const;
  long degree_in(const std::vector<std::size_t>& vars) const;
  bool involves(std::size_t var) const;
  bool involves_any(const std::vector<std::size_t>& vars) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned k) const;

  Polynomial diff(std::size_t var) const;
  // Multi-index derivative; alpha has length nvars.
  Polynomial diff(const Monomial& alpha) const;

  Rational eval(const std::vector<Rational>& point) const;
  // Substitute values for some variables; result stays in the same ring.
  Polynomial partial_eval(const std::vector<std::size_t>& vars, const std::vector<Rational>& values) const;
  // Variable i goes to images[i], all images in a common target ring.
  Polynomial compose(const std::vector<Polynomial>& images, const RingPtr& target) const;
  // Variable i goes to variable var_map[i] of target.
  Polynomial map_vars(const RingPtr& target, const std::vector<std::size_t>& var_map) const;
  // Same variables, target order (only the order may differ).
  Polynomial reorder(const RingPtr& target) const;

  // Positive rational c with (*this)/c having coprime integer coefficients.
  Rational content() const;
  Polynomial primitive() const;
  // Primitive with positive leading coefficient; zero stays zero.
  Polynomial normalized() const;
  Polynomial monic() const;

  // Coefficients of var^k, k = 0..deg, each free of var.
  std::vector<Polynomial> coeffs_in(std::size_t var) const;
  // Leading coefficient with respect to one variable.
  Polynomial lc_in(std::size_t var) const;

  // Quotient when g divides *this exactly, else nullopt. g nonzero.
  std::optional<Polynomial> divide_exact(const Polynomial& g) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void canonicalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator*(const Rational& c, const Polynomial& p);

// Full-reduction division by a list of divisors in the ring order.
struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

}  // namespace mclosure
