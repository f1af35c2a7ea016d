#pragma once

#include <string>
#include <vector>

#include "mclosure/polynomial.hpp"

namespace mclosure {

// Dense univariate polynomial over Q, coefficient i belongs to t^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static UPoly constant(const Rational& a) { return UPoly(std::vector<Rational>{a}); }
  static UPoly monomial(std::size_t k, const Rational& a = 1);
  // Polynomial in at most one variable (var), others must be absent.
  static UPoly from_polynomial(const Polynomial& p, std::size_t var);
  Polynomial to_polynomial(const RingPtr& ring, std::size_t var) const;

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly operator*(const Rational& a) const;
  UPoly operator-() const { return *this * Rational(-1); }
  bool operator==(const UPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UPoly& o) const { return c_ != o.c_; }

  // Euclidean division; d nonzero.
  void divmod(const UPoly& d, UPoly& q, UPoly& r) const;
  UPoly rem(const UPoly& d) const;
  UPoly quo(const UPoly& d) const;
  UPoly derivative() const;
  UPoly monic() const;
  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd (zero when both zero).
UPoly gcd(UPoly a, UPoly b);
// p / gcd(p, p'), monic.
UPoly square_free_part(const UPoly& p);

}  // namespace mclosure
