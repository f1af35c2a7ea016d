#include "mclosure/upoly.hpp"

#include "mclosure/error.hpp"

namespace mclosure {

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(std::size_t k, const Rational& a) {
  std::vector<Rational> c(k + 1);
  c[k] = a;
  return UPoly(std::move(c));
}

UPoly UPoly::from_polynomial(const Polynomial& p, std::size_t var) {
  std::vector<Rational> c;
  for (const auto& t : p.terms()) {
    for (std::size_t v = 0; v < t.mono.size(); ++v)
      if (v != var && t.mono[v]) throw StructuralError("polynomial is not univariate in the given variable");
    std::size_t e = p.ring()->nvars() == 0 ? 0 : t.mono[var];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += t.coeff;
  }
  return UPoly(std::move(c));
}

Polynomial UPoly::to_polynomial(const RingPtr& ring, std::size_t var) const {
  std::vector<Term> ts;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) ts.push_back({Monomial::variable(ring->nvars(), var, static_cast<std::uint32_t>(i)), c_[i]});
  return Polynomial::from_terms(ring, std::move(ts));
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Rational& a) const {
  if (a == 0) return UPoly();
  std::vector<Rational> c(c_);
  for (auto& x : c) x *= a;
  return UPoly(std::move(c));
}

void UPoly::divmod(const UPoly& d, UPoly& q, UPoly& r) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(c_);
  long dd = d.degree();
  std::vector<Rational> quo(std::max<long>(0, degree() - dd + 1));
  Rational inv = 1 / d.lead();
  for (long i = degree(); i >= dd; --i) {
    if (rem[static_cast<std::size_t>(i)] == 0) continue;
    Rational f = rem[static_cast<std::size_t>(i)] * inv;
    quo[static_cast<std::size_t>(i - dd)] = f;
    for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
  }
  q = UPoly(std::move(quo));
  r = UPoly(std::move(rem));
}

UPoly UPoly::rem(const UPoly& d) const {
  UPoly q, r;
  divmod(d, q, r);
  return r;
}

UPoly UPoly::quo(const UPoly& d) const {
  UPoly q, r;
  divmod(d, q, r);
  return q;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / lead());
}

Rational UPoly::eval(const Rational& x) const {
  Rational s = 0;
  for (std::size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
  return s;
}

int UPoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

std::string UPoly::to_string(const std::string& var) const {
  auto ring = Ring::make({var});
  return to_polynomial(ring, 0).to_string();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.rem(b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly square_free_part(const UPoly& p) {
  if (p.is_zero()) return p;
  UPoly g = gcd(p, p.derivative());
  return p.quo(g).monic();
}

}  // namespace mclosure
