#include "mclosure/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "mclosure/error.hpp"

namespace mclosure {

namespace {

void check_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw StructuralError("polynomial ring mismatch");
}

}  // namespace

void Polynomial::canonicalize() {
  const auto& ord = ring_->order();
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  for (const auto& t : terms)
    if (t.mono.size() != p.ring_->nvars()) throw StructuralError("term length does not match ring");
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw StructuralError("variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->nvars(), i), 1});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  std::size_t i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->nvars()) throw StructuralError("monomial length does not match ring");
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(m), c});
  return p;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw DomainError("polynomial is not constant");
  return terms_[0].coeff;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_[0];
}

Rational Polynomial::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

long Polynomial::degree() const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, static_cast<long>(t.mono.degree()));
  return d;
}

long Polynomial::degree_in(std::size_t var) const {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.mono[var]);
  return d;
}

long Polynomial::degree_in(const std::vector<std::size_t>& vars) const {
  long d = -1;
  for (const auto& t : terms_) {
    long s = 0;
    for (auto v : vars) s += t.mono[v];
    d = std::max(d, s);
  }
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.mono[var]) return true;
  return false;
}

bool Polynomial::involves_any(const std::vector<std::size_t>& vars) const {
  for (auto v : vars)
    if (involves(v)) return true;
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(ring_, o.ring_);
  const auto& ord = ring_->order();
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = ord.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coeff + o.terms_[j].coeff;
      if (s != 0) r.terms_.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].mono, o.terms_[0].coeff);
  if (terms_.size() == 1) return o.mul_term(terms_[0].mono, terms_[0].coeff);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  std::vector<Term> ts;
  ts.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) ts.push_back({m, c});
  return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::diff(std::size_t var) const {
  if (var >= ring_->nvars()) throw StructuralError("derivative variable out of range");
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term n = t;
    n.coeff *= t.mono[var];
    n.mono[var] -= 1;
    ts.push_back(std::move(n));
  }
  return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::diff(const Monomial& alpha) const {
  if (alpha.size() != ring_->nvars()) throw StructuralError("multi-index length does not match ring");
  std::vector<Term> ts;
  for (const auto& t : terms_) {
    Term n = t;
    bool zero = false;
    for (std::size_t v = 0; v < alpha.size() && !zero; ++v) {
      for (std::uint32_t k = 0; k < alpha[v]; ++k) {
        if (n.mono[v] == 0) {
          zero = true;
          break;
        }
        n.coeff *= n.mono[v];
        n.mono[v] -= 1;
      }
    }
    if (!zero) ts.push_back(std::move(n));
  }
  return from_terms(ring_, std::move(ts));
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  if (point.size() != ring_->nvars()) throw StructuralError("evaluation point has wrong length");
  Rational s = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (t.mono[i] == 0) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), t.mono[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), t.mono[i]);
      v *= p;
    }
    s += v;
  }
  return s;
}

Polynomial Polynomial::partial_eval(const std::vector<std::size_t>& vars,
                                    const std::vector<Rational>& values) const {
  if (vars.size() != values.size()) throw StructuralError("partial_eval: size mismatch");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term n = t;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      std::uint32_t e = n.mono[vars[k]];
      if (!e) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), values[k].get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), values[k].get_den_mpz_t(), e);
      n.coeff *= p;
      n.mono[vars[k]] = 0;
    }
    if (n.coeff != 0) ts.push_back(std::move(n));
  }
  return from_terms(ring_, std::move(ts));
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images, const RingPtr& target) const {
  if (images.size() != ring_->nvars()) throw StructuralError("compose: wrong number of images");
  for (const auto& im : images) check_ring(im.ring_, target);
  // Cache powers per variable.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto& pv = powers[v];
    if (pv.empty()) pv.push_back(constant(target, 1));
    while (pv.size() <= e) pv.push_back(pv.back() * images[v]);
    return pv[e];
  };
  Polynomial r(target);
  for (const auto& t : terms_) {
    Polynomial m = constant(target, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (t.mono[v]) m = m * power(v, t.mono[v]);
    r += m;
  }
  return r;
}

Polynomial Polynomial::map_vars(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->nvars()) throw StructuralError("map_vars: wrong map length");
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t v = 0; v < var_map.size(); ++v) {
      if (!t.mono[v]) continue;
      if (var_map[v] >= target->nvars()) throw StructuralError("map_vars: target index out of range");
      m[var_map[v]] += t.mono[v];
    }
    ts.push_back({std::move(m), t.coeff});
  }
  return from_terms(target, std::move(ts));
}

Polynomial Polynomial::reorder(const RingPtr& target) const {
  if (target->names() != ring_->names()) throw StructuralError("reorder: variable names differ");
  Polynomial r(target);
  r.terms_ = terms_;
  r.canonicalize();
  return r;
}

Rational Polynomial::content() const {
  if (terms_.empty()) return 1;
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return abs(c);
}

Polynomial Polynomial::primitive() const {
  if (terms_.empty()) return *this;
  return *this * (1 / content());
}

Polynomial Polynomial::normalized() const {
  if (terms_.empty()) return *this;
  Polynomial p = primitive();
  if (p.leading_coeff() < 0) p = -p;
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * (1 / leading_coeff());
}

std::vector<Polynomial> Polynomial::coeffs_in(std::size_t var) const {
  long d = degree_in(var);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : static_cast<std::size_t>(d + 1));
  for (const auto& t : terms_) {
    Term n = t;
    n.mono[var] = 0;
    buckets[t.mono[var]].push_back(std::move(n));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(ring_, std::move(b)));
  return out;
}

Polynomial Polynomial::lc_in(std::size_t var) const {
  auto cs = coeffs_in(var);
  if (cs.empty()) return Polynomial(ring_);
  return cs.back();
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& g) const {
  check_ring(ring_, g.ring_);
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  auto res = divide(*this, {g});
  if (!res.remainder.is_zero()) return std::nullopt;
  return res.quotients[0];
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const RingPtr& ring = f.ring();
  for (const auto& g : divisors) {
    check_ring(ring, g.ring());
    if (g.is_zero()) throw DomainError("division by zero polynomial");
  }
  DivisionResult res;
  res.quotients.assign(divisors.size(), Polynomial(ring));
  std::vector<Term> rem;
  std::vector<std::vector<Term>> quot(divisors.size());
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Term& g = divisors[i].leading_term();
      if (g.mono.divides(lt.mono)) {
        Monomial q = g.mono.quotient_of(lt.mono);
        Rational c = lt.coeff / g.coeff;
        quot[i].push_back({q, c});
        p -= divisors[i].mul_term(q, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      p -= Polynomial::monomial(ring, lt.mono, lt.coeff);
    }
  }
  for (std::size_t i = 0; i < divisors.size(); ++i)
    res.quotients[i] = Polynomial::from_terms(ring, std::move(quot[i]));
  res.remainder = Polynomial::from_terms(ring, std::move(rem));
  return res;
}

}  // namespace mclosure
