#include "mclosure/polyvec.hpp"

#include "mclosure/error.hpp"

namespace mclosure {

PolyVec::PolyVec(RingPtr ring, std::size_t rank) : ring_(ring), c_(rank, Polynomial(ring)) {}

PolyVec::PolyVec(std::vector<Polynomial> comps) : c_(std::move(comps)) {
  if (c_.empty()) throw StructuralError("PolyVec needs at least one component");
  ring_ = c_[0].ring();
  for (const auto& p : c_)
    if (!same_ring(p.ring(), ring_)) throw StructuralError("PolyVec components in different rings");
}

PolyVec PolyVec::unit(RingPtr ring, std::size_t rank, std::size_t j) {
  PolyVec v(ring, rank);
  v.c_.at(j) = Polynomial::constant(ring, 1);
  return v;
}

bool PolyVec::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

PolyVec PolyVec::operator+(const PolyVec& o) const {
  if (rank() != o.rank()) throw StructuralError("PolyVec rank mismatch");
  PolyVec r(*this);
  for (std::size_t j = 0; j < rank(); ++j) r.c_[j] += o.c_[j];
  return r;
}

PolyVec PolyVec::operator-(const PolyVec& o) const {
  if (rank() != o.rank()) throw StructuralError("PolyVec rank mismatch");
  PolyVec r(*this);
  for (std::size_t j = 0; j < rank(); ++j) r.c_[j] -= o.c_[j];
  return r;
}

PolyVec PolyVec::operator-() const {
  PolyVec r(*this);
  for (auto& p : r.c_) p = -p;
  return r;
}

PolyVec PolyVec::operator*(const Polynomial& q) const {
  PolyVec r(*this);
  for (auto& p : r.c_) p = p * q;
  return r;
}

PolyVec PolyVec::operator*(const Rational& c) const {
  PolyVec r(*this);
  for (auto& p : r.c_) p = p * c;
  return r;
}

bool PolyVec::operator==(const PolyVec& o) const { return c_ == o.c_; }

long PolyVec::degree() const {
  long d = -1;
  for (const auto& p : c_) d = std::max(d, p.degree());
  return d;
}

PolyVec PolyVec::map_vars(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  std::vector<Polynomial> cs;
  cs.reserve(c_.size());
  for (const auto& p : c_) cs.push_back(p.map_vars(target, var_map));
  return PolyVec(std::move(cs));
}

PolyVec PolyVec::compose(const std::vector<Polynomial>& images, const RingPtr& target) const {
  std::vector<Polynomial> cs;
  cs.reserve(c_.size());
  for (const auto& p : c_) cs.push_back(p.compose(images, target));
  return PolyVec(std::move(cs));
}

PolyVec PolyVec::reorder(const RingPtr& target) const {
  std::vector<Polynomial> cs;
  cs.reserve(c_.size());
  for (const auto& p : c_) cs.push_back(p.reorder(target));
  return PolyVec(std::move(cs));
}

std::string PolyVec::to_string() const {
  if (c_.size() == 1) return c_[0].to_string();
  std::string s = "(";
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (j) s += ", ";
    s += c_[j].to_string();
  }
  return s + ")";
}

SubmoduleBasis::SubmoduleBasis(RingPtr r, std::size_t j, std::vector<PolyVec> g)
    : ring(std::move(r)), rank(j), gens(std::move(g)) {
  for (const auto& v : gens) {
    if (v.rank() != rank) throw StructuralError("generator rank does not match module rank");
    if (!same_ring(v.ring(), ring)) throw StructuralError("generator ring does not match module ring");
  }
}

SubmoduleBasis SubmoduleBasis::from_ideal(RingPtr r, const std::vector<Polynomial>& gens) {
  SubmoduleBasis b(r, 1);
  for (const auto& g : gens) b.add(PolyVec({g}));
  return b;
}

SubmoduleBasis SubmoduleBasis::full(RingPtr r, std::size_t j) {
  SubmoduleBasis b(r, j);
  for (std::size_t k = 0; k < j; ++k) b.gens.push_back(PolyVec::unit(r, j, k));
  b.is_groebner = true;
  return b;
}

bool SubmoduleBasis::is_zero() const {
  for (const auto& g : gens)
    if (!g.is_zero()) return false;
  return true;
}

void SubmoduleBasis::add(PolyVec v) {
  if (v.rank() != rank) throw StructuralError("generator rank does not match module rank");
  if (!same_ring(v.ring(), ring)) throw StructuralError("generator ring does not match module ring");
  gens.push_back(std::move(v));
  is_groebner = false;
}

PolyMatrix::PolyMatrix(RingPtr r, std::size_t nr, std::size_t nc)
    : ring(r), rows(nr), cols(nc), data(nr * nc, Polynomial(r)) {}

PolyMatrix PolyMatrix::identity(RingPtr r, std::size_t n) {
  PolyMatrix m(r, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(r, 1);
  return m;
}

PolyVec PolyMatrix::column(std::size_t j) const {
  PolyVec v(ring, rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = at(i, j);
  return v;
}

PolyVec PolyMatrix::operator*(const PolyVec& v) const {
  if (v.rank() != cols) throw StructuralError("matrix-vector size mismatch");
  PolyVec r(ring, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

}  // namespace mclosure
