#pragma once

#include <vector>

#include "mclosure/polynomial.hpp"

namespace mclosure {

// Element of R^J.
class PolyVec {
 public:
  PolyVec() = default;
  PolyVec(RingPtr ring, std::size_t rank);
  explicit PolyVec(std::vector<Polynomial> comps);
  static PolyVec unit(RingPtr ring, std::size_t rank, std::size_t j);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return c_.size(); }
  const Polynomial& operator[](std::size_t j) const { return c_[j]; }
  Polynomial& operator[](std::size_t j) { return c_[j]; }
  const std::vector<Polynomial>& comps() const { return c_; }
  bool is_zero() const;

  PolyVec operator+(const PolyVec& o) const;
  PolyVec operator-(const PolyVec& o) const;
  PolyVec operator-() const;
  PolyVec operator*(const Polynomial& q) const;
  PolyVec operator*(const Rational& c) const;
  bool operator==(const PolyVec& o) const;
  bool operator!=(const PolyVec& o) const { return !(*this == o); }

  long degree() const;
  PolyVec map_vars(const RingPtr& target, const std::vector<std::size_t>& var_map) const;
  PolyVec compose(const std::vector<Polynomial>& images, const RingPtr& target) const;
  PolyVec reorder(const RingPtr& target) const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> c_;
};

enum class ModuleOrderKind { TermOverPosition, PositionOverTerm };

// Generators of a submodule of R^J.
struct SubmoduleBasis {
  RingPtr ring;
  std::size_t rank = 1;
  std::vector<PolyVec> gens;
  bool is_groebner = false;
  ModuleOrderKind module_order = ModuleOrderKind::TermOverPosition;

  SubmoduleBasis() = default;
  SubmoduleBasis(RingPtr r, std::size_t j, std::vector<PolyVec> g = {});
  static SubmoduleBasis from_ideal(RingPtr r, const std::vector<Polynomial>& gens);
  static SubmoduleBasis full(RingPtr r, std::size_t j);

  // Nonzero generators only.
  bool is_zero() const;
  void add(PolyVec v);
};

// Dense matrix over a polynomial ring.
struct PolyMatrix {
  RingPtr ring;
  std::size_t rows = 0, cols = 0;
  std::vector<Polynomial> data;

  PolyMatrix() = default;
  PolyMatrix(RingPtr r, std::size_t nr, std::size_t nc);
  static PolyMatrix identity(RingPtr r, std::size_t n);
  Polynomial& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  PolyVec column(std::size_t j) const;
  PolyVec operator*(const PolyVec& v) const;
};

}  // namespace mclosure
