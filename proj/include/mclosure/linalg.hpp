#pragma once

#include <optional>
#include <vector>

#include "mclosure/polyvec.hpp"

namespace mclosure {

// Dense rational matrix, row-major.
struct QMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static QMatrix identity(std::size_t n);
  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  bool operator==(const QMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

QMatrix operator*(const QMatrix& x, const QMatrix& y);
std::size_t rank(QMatrix m);
Rational determinant(QMatrix m);
// Throws DomainError when singular.
QMatrix inverse(const QMatrix& m);

// f(x) -> f(T x): variable i becomes sum_j T[i][j] x_j. Throws DomainError
// when T is singular and StructuralError when T is not nvars x nvars.
Polynomial linear_change_of_vars(const Polynomial& f, const QMatrix& T);
PolyVec linear_change_of_vars(const PolyVec& v, const QMatrix& T);

}  // namespace mclosure
