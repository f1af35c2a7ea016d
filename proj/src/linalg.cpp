#include "mclosure/linalg.hpp"

#include "mclosure/error.hpp"

namespace mclosure {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  if (x.cols != y.rows) throw StructuralError("matrix product size mismatch");
  QMatrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

namespace {

// Row echelon in place; returns rank and accumulates the determinant sign and
// pivot product.
std::size_t eliminate(QMatrix& m, Rational* det) {
  std::size_t r = 0;
  Rational d = 1;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) {
      d = 0;
      continue;
    }
    if (p != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
      d = -d;
    }
    d *= m.at(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (m.at(i, c) == 0) continue;
      Rational f = m.at(i, c) / m.at(r, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  if (det) *det = (r == m.rows) ? d : Rational(0);
  return r;
}

}  // namespace

std::size_t rank(QMatrix m) { return eliminate(m, nullptr); }

Rational determinant(QMatrix m) {
  if (m.rows != m.cols) throw StructuralError("determinant of non-square matrix");
  if (m.rows == 0) return 1;
  Rational d;
  eliminate(m, &d);
  return d;
}

QMatrix inverse(const QMatrix& m) {
  if (m.rows != m.cols) throw StructuralError("inverse of non-square matrix");
  std::size_t n = m.rows;
  QMatrix w(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w.at(i, j) = m.at(i, j);
    w.at(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w.at(p, c) == 0) ++p;
    if (p == n) throw DomainError("singular matrix");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(w.at(p, j), w.at(c, j));
    Rational inv = 1 / w.at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) w.at(c, j) *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || w.at(i, c) == 0) continue;
      Rational f = w.at(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  QMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.at(i, j) = w.at(i, n + j);
  return r;
}

Polynomial linear_change_of_vars(const Polynomial& f, const QMatrix& T) {
  const RingPtr& ring = f.ring();
  std::size_t q = ring->nvars();
  if (T.rows != q || T.cols != q) throw StructuralError("change of variables: matrix size must match ring");
  if (determinant(T) == 0) throw DomainError("change of variables: singular matrix");
  std::vector<Polynomial> images;
  images.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    Polynomial im(ring);
    for (std::size_t j = 0; j < q; ++j)
      if (T.at(i, j) != 0) im += Polynomial::variable(ring, j) * T.at(i, j);
    images.push_back(std::move(im));
  }
  return f.compose(images, ring);
}

PolyVec linear_change_of_vars(const PolyVec& v, const QMatrix& T) {
  std::vector<Polynomial> cs;
  for (const auto& p : v.comps()) cs.push_back(linear_change_of_vars(p, T));
  return PolyVec(std::move(cs));
}

}  // namespace mclosure
