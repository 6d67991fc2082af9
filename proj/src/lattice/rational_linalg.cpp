#include "alcove/lattice.hpp"

namespace alcove {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns, std::size_t rows) {
  RationalMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

RationalVector RationalMatrix::column(std::size_t j) const {
  RationalVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

RationalVector RationalMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  RationalVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a, std::size_t augmented_cols = 0) {
  std::vector<std::size_t> pivots;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols() - augmented_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    Rational inv = 1 / a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& a) {
  RationalMatrix copy = a;
  return rref(copy).size();
}

std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length mismatch");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug, 1);
  if (pivots.size() != a.cols()) throw Error(ErrorKind::Inconsistent, "coefficient matrix is column-rank deficient");
  for (std::size_t i = pivots.size(); i < a.rows(); ++i) {
    if (aug(i, a.cols()) != 0) return std::nullopt;
  }
  RationalVector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& a) {
  RationalMatrix copy = a;
  auto pivots = rref(copy);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(a.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -copy(k, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<IntVector> lattice_membership(const RationalVector& v, const RationalMatrix& basis) {
  if (v.size() != basis.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "vector of dimension " + std::to_string(v.size()) +
                                                  " against lattice in dimension " + std::to_string(basis.rows()));
  }
  auto coords = solve_unique(basis, v);
  if (!coords) return std::nullopt;
  return to_integral(*coords);
}

std::optional<IntVector> lattice_membership(const RationalVector& v, const IntMatrix& basis) {
  return lattice_membership(v, RationalMatrix(basis));
}

}  // namespace alcove
