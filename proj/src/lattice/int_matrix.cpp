#include <algorithm>
#include <sstream>

#include "alcove/lattice.hpp"

namespace alcove {

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RationalVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "dot product of unequal lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sum of unequal lengths");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector subtract(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector difference of unequal lengths");
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector scale(const IntVector& v, const Integer& c) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

RationalVector add(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector sum of unequal lengths");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalVector subtract(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "vector difference of unequal lengths");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalVector scale(const RationalVector& v, const Rational& c) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * c;
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

std::optional<IntVector> to_integral(const RationalVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    r[i] = v[i].get_num();
  }
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorKind::Inconsistent, "malformed rational '" + s + "'");
  }
  Integer d(den);
  if (d == 0) throw Error(ErrorKind::Inconsistent, "zero denominator in '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntVector IntMatrix::apply(const IntVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  IntVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Integer& a = (*this)(i, j);
      if (a != 0) s += a * x[j];
    }
    y[i] = s;
  }
  return y;
}

RationalVector IntMatrix::apply(const RationalVector& x) const {
  if (x.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  RationalVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Integer& a = (*this)(i, j);
      if (a != 0) s += x[j] * a;
    }
    y[i] = s;
  }
  return y;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) {
    const Integer& s = (*this)(source, j);
    if (s != 0) (*this)(target, j) += factor * s;
  }
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, source);
    if (s != 0) (*this)(i, target) += factor * s;
  }
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product size mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b(k, j);
        if (bkj != 0) c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum size mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference size mismatch");
  IntMatrix c(a.rows_, a.cols_);
  for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
  return c;
}

std::size_t IntMatrix::hash() const noexcept {
  std::size_t h = rows_ * 1315423911u + cols_;
  for (const auto& x : data_) {
    std::size_t v = std::hash<long>{}(mpz_get_si(x.get_mpz_t()));
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ", ";
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ", ";
      out << (*this)(i, j).get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  Integer det = determinant(m);
  if (abs(det) != 1) throw Error(ErrorKind::NonUnimodular, "determinant " + det.get_str());
  auto inv = inverse(RationalMatrix(m));
  IntMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = (*inv)(i, j).get_num();
  return r;
}

IntMatrix power(const IntMatrix& m, unsigned exponent) {
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

}  // namespace alcove
