#pragma once

// Exact integer lattice algebra: dense matrices over Z (GMP integers), Smith
// normal form, cokernels, coinvariants and finite abelian groups.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alcove/error.hpp"

namespace alcove {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
/// Point of X ⊗ Q. mpq_class keeps every coordinate in lowest terms.
using RationalVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long> values);
RationalVector to_rational(const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RationalVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector subtract(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& v, const Integer& c);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector subtract(const RationalVector& a, const RationalVector& b);
RationalVector scale(const RationalVector& v, const Rational& c);
bool is_zero(const IntVector& v);
std::optional<IntVector> to_integral(const RationalVector& v);

/// Parses "p/q" or "p"; throws Error(Inconsistent) on malformed input.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const IntVector& v);
std::string to_string(const RationalVector& v);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  IntVector apply(const IntVector& x) const;
  RationalVector apply(const RationalVector& x) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// column[target] += factor * column[source]
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const noexcept { return m.hash(); }
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);
/// Exact inverse of a matrix with determinant ±1; throws NonUnimodular otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);
IntMatrix power(const IntMatrix& m, unsigned exponent);

// ---------------------------------------------------------------------------
// Rational linear algebra

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  explicit RationalMatrix(const IntMatrix& m);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  RationalVector column(std::size_t j) const;
  RationalVector apply(const RationalVector& x) const;
  RationalMatrix transpose() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t rank(const RationalMatrix& a);
/// Unique solution of a·c = b when a has full column rank; nullopt when the
/// system is inconsistent. Throws Inconsistent if a is column-rank deficient.
std::optional<RationalVector> solve_unique(const RationalMatrix& a, const RationalVector& b);
/// Columns spanning the right null space of a.
std::vector<RationalVector> kernel_basis(const RationalMatrix& a);
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

/// Decides v ∈ span_Z(basis columns). Returns the integer coordinates on success.
/// The basis columns must be linearly independent.
std::optional<IntVector> lattice_membership(const RationalVector& v, const RationalMatrix& basis);
std::optional<IntVector> lattice_membership(const RationalVector& v, const IntMatrix& basis);

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithDecomposition {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  /// Diagonal of D (length min(rows, cols)); each nonzero entry divides the
  /// next, zeros trail.
  std::vector<Integer> factors;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// ---------------------------------------------------------------------------
// Finite abelian groups

/// Residue tuple with respect to the invariant factors of a group.
using GroupElement = std::vector<Integer>;

/// ⊕ Z/dᵢ with d₁ | d₂ | ... and every dᵢ > 1, optionally presented as a
/// quotient of an ambient lattice Z^n: projection (r × n) sends a lattice
/// vector to its residues, section (n × r) lifts the standard generators.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Abstract group; the ambient lattice is Z^r with the identity projection.
  explicit FiniteAbelianGroup(std::vector<Integer> invariant_factors);
  FiniteAbelianGroup(std::vector<Integer> invariant_factors, IntMatrix projection, IntMatrix section);

  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }
  std::vector<long> factors_as_long() const;
  std::size_t rank() const noexcept { return factors_.size(); }
  std::size_t ambient_rank() const noexcept { return projection_.cols(); }
  Integer order() const;
  bool is_trivial() const noexcept { return factors_.empty(); }

  const IntMatrix& projection() const noexcept { return projection_; }
  const IntMatrix& section() const noexcept { return section_; }

  GroupElement project(const IntVector& x) const;
  IntVector lift(const GroupElement& g) const;
  GroupElement reduce(GroupElement g) const;
  GroupElement zero() const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;
  GroupElement multiple(const GroupElement& a, const Integer& k) const;
  bool is_zero(const GroupElement& a) const;
  Integer element_order(const GroupElement& a) const;

  /// All elements in mixed-radix order; throws TooLarge above `bound`.
  std::vector<GroupElement> elements(std::size_t bound = 1u << 20) const;
  std::size_t index_of(const GroupElement& g) const;
  GroupElement element_at(std::size_t index) const;

  /// Invariant factors of the subgroup whose full element list is `members`.
  std::vector<Integer> subgroup_type(const std::vector<GroupElement>& members) const;

 private:
  std::vector<Integer> factors_;
  IntMatrix projection_;
  IntMatrix section_;
};

/// Z^n modulo the column span of a matrix, split as torsion ⊕ Z^free_rank.
struct Cokernel {
  FiniteAbelianGroup torsion;
  std::size_t free_rank = 0;
  /// free_rank × n; coordinates of a vector in the free summand.
  IntMatrix free_projection;

  bool is_finite() const noexcept { return free_rank == 0; }
};

Cokernel cokernel(const IntMatrix& a);
/// L_g = L / (g − 1)L for an automorphism g of L = Z^n.
Cokernel coinvariants(const IntMatrix& g);
FiniteAbelianGroup torsion_part(const Cokernel& c);

struct Subgroup {
  std::vector<GroupElement> generators;
  /// Sorted element indices (FiniteAbelianGroup::index_of) of every member.
  std::vector<std::size_t> members;
};

inline constexpr std::size_t kDefaultSubgroupBound = 64;

/// Every subgroup of g, trivial first, ordered by (order, members).
std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g,
                                          std::size_t bound = kDefaultSubgroupBound);

}  // namespace alcove
