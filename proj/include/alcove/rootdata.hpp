#pragma once

// Based root data (X, R, Δ, X̌, Ř, Δ̌) in integer coordinates. X and X̌ are
// both Z^rank and the pairing is the dot product.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alcove/lattice.hpp"

namespace alcove {

enum class Series { A, B, C, D, E, F, G, BC };

std::string_view to_string(Series s);

/// Label such as A3, 2A5 or 3D4. Twist permutations act on 0-based node
/// indices in Bourbaki numbering.
struct CartanType {
  Series series = Series::A;
  int rank = 1;
  int twist = 1;
  std::vector<int> twist_permutation;

  std::string label() const;
  /// Accepts "A3", "2A5", "3D4", "E6", "BC2". Throws InvalidType / InvalidRank.
  static CartanType parse(std::string_view text);

  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.series == b.series && a.rank == b.rank && a.twist == b.twist;
  }
};

enum class Isogeny { simply_connected, adjoint };

std::string_view to_string(Isogeny i);
Isogeny parse_isogeny(std::string_view text);

/// Cartan matrix with entries a_ij = ⟨α_j, α̌_i⟩, Bourbaki node order.
IntMatrix cartan_matrix(Series series, int rank);

struct BasedRootDatum {
  std::size_t rank = 0;  // dimension of X
  std::vector<IntVector> roots;
  std::vector<IntVector> coroots;
  /// Indices into `roots` forming Δ, in node order.
  std::vector<int> simple;
  /// roots[i] pairs with coroots[bijection[i]].
  std::vector<int> bijection;
  /// Reduced data never contain both α and 2α.
  bool reduced = true;

  const IntVector& coroot_of(std::size_t root_index) const { return coroots[static_cast<std::size_t>(bijection[root_index])]; }
  std::size_t semisimple_rank() const { return simple.size(); }
  bool is_semisimple() const { return simple.size() == rank; }
  IntVector simple_root(std::size_t i) const { return roots[static_cast<std::size_t>(simple[i])]; }
  IntVector simple_coroot(std::size_t i) const { return coroot_of(static_cast<std::size_t>(simple[i])); }
  std::optional<std::size_t> find_root(const IntVector& v) const;

  /// s_α(x) = x − ⟨x, α̌⟩α as a matrix on X.
  IntMatrix reflection(std::size_t root_index) const;
  /// s_α̌(y) = y − ⟨α, y⟩α̌ as a matrix on X̌.
  IntMatrix coreflection(std::size_t root_index) const;
};

BasedRootDatum build_datum(const CartanType& type, Isogeny isogeny);
/// Block sum of two data; roots and coroots are padded with zeros.
BasedRootDatum direct_sum(const BasedRootDatum& a, const BasedRootDatum& b);
/// Central torus of the given rank: X = Z^rank with no roots.
BasedRootDatum torus(std::size_t rank);

struct ValidationReport {
  bool ok = true;
  std::string violation;
};

ValidationReport validate(const BasedRootDatum& datum);

/// a_ij = ⟨α_j, α̌_i⟩ over Δ.
IntMatrix cartan_matrix(const BasedRootDatum& datum);
/// Node index groups of the connected components of the Dynkin diagram.
std::vector<std::vector<int>> irreducible_components(const BasedRootDatum& datum);
/// Coordinates of every root in the basis Δ (exact).
std::vector<RationalVector> root_coordinates(const BasedRootDatum& datum);
/// Coordinates of every coroot (indexed like `coroots`) in the basis Δ̌.
std::vector<RationalVector> coroot_coordinates(const BasedRootDatum& datum);

struct HighestCoroot {
  IntVector coroot;
  std::vector<Integer> marks;
  std::size_t root_index = 0;  // the root whose coroot this is
};

/// Highest coroot of an irreducible datum. For non-reduced data the
/// maximum is taken over Ř as given. Throws NotIrreducible.
HighestCoroot highest_coroot(const BasedRootDatum& datum);
Integer coxeter_number(const BasedRootDatum& datum);

/// X/Q: torsion part and free rank of the cokernel of Q ⊂ X.
Cokernel fundamental_group(const BasedRootDatum& datum);

struct IdentifiedComponent {
  CartanType type;
  std::vector<int> nodes;
};

/// Type of every irreducible component; throws Unrecognized with the Cartan
/// matrix in the message when no reference matrix matches.
std::vector<IdentifiedComponent> identify_type(const BasedRootDatum& datum);
std::string type_label(const std::vector<IdentifiedComponent>& components);

struct DatumAutomorphism {
  IntMatrix matrix;            // on X
  std::vector<int> permutation;  // on simple indices
  int order = 1;

  /// Action on X̌, the inverse transpose.
  IntMatrix dual_matrix() const;
};

/// The automorphism of the based datum inducing `permutation` on Δ.
/// Throws NotAnAutomorphism when the Cartan matrix or the lattices are not preserved.
DatumAutomorphism diagram_automorphism(const BasedRootDatum& datum, const std::vector<int>& permutation);
DatumAutomorphism diagram_automorphism(const CartanType& type, Isogeny isogeny, const std::vector<int>& permutation);

/// True when the matrix preserves R, Ř and Δ with the pairing.
bool preserves_datum(const BasedRootDatum& datum, const IntMatrix& matrix);

/// Standard diagram twist of the requested order for A, D and E6.
std::vector<int> standard_twist(Series series, int rank, int order);

struct TwistedDatum {
  CartanType type;
  Isogeny isogeny = Isogeny::simply_connected;
  BasedRootDatum datum;
  /// Generators of θ; empty for untwisted types.
  std::vector<DatumAutomorphism> twist;
};

TwistedDatum build_twisted(const CartanType& type, Isogeny isogeny);

}  // namespace alcove
