#pragma once

// Stabilizers of points of the closed folded alcove under Ω̲, the
// compatibility of the Ω̲-action with translation by X̲/Q̲, the coinvariants
// bridge (X/Q)_σ ↠ X̲/Q̲, and the subgroup classification of stabilizers.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "alcove/restriction.hpp"

namespace alcove {

/// One (type, isogeny) pair run through folding and Ω̲. Untwisted types use
/// the trivial group, so Ψ̲ is Ψ up to a unimodular change of basis.
struct Setting {
  Setting(const CartanType& type, Isogeny isogeny);

  CartanType type;
  Isogeny isogeny;
  TwistedDatum twisted;
  RestrictionResult restriction;
  AlcoveGeometry alcove;
  OmegaGroup omega;

  /// σ on X; the identity for untwisted types.
  IntMatrix sigma() const;
  std::string label() const { return type.label(); }
};

struct ParameterPoint {
  RationalVector point;
  std::string label;
};

/// "c0", "face:0,2" (barycenter of the face where walls 0 and 2 vanish), or
/// comma-separated rationals in X̲-coordinates.
ParameterPoint parse_point(const AlcoveGeometry& alcove, const std::string& text);

/// Seeded random point of C̄; about a third of the barycentric weights are
/// zero so that faces of every dimension are hit.
RationalVector random_alcove_point(const AlcoveGeometry& alcove, std::mt19937_64& rng);

struct StabilizerSubgroup {
  /// Indices into OmegaGroup::elements (equivalently, into X̲/Q̲).
  std::vector<std::size_t> elements;
  std::vector<Integer> iso_type;
  std::size_t order() const noexcept { return elements.size(); }
};

/// Throws PointOutsideAlcove unless x ∈ C̄.
StabilizerSubgroup stabilizer(const AlcoveGeometry& alcove, const OmegaGroup& omega, const RationalVector& x);
bool is_subgroup(const OmegaGroup& omega, const std::vector<std::size_t>& elements);

struct CompatibilityResult {
  bool ok = true;
  RationalVector lhs;  // ω̃_a · x
  RationalVector rhs;  // reduction of x + x_[a]
};

/// Compares ω̃_a · x with the alcove representative of x + x_[a], where x_[a]
/// lifts the class with index `a` of X̲/Q̲ to X̲.
CompatibilityResult compatibility_check(const AlcoveGeometry& alcove, const OmegaGroup& omega, std::size_t a,
                                        const RationalVector& x);

struct CoinvariantsBridge {
  FiniteAbelianGroup a_sigma;          // A̲ = (X/Q)_σ
  FiniteAbelianGroup folded_quotient;  // X̲/Q̲
  /// surjection[k] = index in X̲/Q̲ of the image of a_sigma.element_at(k).
  std::vector<std::size_t> surjection;
  bool homomorphism = true;
  bool surjective = true;
  std::vector<std::size_t> kernel;
  std::vector<Integer> kernel_type;
  std::vector<Integer> torsion_type;   // (X_σ)^tor
  bool kernel_matches_torsion = true;
};

CoinvariantsBridge coinvariants_bridge(const Setting& s);

struct OrderReport {
  std::size_t omega_phi = 0;          // |Ω̲_φ|
  std::size_t a_phi_preimage = 0;     // |A̲_φ| as the preimage of Ω̲_φ
  std::size_t a_phi_action = 0;       // |A̲_φ| from the action x ↦ [x + x_a]
  std::size_t kernel = 0;
  bool ok = true;
};

OrderReport sphi_order(const Setting& s, const CoinvariantsBridge& bridge, const RationalVector& x);

struct RealizedSubgroup {
  Subgroup subgroup;
  std::vector<Integer> iso_type;
  bool realized = false;
  RationalVector witness;  // a point whose stabilizer is exactly the subgroup
  std::size_t attempts = 0;
};

struct Classification {
  std::vector<RealizedSubgroup> subgroups;  // every subgroup of Ω̲
  bool all_realized = true;
};

inline constexpr std::size_t kSampleRetries = 100;

/// For every subgroup H of Ω̲, samples points of Fix(H) near c₀ and records
/// whether one has stabilizer exactly H.
Classification classify_stabilizers(const Setting& s, std::uint64_t seed = 1);

struct Table1Row {
  std::string type;
  std::vector<long> expected;  // as printed in the source table
  std::vector<long> computed;
  bool match = false;
};

/// Types reproduced by table1(), in row order.
std::vector<std::string> table1_types();
/// The source table's Ω̲ column for a row label.
std::vector<long> table1_expected(const std::string& type);
std::vector<Table1Row> table1();

}  // namespace alcove
