#pragma once

// Weyl groups, the extended affine Weyl group W ⋉ X acting on V = X ⊗ Q,
// the fundamental alcove with its weighted barycenter, and the alcove
// stabilizer Ω ≅ X/Q built two independent ways.

#include <cstdint>
#include <optional>
#include <vector>

#include "alcove/lattice.hpp"
#include "alcove/rootdata.hpp"

namespace alcove {

struct WeylElement {
  IntMatrix matrix;
  /// Simple-reflection indices; matrix = s_{word[0]} · s_{word[1]} · ...
  std::vector<int> word;
};

enum class Side { character, cocharacter };

inline constexpr std::size_t kDefaultWeylCap = 10'000'000;
inline constexpr std::size_t kDefaultScanCap = 50'000'000;

/// Stored enumerations stop here. Overridden by ALCOVE_WEYL_CAP.
std::size_t default_weyl_cap();
/// Streaming scans over W (no storage) stop here. Overridden by ALCOVE_WEYL_CAP.
std::size_t default_scan_cap();

/// Matrix of s_i on X (or X̌) for the i-th simple root.
IntMatrix simple_reflection(const BasedRootDatum& datum, std::size_t i, Side side = Side::character);
IntMatrix word_matrix(const BasedRootDatum& datum, const std::vector<int>& word, Side side = Side::character);

/// Breadth-first enumeration of W by words, deduplicated by matrix.
/// Throws CapExceededError once more than `cap` elements are found.
std::vector<WeylElement> generate_weyl(const BasedRootDatum& datum, std::size_t cap = default_weyl_cap(),
                                       Side side = Side::character);

/// |W| by walking the orbit of a regular dominant vector; nothing is stored.
std::uint64_t weyl_order(const BasedRootDatum& datum, std::size_t cap = default_scan_cap());

// ---------------------------------------------------------------------------

/// x ↦ linear·x + translation.
struct AffineMap {
  WeylElement linear;
  RationalVector translation;

  friend bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.linear.matrix == b.linear.matrix && a.translation == b.translation;
  }
};

AffineMap identity_map(std::size_t dimension);
AffineMap translation_map(const RationalVector& t);
/// (w₁,t₁)·(w₂,t₂) = (w₁w₂, t₁ + w₁t₂)
AffineMap compose(const AffineMap& a, const AffineMap& b);
AffineMap inverse(const AffineMap& a);
RationalVector act(const AffineMap& m, const RationalVector& x);

struct Reduction {
  RationalVector point;
  /// Element of W ⋉ Q with witness·x = point; identity when not requested.
  AffineMap witness;
  /// Walls reflected in, in order.
  std::vector<int> walls;
};

/// Fundamental alcove of an irreducible semisimple datum:
/// C = { x : α̌₀(x) ≥ 0, α̌₁(x) ≥ 0, …, α̌_l(x) ≥ 0 } with α̌₀ = 1 − β̌.
/// Wall index 0 is α̌₀, wall i ≥ 1 is the i-th simple coroot.
class AlcoveGeometry {
 public:
  explicit AlcoveGeometry(BasedRootDatum datum);

  const BasedRootDatum& datum() const noexcept { return datum_; }
  std::size_t dimension() const noexcept { return datum_.rank; }
  std::size_t walls() const noexcept { return datum_.simple.size() + 1; }
  const HighestCoroot& highest() const noexcept { return highest_; }
  const Integer& coxeter_number() const noexcept { return coxeter_; }
  const RationalVector& barycenter() const noexcept { return barycenter_; }
  /// v₀ = 0 and vᵢ the vertex off wall i.
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }
  /// X/Q for this datum (finite since the datum is semisimple).
  const FiniteAbelianGroup& quotient() const noexcept { return quotient_; }

  std::vector<Rational> wall_values(const RationalVector& x) const;
  bool contains(const RationalVector& x) const;
  bool in_interior(const RationalVector& x) const;
  /// Barycenter of the face on which exactly the walls in `active` vanish.
  RationalVector face_barycenter(const std::vector<int>& active) const;
  /// Affine reflection in wall i, an element of W ⋉ Q.
  AffineMap wall_reflection(int wall) const;

  /// Repeatedly reflects in the most violated wall (ties → lowest index).
  Reduction reduce(const RationalVector& x, bool with_witness = true, std::size_t max_steps = 1'000'000) const;

 private:
  BasedRootDatum datum_;
  HighestCoroot highest_;
  Integer coxeter_;
  RationalVector barycenter_;
  std::vector<RationalVector> vertices_;
  FiniteAbelianGroup quotient_;
  // functionals[k] and reflection roots[k] for wall k (0: β̌ / β)
  std::vector<IntVector> wall_coroots_;
  std::vector<IntVector> wall_roots_;
  std::vector<std::vector<Integer>> wall_pairings_;  // ⟨wall_roots_[a], wall_coroots_[b]⟩
  std::vector<int> beta_word_;
};

/// Unique point with α̌ᵢ(c₀) = 1/h for i = 0, …, l.
RationalVector weighted_barycenter(const BasedRootDatum& datum);
Reduction reduce_to_alcove(const AlcoveGeometry& geometry, const RationalVector& x);

// ---------------------------------------------------------------------------

struct OmegaGroup {
  /// elements[k] has ι-image quotient.element_at(k).
  std::vector<AffineMap> elements;
  std::vector<std::vector<std::size_t>> table;
  std::vector<GroupElement> iota_images;
  FiniteAbelianGroup quotient;

  std::size_t size() const noexcept { return elements.size(); }
  std::size_t identity_index() const;
  std::size_t index_of(const AffineMap& m) const;
  std::size_t inverse_index(std::size_t k) const;
  std::size_t by_class(const GroupElement& c) const { return quotient.index_of(c); }
};

/// ι(w̃) = (w⁻¹ − 1)c₀ + Q
GroupElement iota_by_barycenter(const AlcoveGeometry& geometry, const AffineMap& m);
/// Image of the translation part under W̃ → W̃/W̃° = X/Q.
GroupElement iota_by_projection(const AlcoveGeometry& geometry, const AffineMap& m);

/// Ω = { w̃ : (w⁻¹ − 1)c₀ ∈ X } over a full scan of W.
OmegaGroup omega_by_barycenter(const AlcoveGeometry& geometry, std::size_t scan_cap = default_scan_cap());
/// One element per class of X/Q, extracted by reducing c₀ + x to the alcove.
OmegaGroup omega_by_cosets(const AlcoveGeometry& geometry);

bool permutes_vertices(const AlcoveGeometry& geometry, const AffineMap& m);

struct IotaReport {
  bool ok = true;
  bool homomorphism = true;
  bool bijective = true;
  bool formulas_agree = true;
  bool stabilizes_alcove = true;
  std::string detail;
};

IotaReport check_iota(const AlcoveGeometry& geometry, const OmegaGroup& omega);
/// Element-wise agreement after matching by ι-class.
bool same_elements(const OmegaGroup& a, const OmegaGroup& b);

}  // namespace alcove
