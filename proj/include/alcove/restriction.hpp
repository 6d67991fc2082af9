#pragma once

// Folding a reduced based root datum along a finite group θ of automorphisms:
//   X̲ = X_θ / torsion,  X̲̌ = X̌^θ,  R̲ = { a|X̲̌ },  Δ̲ = { a|X̲̌ : a ∈ Δ },
// with α̌ = Σ ǎ over the fiber of α, doubled when 2α ∈ R̲.

#include <string>
#include <vector>

#include "alcove/rootdata.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

inline constexpr std::size_t kMaxTwistGroupOrder = 6;

struct RestrictionResult {
  BasedRootDatum folded;
  /// X → X̲ (m × n). Restriction of a character to X̲̌ is projection · a.
  IntMatrix projection;
  /// X̲̌ → X̌ (n × m), the transpose of `projection`; its image is X̌^θ.
  IntMatrix inclusion;
  /// fibers[k]: indices of the roots of the original datum restricting to folded root k.
  std::vector<std::vector<std::size_t>> fibers;
  /// doubled[k]: 2·(folded root k) is again a folded root.
  std::vector<bool> doubled;
  /// Every element of θ (as matrices on X), identity first.
  std::vector<IntMatrix> group;
};

/// Closure of the generators under multiplication; throws TooLarge past `cap`.
std::vector<IntMatrix> group_closure(const std::vector<IntMatrix>& generators, std::size_t cap = kMaxTwistGroupOrder);

/// Throws NotReduced for non-reduced input and NotAnAutomorphism when a
/// generator does not preserve the datum.
RestrictionResult restrict_datum(const BasedRootDatum& datum, const std::vector<DatumAutomorphism>& theta);
RestrictionResult restrict_datum(const TwistedDatum& twisted);

/// Matrix of w|X̲̌ for an element w of W acting on X (w must commute with θ).
IntMatrix restrict_to_invariants(const RestrictionResult& r, const IntMatrix& w_on_x);

struct YuReport {
  bool ok = true;
  bool folded_valid = true;
  bool injective = true;
  bool image_is_folded_weyl = true;
  bool generators_contained = true;
  std::size_t weyl_order = 0;          // |W(Ψ)|
  std::size_t fixed_order = 0;         // |W(Ψ)^θ|
  std::size_t folded_weyl_order = 0;   // |W(Ψ̲)|
  std::string folded_type;
  std::string detail;
};

YuReport verify_theorem_yu(const BasedRootDatum& datum, const std::vector<DatumAutomorphism>& theta,
                           std::size_t cap = default_weyl_cap());

/// Ω̲ of the folded datum, which must be irreducible and semisimple.
AlcoveGeometry folded_alcove(const RestrictionResult& r);
OmegaGroup folded_omega(const RestrictionResult& r);

}  // namespace alcove
