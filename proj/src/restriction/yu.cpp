#include <unordered_set>

#include "alcove/restriction.hpp"

namespace alcove {

YuReport verify_theorem_yu(const BasedRootDatum& d, const std::vector<DatumAutomorphism>& theta, std::size_t cap) {
  YuReport rep;
  auto fail = [&](bool& flag, const std::string& why) {
    if (rep.detail.empty()) rep.detail = why;
    flag = false;
    rep.ok = false;
  };

  const RestrictionResult r = restrict_datum(d, theta);
  const ValidationReport v = validate(r.folded);
  if (!v.ok) fail(rep.folded_valid, "folded datum: " + v.violation);
  rep.folded_type = type_label(identify_type(r.folded));

  const std::vector<WeylElement> w = generate_weyl(d, cap);
  rep.weyl_order = w.size();
  std::unordered_set<IntMatrix, IntMatrixHash> image;
  for (const auto& e : w) {
    bool fixed = true;
    for (const auto& g : r.group) fixed = fixed && g * e.matrix == e.matrix * g;
    if (!fixed) continue;
    ++rep.fixed_order;
    image.insert(restrict_to_invariants(r, e.matrix));
  }
  if (image.size() != rep.fixed_order) {
    fail(rep.injective, "restriction to X̌^θ identifies " + std::to_string(rep.fixed_order - image.size()) + " elements");
  }

  const std::vector<WeylElement> folded = generate_weyl(r.folded, cap, Side::cocharacter);
  rep.folded_weyl_order = folded.size();
  for (std::size_t i = 0; i < r.folded.simple.size(); ++i) {
    if (!image.count(simple_reflection(r.folded, i, Side::cocharacter))) {
      fail(rep.generators_contained, "simple reflection " + std::to_string(i) + " of the folded datum is not a restriction");
    }
  }
  if (folded.size() != image.size()) {
    fail(rep.image_is_folded_weyl, "|W^θ| = " + std::to_string(image.size()) + " but |W(Ψ̲)| = " + std::to_string(folded.size()));
  } else {
    for (const auto& e : folded) {
      if (!image.count(e.matrix)) {
        fail(rep.image_is_folded_weyl, "an element of W(Ψ̲) is not a restriction");
        break;
      }
    }
  }
  return rep;
}

}  // namespace alcove
