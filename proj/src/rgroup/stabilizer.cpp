#include "alcove/rgroup.hpp"

namespace alcove {

StabilizerSubgroup stabilizer(const AlcoveGeometry& alcove, const OmegaGroup& omega, const RationalVector& x) {
  if (!alcove.contains(x)) throw Error(ErrorKind::PointOutsideAlcove, to_string(x) + " is not in the closed alcove");
  StabilizerSubgroup s;
  std::vector<GroupElement> members;
  for (std::size_t k = 0; k < omega.size(); ++k) {
    if (act(omega.elements[k], x) == x) {
      s.elements.push_back(k);
      members.push_back(omega.quotient.element_at(k));
    }
  }
  s.iso_type = omega.quotient.subgroup_type(members);
  return s;
}

bool is_subgroup(const OmegaGroup& omega, const std::vector<std::size_t>& elements) {
  std::vector<bool> in(omega.size(), false);
  for (std::size_t k : elements) in[k] = true;
  if (!in[omega.identity_index()]) return false;
  for (std::size_t a : elements) {
    if (!in[omega.inverse_index(a)]) return false;
    for (std::size_t b : elements)
      if (!in[omega.table[a][b]]) return false;
  }
  return true;
}

CompatibilityResult compatibility_check(const AlcoveGeometry& alcove, const OmegaGroup& omega, std::size_t a,
                                        const RationalVector& x) {
  if (!alcove.contains(x)) throw Error(ErrorKind::PointOutsideAlcove, to_string(x) + " is not in the closed alcove");
  CompatibilityResult r;
  r.lhs = act(omega.elements.at(a), x);
  const IntVector shift = omega.quotient.lift(omega.quotient.element_at(a));
  r.rhs = alcove.reduce(add(x, to_rational(shift)), false).point;
  r.ok = r.lhs == r.rhs;
  return r;
}

}  // namespace alcove
