#include <algorithm>

#include "alcove/rgroup.hpp"

namespace alcove {

CoinvariantsBridge coinvariants_bridge(const Setting& s) {
  const BasedRootDatum& d = s.twisted.datum;
  const std::size_t n = d.rank;
  const IntMatrix sigma = s.sigma();
  CoinvariantsBridge b;

  // A̲ = X / (Q + (σ − 1)X)
  const std::size_t l = d.simple.size();
  IntMatrix relations(n, l + n);
  for (std::size_t k = 0; k < l; ++k) {
    const IntVector a = d.simple_root(k);
    for (std::size_t i = 0; i < n; ++i) relations(i, k) = a[i];
  }
  const IntMatrix diff = sigma - IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) relations(i, l + j) = diff(i, j);
  Cokernel a_sigma = cokernel(relations);
  if (!a_sigma.is_finite()) throw Error(ErrorKind::NotSemisimple, "(X/Q)_σ is infinite");
  b.a_sigma = a_sigma.torsion;
  b.folded_quotient = s.omega.quotient;

  const std::size_t na = b.a_sigma.order().get_ui();
  const std::size_t nq = b.folded_quotient.order().get_ui();
  std::vector<bool> hit(nq, false);
  for (std::size_t k = 0; k < na; ++k) {
    const IntVector x = b.a_sigma.lift(b.a_sigma.element_at(k));
    const std::size_t img = b.folded_quotient.index_of(b.folded_quotient.project(s.restriction.projection.apply(x)));
    b.surjection.push_back(img);
    hit[img] = true;
  }
  b.surjective = std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
  for (std::size_t i = 0; i < na && b.homomorphism; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      const std::size_t sum = b.a_sigma.index_of(b.a_sigma.add(b.a_sigma.element_at(i), b.a_sigma.element_at(j)));
      const GroupElement expected = b.folded_quotient.add(b.folded_quotient.element_at(b.surjection[i]),
                                                          b.folded_quotient.element_at(b.surjection[j]));
      if (b.folded_quotient.index_of(expected) != b.surjection[sum]) {
        b.homomorphism = false;
        break;
      }
    }
  }
  const std::size_t zero = b.folded_quotient.index_of(b.folded_quotient.zero());
  std::vector<GroupElement> members;
  for (std::size_t k = 0; k < na; ++k) {
    if (b.surjection[k] == zero) {
      b.kernel.push_back(k);
      members.push_back(b.a_sigma.element_at(k));
    }
  }
  b.kernel_type = b.a_sigma.subgroup_type(members);
  b.torsion_type = coinvariants(sigma).torsion.invariant_factors();
  b.kernel_matches_torsion = b.kernel_type == b.torsion_type;
  return b;
}

OrderReport sphi_order(const Setting& s, const CoinvariantsBridge& b, const RationalVector& x) {
  OrderReport r;
  const StabilizerSubgroup stab = stabilizer(s.alcove, s.omega, x);
  r.omega_phi = stab.order();
  r.kernel = b.kernel.size();
  std::vector<bool> in_stab(s.omega.size(), false);
  for (std::size_t k : stab.elements) in_stab[k] = true;
  const std::size_t na = b.surjection.size();
  for (std::size_t k = 0; k < na; ++k) {
    if (in_stab[b.surjection[k]]) ++r.a_phi_preimage;
    // a · [x] = [x + a] read off in the alcove
    const IntVector lift = s.restriction.projection.apply(b.a_sigma.lift(b.a_sigma.element_at(k)));
    if (s.alcove.reduce(add(x, to_rational(lift)), false).point == x) ++r.a_phi_action;
  }
  r.ok = r.a_phi_action == r.a_phi_preimage && r.a_phi_action == r.kernel * r.omega_phi;
  return r;
}

}  // namespace alcove
