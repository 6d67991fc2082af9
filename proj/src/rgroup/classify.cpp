#include "alcove/rgroup.hpp"

namespace alcove {

namespace {

// Directions d with w·d = d for every linear part in the subgroup. Every
// element of Ω̲ fixes c₀, so Fix(H) = c₀ + span of these directions.
std::vector<RationalVector> fixed_directions(const OmegaGroup& omega, const std::vector<std::size_t>& members,
                                             std::size_t dim) {
  RationalMatrix stacked(members.size() * dim, dim);
  for (std::size_t m = 0; m < members.size(); ++m) {
    const IntMatrix& w = omega.elements[members[m]].linear.matrix;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) stacked(m * dim + i, j) = w(i, j) - (i == j ? 1 : 0);
  }
  return kernel_basis(stacked);
}

}  // namespace

Classification classify_stabilizers(const Setting& s, std::uint64_t seed) {
  const AlcoveGeometry& alcove = s.alcove;
  const OmegaGroup& omega = s.omega;
  const std::size_t dim = alcove.dimension();
  std::mt19937_64 rng(seed);
  Classification out;
  for (auto& sub : enumerate_subgroups(omega.quotient)) {
    RealizedSubgroup r;
    std::vector<GroupElement> members;
    for (std::size_t k : sub.members) members.push_back(omega.quotient.element_at(k));
    r.iso_type = omega.quotient.subgroup_type(members);
    const auto dirs = fixed_directions(omega, sub.members, dim);
    while (!r.realized && r.attempts < kSampleRetries) {
      ++r.attempts;
      RationalVector delta(dim, Rational(0));
      for (const auto& d : dirs) {
        const long c = static_cast<long>(rng() % 1999) - 999;
        delta = add(delta, scale(d, Rational(c)));
      }
      // Shrink the step so every wall value stays within (0, 2/h).
      Rational worst = 0;
      for (const auto& f : alcove.wall_values(add(alcove.barycenter(), delta))) {
        Rational change = abs(f - Rational(1) / Rational(alcove.coxeter_number()));
        if (change > worst) worst = change;
      }
      Integer bound = worst.get_num() / worst.get_den() + 1;
      Rational eps(Integer(1), 2 * alcove.coxeter_number() * bound);
      eps.canonicalize();
      RationalVector x = add(alcove.barycenter(), scale(delta, eps));
      const StabilizerSubgroup stab = stabilizer(alcove, omega, x);
      if (stab.elements == sub.members) {
        r.realized = true;
        r.witness = x;
      }
      if (dirs.empty()) break;
    }
    out.all_realized = out.all_realized && r.realized;
    r.subgroup = std::move(sub);
    out.subgroups.push_back(std::move(r));
  }
  return out;
}

}  // namespace alcove
