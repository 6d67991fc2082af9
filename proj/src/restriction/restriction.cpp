#include <algorithm>
#include <map>
#include <unordered_set>

#include "alcove/restriction.hpp"

namespace alcove {

namespace {

// Solves inclusion · z = y for z integral; y must lie in the image.
IntVector pull_back(const IntMatrix& inclusion, const IntVector& y) {
  auto z = lattice_membership(to_rational(y), inclusion);
  if (!z) throw Error(ErrorKind::Inconsistent, "vector " + to_string(y) + " is not θ-invariant");
  return *z;
}

}  // namespace

std::vector<IntMatrix> group_closure(const std::vector<IntMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorKind::DimensionMismatch, "group closure needs the ambient rank");
  const std::size_t n = generators.front().rows();
  std::vector<IntMatrix> out{IntMatrix::identity(n)};
  std::unordered_set<IntMatrix, IntMatrixHash> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : generators) {
      IntMatrix next = g * out[head];
      if (!seen.insert(next).second) continue;
      if (out.size() >= cap) {
        throw Error(ErrorKind::TooLarge, "automorphism group has order above " + std::to_string(cap));
      }
      out.push_back(std::move(next));
    }
  }
  return out;
}

RestrictionResult restrict_datum(const BasedRootDatum& d, const std::vector<DatumAutomorphism>& theta) {
  if (!d.reduced) throw Error(ErrorKind::NotReduced, "folding requires a reduced datum");
  for (const auto& t : theta) {
    if (!preserves_datum(d, t.matrix)) throw Error(ErrorKind::NotAnAutomorphism, "θ does not preserve the datum");
  }
  const std::size_t n = d.rank;
  RestrictionResult r;
  std::vector<IntMatrix> gens;
  for (const auto& t : theta) gens.push_back(t.matrix);
  if (gens.empty()) gens.push_back(IntMatrix::identity(n));
  r.group = group_closure(gens);

  // X_θ = X / Σ (g − 1)X over the generators; X̲ is its free quotient.
  IntMatrix relations(n, n * gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const IntMatrix diff = gens[k] - IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) relations(i, k * n + j) = diff(i, j);
  }
  Cokernel coinv = cokernel(relations);
  r.projection = coinv.free_projection;
  r.inclusion = r.projection.transpose();
  const std::size_t m = coinv.free_rank;

  // Fibers: roots grouped by their restriction to X̲̌.
  std::map<IntVector, std::size_t> index;
  std::vector<IntVector> folded_roots;
  std::vector<std::size_t> root_to_fiber(d.roots.size());
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    IntVector a = r.projection.apply(d.roots[i]);
    auto [it, inserted] = index.emplace(a, folded_roots.size());
    if (inserted) {
      folded_roots.push_back(a);
      r.fibers.emplace_back();
    }
    r.fibers[it->second].push_back(i);
    root_to_fiber[i] = it->second;
  }
  for (const auto& a : folded_roots) {
    if (is_zero(a)) throw Error(ErrorKind::Inconsistent, "a root restricts to zero on X̌^θ");
  }

  BasedRootDatum& f = r.folded;
  f.rank = m;
  f.roots = folded_roots;
  f.reduced = true;
  r.doubled.assign(folded_roots.size(), false);
  for (std::size_t k = 0; k < folded_roots.size(); ++k) {
    if (index.count(scale(folded_roots[k], 2))) {
      r.doubled[k] = true;
      f.reduced = false;
    }
  }
  for (std::size_t k = 0; k < folded_roots.size(); ++k) {
    IntVector sum(n, Integer(0));
    for (std::size_t i : r.fibers[k]) sum = add(sum, d.coroot_of(i));
    if (r.doubled[k]) sum = scale(sum, 2);
    f.coroots.push_back(pull_back(r.inclusion, sum));
    f.bijection.push_back(static_cast<int>(k));
  }
  for (std::size_t i = 0; i < d.simple.size(); ++i) {
    const int k = static_cast<int>(root_to_fiber[static_cast<std::size_t>(d.simple[i])]);
    if (std::find(f.simple.begin(), f.simple.end(), k) == f.simple.end()) f.simple.push_back(k);
  }
  return r;
}

RestrictionResult restrict_datum(const TwistedDatum& t) { return restrict_datum(t.datum, t.twist); }

IntMatrix restrict_to_invariants(const RestrictionResult& r, const IntMatrix& w) {
  // w acts on X̌ by (w⁻¹)ᵀ; express its action on the columns of the inclusion.
  const IntMatrix dual = inverse_unimodular(w).transpose();
  const IntMatrix image = dual * r.inclusion;
  const std::size_t m = r.inclusion.cols();
  IntMatrix out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    IntVector z = pull_back(r.inclusion, image.column(j));
    for (std::size_t i = 0; i < m; ++i) out(i, j) = z[i];
  }
  return out;
}

AlcoveGeometry folded_alcove(const RestrictionResult& r) { return AlcoveGeometry(r.folded); }

OmegaGroup folded_omega(const RestrictionResult& r) { return omega_by_cosets(folded_alcove(r)); }

}  // namespace alcove
