#include <map>

#include "alcove/rootdata.hpp"

namespace alcove {

IntMatrix DatumAutomorphism::dual_matrix() const { return inverse_unimodular(matrix).transpose(); }

bool preserves_datum(const BasedRootDatum& d, const IntMatrix& m) {
  if (m.rows() != d.rank || m.cols() != d.rank) return false;
  if (abs(determinant(m)) != 1) return false;
  const IntMatrix dual = inverse_unimodular(m).transpose();
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < d.roots.size(); ++i) index.emplace(d.roots[i], i);
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    auto it = index.find(m.apply(d.roots[i]));
    if (it == index.end()) return false;
    if (dual.apply(d.coroot_of(i)) != d.coroot_of(it->second)) return false;
  }
  for (std::size_t k = 0; k < d.simple.size(); ++k) {
    IntVector image = m.apply(d.simple_root(k));
    bool simple = false;
    for (std::size_t j = 0; j < d.simple.size(); ++j) simple = simple || image == d.simple_root(j);
    if (!simple) return false;
  }
  return true;
}

DatumAutomorphism diagram_automorphism(const BasedRootDatum& d, const std::vector<int>& permutation) {
  const std::size_t l = d.simple.size();
  if (permutation.size() != l) throw Error(ErrorKind::NotAnAutomorphism, "permutation length differs from the rank of Δ");
  {
    std::vector<bool> seen(l, false);
    for (int p : permutation) {
      if (p < 0 || static_cast<std::size_t>(p) >= l || seen[static_cast<std::size_t>(p)])
        throw Error(ErrorKind::NotAnAutomorphism, "not a permutation of the simple roots");
      seen[static_cast<std::size_t>(p)] = true;
    }
  }
  if (!d.is_semisimple()) throw Error(ErrorKind::NotSemisimple, "diagram automorphisms are solved on semisimple data");
  const IntMatrix a = cartan_matrix(d);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      auto pi = static_cast<std::size_t>(permutation[i]);
      auto pj = static_cast<std::size_t>(permutation[j]);
      if (a(pi, pj) != a(i, j)) throw Error(ErrorKind::NotAnAutomorphism, "permutation does not preserve the Cartan matrix");
    }
  }
  // θ·S = T with S the simple roots and T the permuted simple roots
  std::vector<RationalVector> s_cols, t_cols;
  for (std::size_t i = 0; i < l; ++i) {
    s_cols.push_back(to_rational(d.simple_root(i)));
    t_cols.push_back(to_rational(d.simple_root(static_cast<std::size_t>(permutation[i]))));
  }
  RationalMatrix s = RationalMatrix::from_columns(s_cols, d.rank);
  RationalMatrix t = RationalMatrix::from_columns(t_cols, d.rank);
  auto s_inv = inverse(s);
  IntMatrix m(d.rank, d.rank);
  for (std::size_t i = 0; i < d.rank; ++i) {
    for (std::size_t j = 0; j < d.rank; ++j) {
      Rational v = 0;
      for (std::size_t k = 0; k < l; ++k) v += t(i, k) * (*s_inv)(k, j);
      if (v.get_den() != 1) throw Error(ErrorKind::NotAnAutomorphism, "induced map does not preserve X");
      m(i, j) = v.get_num();
    }
  }
  if (!preserves_datum(d, m)) throw Error(ErrorKind::NotAnAutomorphism, "induced map does not preserve the datum");
  DatumAutomorphism aut{m, permutation, 1};
  IntMatrix p = m;
  const IntMatrix id = IntMatrix::identity(d.rank);
  while (p != id) {
    p = p * m;
    ++aut.order;
    if (aut.order > 64) throw Error(ErrorKind::NotAnAutomorphism, "automorphism has no finite order");
  }
  return aut;
}

DatumAutomorphism diagram_automorphism(const CartanType& type, Isogeny isogeny, const std::vector<int>& permutation) {
  CartanType base = type;
  base.twist = 1;
  base.twist_permutation.clear();
  return diagram_automorphism(build_datum(base, isogeny), permutation);
}

TwistedDatum build_twisted(const CartanType& type, Isogeny isogeny) {
  TwistedDatum t;
  t.type = type;
  t.isogeny = isogeny;
  CartanType base = type;
  base.twist = 1;
  base.twist_permutation.clear();
  t.datum = build_datum(base, isogeny);
  if (type.twist > 1) {
    auto perm = type.twist_permutation.empty() ? standard_twist(type.series, type.rank, type.twist) : type.twist_permutation;
    t.twist.push_back(diagram_automorphism(t.datum, perm));
  }
  return t;
}

}  // namespace alcove
