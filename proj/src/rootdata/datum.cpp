#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "alcove/rootdata.hpp"

namespace alcove {

std::optional<std::size_t> BasedRootDatum::find_root(const IntVector& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i] == v) return i;
  }
  return std::nullopt;
}

IntMatrix BasedRootDatum::reflection(std::size_t root_index) const {
  const IntVector& a = roots[root_index];
  const IntVector& c = coroot_of(root_index);
  IntMatrix m = IntMatrix::identity(rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) m(i, j) -= a[i] * c[j];
  return m;
}

IntMatrix BasedRootDatum::coreflection(std::size_t root_index) const {
  const IntVector& a = roots[root_index];
  const IntVector& c = coroot_of(root_index);
  IntMatrix m = IntMatrix::identity(rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j) m(i, j) -= c[i] * a[j];
  return m;
}

BasedRootDatum build_datum(const CartanType& type, Isogeny isogeny) {
  if (type.series == Series::BC) {
    throw Error(ErrorKind::InvalidType, "non-reduced types arise only from folding");
  }
  const IntMatrix a = cartan_matrix(type.series, type.rank);
  const std::size_t l = a.rows();

  // Reflection closure of Δ in simple-root coordinates, coroots carried along.
  std::vector<IntVector> root_c, coroot_c;
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < l; ++i) {
    IntVector e(l, Integer(0));
    e[i] = 1;
    index.emplace(e, root_c.size());
    root_c.push_back(e);
    coroot_c.push_back(e);
  }
  for (std::size_t head = 0; head < root_c.size(); ++head) {
    for (std::size_t i = 0; i < l; ++i) {
      IntVector r = root_c[head];
      IntVector rc = coroot_c[head];
      Integer p = 0, q = 0;
      for (std::size_t j = 0; j < l; ++j) {
        p += a(i, j) * r[j];
        q += rc[j] * a(j, i);
      }
      r[i] -= p;
      rc[i] -= q;
      if (index.count(r)) continue;
      index.emplace(r, root_c.size());
      root_c.push_back(std::move(r));
      coroot_c.push_back(std::move(rc));
    }
  }

  // Positive roots by height then coordinates, followed by their negatives.
  std::vector<std::size_t> positive;
  for (std::size_t k = 0; k < root_c.size(); ++k) {
    if (std::all_of(root_c[k].begin(), root_c[k].end(), [](const Integer& x) { return x >= 0; }))
      positive.push_back(k);
  }
  auto height = [&](std::size_t k) { return std::accumulate(root_c[k].begin(), root_c[k].end(), Integer(0)); };
  std::sort(positive.begin(), positive.end(), [&](std::size_t x, std::size_t y) {
    Integer hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return std::lexicographical_compare(root_c[y].begin(), root_c[y].end(), root_c[x].begin(), root_c[x].end());
  });

  BasedRootDatum d;
  d.rank = l;
  auto to_x = [&](const IntVector& c) {
    return isogeny == Isogeny::simply_connected ? a.apply(c) : c;
  };
  auto to_xcheck = [&](const IntVector& c) {
    return isogeny == Isogeny::simply_connected ? c : a.transpose().apply(c);
  };
  for (int sign : {1, -1}) {
    for (std::size_t k : positive) {
      d.roots.push_back(scale(to_x(root_c[k]), sign));
      d.coroots.push_back(scale(to_xcheck(coroot_c[k]), sign));
    }
  }
  d.bijection.resize(d.roots.size());
  std::iota(d.bijection.begin(), d.bijection.end(), 0);
  // simple roots are the height-one roots; order them by node
  d.simple.assign(l, -1);
  for (std::size_t k = 0; k < positive.size(); ++k) {
    const IntVector& c = root_c[positive[k]];
    if (height(positive[k]) != 1) continue;
    for (std::size_t i = 0; i < l; ++i)
      if (c[i] == 1) d.simple[i] = static_cast<int>(k);
  }
  d.reduced = true;
  return d;
}

BasedRootDatum direct_sum(const BasedRootDatum& a, const BasedRootDatum& b) {
  BasedRootDatum d;
  d.rank = a.rank + b.rank;
  auto pad = [&](const IntVector& v, bool first) {
    IntVector out(d.rank, Integer(0));
    std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(first ? 0 : a.rank));
    return out;
  };
  for (std::size_t i = 0; i < a.roots.size(); ++i) {
    d.roots.push_back(pad(a.roots[i], true));
    d.coroots.push_back(pad(a.coroots[i], true));
    d.bijection.push_back(a.bijection[i]);
  }
  const int offset = static_cast<int>(a.roots.size());
  for (std::size_t i = 0; i < b.roots.size(); ++i) {
    d.roots.push_back(pad(b.roots[i], false));
    d.coroots.push_back(pad(b.coroots[i], false));
    d.bijection.push_back(b.bijection[i] + offset);
  }
  d.simple = a.simple;
  for (int s : b.simple) d.simple.push_back(s + offset);
  d.reduced = a.reduced && b.reduced;
  return d;
}

BasedRootDatum torus(std::size_t rank) {
  BasedRootDatum d;
  d.rank = rank;
  return d;
}

namespace {

std::string vec(const IntVector& v) { return to_string(v); }

}  // namespace

ValidationReport validate(const BasedRootDatum& d) {
  auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
  const std::size_t n_roots = d.roots.size();
  if (d.coroots.size() != n_roots || d.bijection.size() != n_roots) {
    return fail("roots, coroots and bijection differ in length");
  }
  {
    std::vector<int> sorted = d.bijection;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n_roots; ++i)
      if (sorted[i] != static_cast<int>(i)) return fail("bijection is not a permutation");
  }
  for (std::size_t i = 0; i < n_roots; ++i) {
    if (d.roots[i].size() != d.rank || d.coroots[i].size() != d.rank) {
      return fail("vector length differs from rank at root " + std::to_string(i));
    }
    if (is_zero(d.roots[i])) return fail("zero root at index " + std::to_string(i));
  }
  std::map<IntVector, std::size_t> root_index;
  for (std::size_t i = 0; i < n_roots; ++i) {
    if (!root_index.emplace(d.roots[i], i).second) return fail("duplicate root " + vec(d.roots[i]));
  }
  for (std::size_t i = 0; i < n_roots; ++i) {
    Integer p = dot(d.roots[i], d.coroot_of(i));
    if (p != 2) return fail("⟨α,α̌⟩ = " + p.get_str() + " for root " + std::to_string(i) + " " + vec(d.roots[i]));
  }
  // s_α permutes R compatibly with s_α̌ on Ř
  for (std::size_t i = 0; i < n_roots; ++i) {
    const IntVector& a = d.roots[i];
    const IntVector& ac = d.coroot_of(i);
    for (std::size_t j = 0; j < n_roots; ++j) {
      const IntVector& b = d.roots[j];
      const IntVector& bc = d.coroot_of(j);
      IntVector image = subtract(b, scale(a, dot(b, ac)));
      auto it = root_index.find(image);
      if (it == root_index.end()) {
        return fail("s_α(β) = " + vec(image) + " is not a root (α = " + vec(a) + ", β = " + vec(b) + ")");
      }
      IntVector coimage = subtract(bc, scale(ac, dot(a, bc)));
      if (d.coroot_of(it->second) != coimage) {
        return fail("s_α̌ does not carry the coroot of " + vec(b) + " to the coroot of " + vec(image));
      }
    }
  }
  // Δ is a basis of R with sign-coherent integer coordinates
  const std::size_t l = d.simple.size();
  for (int s : d.simple) {
    if (s < 0 || static_cast<std::size_t>(s) >= n_roots) return fail("simple index out of range");
  }
  if (n_roots > 0 || l > 0) {
    std::vector<RationalVector> cols;
    for (std::size_t k = 0; k < l; ++k) cols.push_back(to_rational(d.simple_root(k)));
    RationalMatrix delta = RationalMatrix::from_columns(cols, d.rank);
    if (rank(delta) != l) return fail("simple roots are linearly dependent");
    for (std::size_t i = 0; i < n_roots; ++i) {
      auto c = solve_unique(delta, to_rational(d.roots[i]));
      if (!c) return fail("root " + vec(d.roots[i]) + " is outside the span of Δ");
      bool nonneg = true, nonpos = true;
      for (const auto& x : *c) {
        if (x.get_den() != 1) return fail("root " + vec(d.roots[i]) + " has non-integral Δ-coordinates");
        if (x < 0) nonneg = false;
        if (x > 0) nonpos = false;
      }
      if (!nonneg && !nonpos) return fail("root " + vec(d.roots[i]) + " has mixed-sign Δ-coordinates");
    }
  }
  if (d.reduced) {
    for (std::size_t i = 0; i < n_roots; ++i) {
      if (root_index.count(scale(d.roots[i], 2))) return fail("reduced flag set but 2α ∈ R for α = " + vec(d.roots[i]));
    }
  }
  return {};
}

IntMatrix cartan_matrix(const BasedRootDatum& d) {
  const std::size_t l = d.simple.size();
  IntMatrix a(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) a(i, j) = dot(d.simple_root(j), d.simple_coroot(i));
  return a;
}

std::vector<std::vector<int>> irreducible_components(const BasedRootDatum& d) {
  const IntMatrix a = cartan_matrix(d);
  const std::size_t l = a.rows();
  std::vector<int> label(l, -1);
  std::vector<std::vector<int>> comps;
  for (std::size_t s = 0; s < l; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> comp{static_cast<int>(s)};
    label[s] = static_cast<int>(comps.size());
    for (std::size_t head = 0; head < comp.size(); ++head) {
      auto u = static_cast<std::size_t>(comp[head]);
      for (std::size_t v = 0; v < l; ++v) {
        if (label[v] < 0 && (a(u, v) != 0 || a(v, u) != 0)) {
          label[v] = label[s];
          comp.push_back(static_cast<int>(v));
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<RationalVector> root_coordinates(const BasedRootDatum& d) {
  std::vector<RationalVector> cols;
  for (std::size_t k = 0; k < d.simple.size(); ++k) cols.push_back(to_rational(d.simple_root(k)));
  RationalMatrix delta = RationalMatrix::from_columns(cols, d.rank);
  std::vector<RationalVector> out;
  for (const auto& r : d.roots) {
    auto c = solve_unique(delta, to_rational(r));
    if (!c) throw Error(ErrorKind::Inconsistent, "root outside the span of Δ");
    out.push_back(*c);
  }
  return out;
}

std::vector<RationalVector> coroot_coordinates(const BasedRootDatum& d) {
  std::vector<RationalVector> cols;
  for (std::size_t k = 0; k < d.simple.size(); ++k) cols.push_back(to_rational(d.simple_coroot(k)));
  RationalMatrix delta = RationalMatrix::from_columns(cols, d.rank);
  std::vector<RationalVector> out;
  for (const auto& c : d.coroots) {
    auto x = solve_unique(delta, to_rational(c));
    if (!x) throw Error(ErrorKind::Inconsistent, "coroot outside the span of Δ̌");
    out.push_back(*x);
  }
  return out;
}

HighestCoroot highest_coroot(const BasedRootDatum& d) {
  if (d.simple.empty() || irreducible_components(d).size() != 1) {
    throw Error(ErrorKind::NotIrreducible, "highest coroot needs an irreducible datum");
  }
  const auto coords = coroot_coordinates(d);
  std::size_t best = 0;
  Rational best_height;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    Rational h = std::accumulate(coords[k].begin(), coords[k].end(), Rational(0));
    if (k == 0 || h > best_height) {
      best = k;
      best_height = h;
    }
  }
  HighestCoroot hc;
  hc.coroot = d.coroots[best];
  for (const auto& x : coords[best]) {
    if (x.get_den() != 1) throw Error(ErrorKind::Inconsistent, "highest coroot has non-integral marks");
    hc.marks.push_back(x.get_num());
  }
  for (std::size_t i = 0; i < d.roots.size(); ++i) {
    if (static_cast<std::size_t>(d.bijection[i]) == best) hc.root_index = i;
  }
  for (std::size_t k = 0; k < d.simple.size(); ++k) {
    if (dot(d.simple_root(k), hc.coroot) < 0) throw Error(ErrorKind::Inconsistent, "highest coroot is not dominant");
  }
  return hc;
}

Integer coxeter_number(const BasedRootDatum& d) {
  auto hc = highest_coroot(d);
  return std::accumulate(hc.marks.begin(), hc.marks.end(), Integer(1));
}

Cokernel fundamental_group(const BasedRootDatum& d) {
  std::vector<IntVector> cols;
  for (std::size_t k = 0; k < d.simple.size(); ++k) cols.push_back(d.simple_root(k));
  return cokernel(IntMatrix::from_columns(cols, d.rank));
}

}  // namespace alcove
