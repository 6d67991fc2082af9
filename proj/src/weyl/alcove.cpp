#include <algorithm>

#include "alcove/weyl.hpp"

namespace alcove {

namespace {

void require_irreducible_semisimple(const BasedRootDatum& d) {
  if (!d.is_semisimple() || d.simple.empty()) {
    throw Error(ErrorKind::NotSemisimple, "the alcove is defined for semisimple data of positive rank");
  }
  if (irreducible_components(d).size() != 1) {
    throw Error(ErrorKind::NotIrreducible, "the alcove is defined for irreducible data");
  }
}

// The v with ⟨v, α̌ᵢ⟩ = rhs[i] for every simple coroot.
RationalVector solve_on_coroots(const BasedRootDatum& d, const RationalVector& rhs) {
  RationalMatrix m(d.simple.size(), d.rank);
  for (std::size_t i = 0; i < d.simple.size(); ++i) {
    const IntVector c = d.simple_coroot(i);
    for (std::size_t j = 0; j < d.rank; ++j) m(i, j) = c[j];
  }
  auto v = solve_unique(m, rhs);
  if (!v) throw Error(ErrorKind::Inconsistent, "simple coroots do not determine a point");
  return *v;
}

// A word in the simple reflections equal to s_α for the given positive root.
// Walks α down to a multiple of a simple root αⱼ by reflections that lower
// its height; then s_α = s_{i₁}⋯s_{i_k} s_j s_{i_k}⋯s_{i₁}.
std::vector<int> reflection_word(const BasedRootDatum& d, std::size_t root_index) {
  const std::size_t l = d.simple.size();
  IntVector beta = d.roots[root_index];
  std::vector<int> path;
  auto proportional_simple = [&](const IntVector& v) -> int {
    for (std::size_t j = 0; j < l; ++j) {
      const IntVector a = d.simple_root(j);
      if (v == a || v == scale(a, 2)) return static_cast<int>(j);
    }
    return -1;
  };
  for (std::size_t guard = 0; guard < d.roots.size(); ++guard) {
    int j = proportional_simple(beta);
    if (j >= 0) {
      std::vector<int> word(path.begin(), path.end());
      word.push_back(j);
      word.insert(word.end(), path.rbegin(), path.rend());
      return word;
    }
    bool moved = false;
    for (std::size_t i = 0; i < l && !moved; ++i) {
      const Integer p = dot(beta, d.simple_coroot(i));
      if (p > 0) {
        beta = subtract(beta, scale(d.simple_root(i), p));
        path.push_back(static_cast<int>(i));
        moved = true;
      }
    }
    if (!moved) break;
  }
  throw Error(ErrorKind::Inconsistent, "could not express a root reflection as a simple word");
}

}  // namespace

RationalVector weighted_barycenter(const BasedRootDatum& d) {
  require_irreducible_semisimple(d);
  const Integer h = coxeter_number(d);
  return solve_on_coroots(d, RationalVector(d.simple.size(), Rational(1) / Rational(h)));
}

AlcoveGeometry::AlcoveGeometry(BasedRootDatum datum) : datum_(std::move(datum)) {
  require_irreducible_semisimple(datum_);
  highest_ = highest_coroot(datum_);
  coxeter_ = 1;
  for (const auto& m : highest_.marks) coxeter_ += m;
  const std::size_t l = datum_.simple.size();
  barycenter_ = solve_on_coroots(datum_, RationalVector(l, Rational(1) / Rational(coxeter_)));

  vertices_.push_back(RationalVector(datum_.rank, Rational(0)));
  for (std::size_t i = 0; i < l; ++i) {
    RationalVector rhs(l, Rational(0));
    rhs[i] = Rational(1) / Rational(highest_.marks[i]);
    vertices_.push_back(solve_on_coroots(datum_, rhs));
  }

  Cokernel pi = fundamental_group(datum_);
  quotient_ = pi.torsion;

  wall_coroots_.push_back(highest_.coroot);
  wall_roots_.push_back(datum_.roots[highest_.root_index]);
  for (std::size_t i = 0; i < l; ++i) {
    wall_coroots_.push_back(datum_.simple_coroot(i));
    wall_roots_.push_back(datum_.simple_root(i));
  }
  beta_word_ = reflection_word(datum_, highest_.root_index);
  wall_pairings_.assign(l + 1, std::vector<Integer>(l + 1));
  for (std::size_t a = 0; a <= l; ++a)
    for (std::size_t b = 0; b <= l; ++b) wall_pairings_[a][b] = dot(wall_roots_[a], wall_coroots_[b]);
}

std::vector<Rational> AlcoveGeometry::wall_values(const RationalVector& x) const {
  if (x.size() != datum_.rank) throw Error(ErrorKind::DimensionMismatch, "point has the wrong dimension");
  std::vector<Rational> f(walls());
  f[0] = Rational(1) - dot(x, wall_coroots_[0]);
  for (std::size_t i = 1; i < walls(); ++i) f[i] = dot(x, wall_coroots_[i]);
  return f;
}

bool AlcoveGeometry::contains(const RationalVector& x) const {
  for (const auto& v : wall_values(x))
    if (v < 0) return false;
  return true;
}

bool AlcoveGeometry::in_interior(const RationalVector& x) const {
  for (const auto& v : wall_values(x))
    if (v <= 0) return false;
  return true;
}

RationalVector AlcoveGeometry::face_barycenter(const std::vector<int>& active) const {
  std::vector<bool> on(walls(), false);
  for (int w : active) {
    if (w < 0 || static_cast<std::size_t>(w) >= walls()) throw Error(ErrorKind::DimensionMismatch, "wall index out of range");
    on[static_cast<std::size_t>(w)] = true;
  }
  // The vertex off wall j lies on every other wall, so the face cut out by
  // `active` is the hull of the vertices vⱼ with j ∉ active.
  RationalVector sum(datum_.rank, Rational(0));
  std::size_t count = 0;
  for (std::size_t j = 0; j < walls(); ++j) {
    if (on[j]) continue;
    sum = add(sum, vertices_[j]);
    ++count;
  }
  if (count == 0) throw Error(ErrorKind::PointOutsideAlcove, "every wall active: the face is empty");
  return scale(sum, Rational(1, static_cast<unsigned long>(count)));
}

AffineMap AlcoveGeometry::wall_reflection(int wall) const {
  const auto k = static_cast<std::size_t>(wall);
  if (wall < 0 || k >= walls()) throw Error(ErrorKind::DimensionMismatch, "wall index out of range");
  AffineMap m = identity_map(datum_.rank);
  const IntVector& a = wall_roots_[k];
  const IntVector& ac = wall_coroots_[k];
  for (std::size_t i = 0; i < datum_.rank; ++i)
    for (std::size_t j = 0; j < datum_.rank; ++j) m.linear.matrix(i, j) -= a[i] * ac[j];
  if (k == 0) {
    // x ↦ x − (⟨x, β̌⟩ − 1)β
    m.translation = to_rational(a);
    m.linear.word = beta_word_;
  } else {
    m.linear.word = {wall - 1};
  }
  return m;
}

Reduction AlcoveGeometry::reduce(const RationalVector& x, bool with_witness, std::size_t max_steps) const {
  Reduction r;
  r.point = x;
  std::vector<Rational> f = wall_values(x);
  const std::size_t nw = walls();
  for (std::size_t step = 0;; ++step) {
    std::size_t worst = nw;
    for (std::size_t k = 0; k < nw; ++k) {
      if (f[k] < 0 && (worst == nw || f[k] < f[worst])) worst = k;
    }
    if (worst == nw) break;
    if (step >= max_steps) {
      throw Error(ErrorKind::NonTermination, "alcove reduction did not terminate within " + std::to_string(max_steps) + " steps");
    }
    // x' = x − c·a with a the wall's root: c = f_k for a simple wall and
    // c = −f_0 for the affine wall.
    const Rational c = worst == 0 ? Rational(-f[0]) : f[worst];
    const IntVector& a = wall_roots_[worst];
    for (std::size_t i = 0; i < r.point.size(); ++i) r.point[i] -= c * a[i];
    f[0] += c * wall_pairings_[worst][0];
    for (std::size_t k = 1; k < nw; ++k) f[k] -= c * wall_pairings_[worst][k];
    r.walls.push_back(static_cast<int>(worst));
  }
  r.witness = identity_map(datum_.rank);
  if (with_witness) {
    for (int w : r.walls) r.witness = compose(wall_reflection(w), r.witness);
  }
  return r;
}

Reduction reduce_to_alcove(const AlcoveGeometry& geometry, const RationalVector& x) { return geometry.reduce(x); }

// ---------------------------------------------------------------------------

AffineMap identity_map(std::size_t n) { return AffineMap{{IntMatrix::identity(n), {}}, RationalVector(n, Rational(0))}; }

AffineMap translation_map(const RationalVector& t) {
  AffineMap m = identity_map(t.size());
  m.translation = t;
  return m;
}

AffineMap compose(const AffineMap& a, const AffineMap& b) {
  AffineMap out;
  out.linear.matrix = a.linear.matrix * b.linear.matrix;
  out.linear.word = a.linear.word;
  out.linear.word.insert(out.linear.word.end(), b.linear.word.begin(), b.linear.word.end());
  out.translation = add(a.translation, a.linear.matrix.apply(b.translation));
  return out;
}

AffineMap inverse(const AffineMap& a) {
  AffineMap out;
  out.linear.matrix = inverse_unimodular(a.linear.matrix);
  out.linear.word.assign(a.linear.word.rbegin(), a.linear.word.rend());
  out.translation = scale(out.linear.matrix.apply(a.translation), Rational(-1));
  return out;
}

RationalVector act(const AffineMap& m, const RationalVector& x) { return add(m.linear.matrix.apply(x), m.translation); }

}  // namespace alcove
