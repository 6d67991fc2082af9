#include <algorithm>
#include <limits>
#include <numeric>

#include "alcove/weyl.hpp"

namespace alcove {

namespace {

long long checked(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::TooLarge, "coordinate does not fit in 64 bits");
  return v.get_si();
}

long long mul_sub(long long a, long long b, long long c) {
  long long prod = 0;
  long long out = 0;
  if (__builtin_mul_overflow(b, c, &prod) || __builtin_sub_overflow(a, prod, &out)) {
    throw Error(ErrorKind::TooLarge, "orbit coordinates overflow 64 bits");
  }
  return out;
}

IntVector integral_or_throw(const RationalVector& v, const char* what) {
  auto x = to_integral(v);
  if (!x) throw Error(ErrorKind::Inconsistent, std::string(what) + " is not in X");
  return *x;
}

OmegaGroup assemble(const AlcoveGeometry& g, std::vector<AffineMap> elements) {
  OmegaGroup out;
  out.quotient = g.quotient();
  const std::size_t n = out.quotient.order().get_ui();
  if (elements.size() != n) {
    throw Error(ErrorKind::Inconsistent, "found " + std::to_string(elements.size()) + " alcove stabilizers but |X/Q| = " +
                                             std::to_string(n));
  }
  std::vector<bool> filled(n, false);
  out.elements.resize(n);
  out.iota_images.resize(n);
  for (auto& e : elements) {
    GroupElement c = iota_by_barycenter(g, e);
    std::size_t k = out.quotient.index_of(c);
    if (filled[k]) throw Error(ErrorKind::Inconsistent, "two alcove stabilizers share an image in X/Q");
    filled[k] = true;
    out.elements[k] = std::move(e);
    out.iota_images[k] = std::move(c);
  }
  out.table.assign(n, std::vector<std::size_t>(n, n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.table[a][b] = out.index_of(compose(out.elements[a], out.elements[b]));
  return out;
}

}  // namespace

std::size_t OmegaGroup::identity_index() const { return quotient.index_of(quotient.zero()); }

std::size_t OmegaGroup::index_of(const AffineMap& m) const {
  auto t = to_integral(m.translation);
  if (!t) return size();
  const std::size_t k = quotient.index_of(quotient.project(*t));
  if (k >= size() || !(elements[k] == m)) return size();
  return k;
}

std::size_t OmegaGroup::inverse_index(std::size_t k) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (table[k][j] == identity_index()) return j;
  throw Error(ErrorKind::Inconsistent, "element has no inverse in Ω");
}

GroupElement iota_by_barycenter(const AlcoveGeometry& g, const AffineMap& m) {
  const RationalVector& c0 = g.barycenter();
  const IntMatrix winv = inverse_unimodular(m.linear.matrix);
  return g.quotient().project(integral_or_throw(subtract(winv.apply(c0), c0), "(w⁻¹ − 1)c₀"));
}

GroupElement iota_by_projection(const AlcoveGeometry& g, const AffineMap& m) {
  return g.quotient().project(integral_or_throw(m.translation, "translation part"));
}

OmegaGroup omega_by_barycenter(const AlcoveGeometry& g, std::size_t scan_cap) {
  const BasedRootDatum& d = g.datum();
  const std::size_t n = d.rank;
  const std::size_t l = d.simple.size();

  // u = D·h·c₀ is integral, regular and dominant with ⟨u, α̌ᵢ⟩ = D.
  Integer denom = 1;
  for (const auto& q : g.barycenter()) denom = lcm(denom, Integer(q.get_den()));
  const Integer modulus_big = denom * g.coxeter_number();
  const long long modulus = checked(modulus_big);
  std::vector<long long> u0(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational v = g.barycenter()[i] * Rational(modulus_big);
    u0[i] = checked(v.get_num());
  }
  const IntMatrix cm = cartan_matrix(d);
  std::vector<std::vector<long long>> cartan(l, std::vector<long long>(l));
  std::vector<std::vector<long long>> alpha(l, std::vector<long long>(n));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) cartan[i][j] = checked(cm(i, j));
    const IntVector a = d.simple_root(i);
    for (std::size_t j = 0; j < n; ++j) alpha[i][j] = checked(a[j]);
  }

  // Depth-first walk over the orbit W·u. A point's parent is reached by the
  // reflection in its first negative coordinate, so each chamber is visited
  // once; `path` holds the reflections applied so far.
  std::size_t depth_max = d.roots.size() / 2 + 1;
  std::vector<std::vector<long long>> pts(depth_max + 1, std::vector<long long>(n));
  std::vector<std::vector<long long>> prs(depth_max + 1, std::vector<long long>(l));
  std::vector<std::size_t> next(depth_max + 1, 0);
  std::vector<int> path;
  std::vector<std::vector<int>> hits;

  pts[0] = u0;
  prs[0].assign(l, checked(denom));
  std::size_t depth = 0;
  std::uint64_t visited = 1;
  hits.push_back({});
  while (true) {
    bool descended = false;
    while (next[depth] < l) {
      const std::size_t k = next[depth]++;
      const long long pk = prs[depth][k];
      if (pk <= 0) continue;
      auto& cp = prs[depth + 1];
      std::size_t first_negative = l;
      for (std::size_t j = 0; j < l; ++j) {
        cp[j] = mul_sub(prs[depth][j], pk, cartan[j][k]);
        if (cp[j] < 0 && first_negative == l) first_negative = j;
      }
      if (first_negative != k) continue;
      if (++visited > scan_cap) {
        throw CapExceededError("Weyl group scan exceeded cap " + std::to_string(scan_cap), static_cast<std::size_t>(visited - 1));
      }
      auto& cx = pts[depth + 1];
      bool hit = true;
      for (std::size_t j = 0; j < n; ++j) {
        cx[j] = mul_sub(pts[depth][j], pk, alpha[k][j]);
        hit = hit && (u0[j] - cx[j]) % modulus == 0;
      }
      path.push_back(static_cast<int>(k));
      ++depth;
      next[depth] = 0;
      if (depth >= depth_max) throw Error(ErrorKind::Inconsistent, "orbit walk deeper than the number of positive roots");
      if (hit) hits.push_back(path);
      descended = true;
      break;
    }
    if (descended) continue;
    if (depth == 0) break;
    --depth;
    path.pop_back();
  }

  // The orbit point reached along `path` is v·u with v = s_{path.back()}⋯s_{path[0]};
  // its stabilizer element has linear part w = v⁻¹, whose word is `path`.
  std::vector<AffineMap> elements;
  for (const auto& p : hits) {
    AffineMap m;
    m.linear.matrix = word_matrix(d, p);
    m.linear.word = p;
    m.translation = subtract(g.barycenter(), m.linear.matrix.apply(g.barycenter()));
    integral_or_throw(m.translation, "(1 − w)c₀");
    elements.push_back(std::move(m));
  }
  return assemble(g, std::move(elements));
}

OmegaGroup omega_by_cosets(const AlcoveGeometry& g) {
  const FiniteAbelianGroup& q = g.quotient();
  const std::size_t n = q.order().get_ui();
  std::vector<AffineMap> elements;
  for (std::size_t k = 0; k < n; ++k) {
    const IntVector x = q.lift(q.element_at(k));
    Reduction r = g.reduce(add(g.barycenter(), to_rational(x)));
    if (r.point != g.barycenter()) {
      throw Error(ErrorKind::Inconsistent, "c₀ + x did not reduce to c₀ for x = " + to_string(x));
    }
    elements.push_back(compose(r.witness, translation_map(to_rational(x))));
  }
  return assemble(g, std::move(elements));
}

bool permutes_vertices(const AlcoveGeometry& g, const AffineMap& m) {
  std::vector<RationalVector> images;
  for (const auto& v : g.vertices()) images.push_back(act(m, v));
  std::vector<RationalVector> a = g.vertices();
  std::sort(a.begin(), a.end());
  std::sort(images.begin(), images.end());
  return a == images;
}

IotaReport check_iota(const AlcoveGeometry& g, const OmegaGroup& omega) {
  IotaReport r;
  auto fail = [&](bool& flag, const std::string& why) {
    if (flag) r.detail += (r.detail.empty() ? "" : "; ") + why;
    flag = false;
    r.ok = false;
  };
  const std::size_t n = omega.size();
  if (n != g.quotient().order().get_ui()) fail(r.bijective, "|Ω| differs from |X/Q|");
  std::vector<bool> hit(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const AffineMap& m = omega.elements[k];
    if (act(m, g.barycenter()) != g.barycenter() || !permutes_vertices(g, m)) {
      fail(r.stabilizes_alcove, "element " + std::to_string(k) + " does not stabilize the alcove");
    }
    const GroupElement a = iota_by_barycenter(g, m);
    const GroupElement b = iota_by_projection(g, m);
    if (a != b) fail(r.formulas_agree, "formulas disagree on element " + std::to_string(k));
    const std::size_t idx = g.quotient().index_of(a);
    if (idx >= n || hit[idx]) {
      fail(r.bijective, "ι is not injective");
    } else {
      hit[idx] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const AffineMap prod = compose(omega.elements[a], omega.elements[b]);
      const GroupElement lhs = iota_by_barycenter(g, prod);
      const GroupElement rhs = g.quotient().add(omega.iota_images[a], omega.iota_images[b]);
      if (lhs != rhs) fail(r.homomorphism, "ι(ab) ≠ ι(a) + ι(b)");
      if (omega.table[a][b] >= n) fail(r.homomorphism, "Ω is not closed under composition");
    }
  }
  return r;
}

bool same_elements(const OmegaGroup& a, const OmegaGroup& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!(a.elements[k] == b.elements[k])) return false;
  return true;
}

}  // namespace alcove
