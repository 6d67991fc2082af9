#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "alcove/lattice.hpp"

namespace alcove {

namespace {

Integer mod_positive(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

std::vector<unsigned long> prime_divisors(unsigned long n) {
  std::vector<unsigned long> ps;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> invariant_factors)
    : FiniteAbelianGroup(invariant_factors, IntMatrix::identity(invariant_factors.size()),
                         IntMatrix::identity(invariant_factors.size())) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<Integer> invariant_factors, IntMatrix projection, IntMatrix section)
    : factors_(std::move(invariant_factors)), projection_(std::move(projection)), section_(std::move(section)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] <= 1) throw Error(ErrorKind::Inconsistent, "invariant factors must exceed 1");
    if (i + 1 < factors_.size() && !mpz_divisible_p(factors_[i + 1].get_mpz_t(), factors_[i].get_mpz_t())) {
      throw Error(ErrorKind::Inconsistent, "invariant factors must form a divisibility chain");
    }
  }
  if (projection_.rows() != factors_.size() || section_.cols() != factors_.size() ||
      section_.rows() != projection_.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "projection/section shape does not match the invariant factors");
  }
}

std::vector<long> FiniteAbelianGroup::factors_as_long() const {
  std::vector<long> out;
  for (const auto& d : factors_) out.push_back(d.get_si());
  return out;
}

Integer FiniteAbelianGroup::order() const {
  Integer n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

GroupElement FiniteAbelianGroup::project(const IntVector& x) const {
  return reduce(projection_.apply(x));
}

IntVector FiniteAbelianGroup::lift(const GroupElement& g) const { return section_.apply(g); }

GroupElement FiniteAbelianGroup::reduce(GroupElement g) const {
  if (g.size() != factors_.size()) throw Error(ErrorKind::DimensionMismatch, "group element length mismatch");
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = mod_positive(g[i], factors_[i]);
  return g;
}

GroupElement FiniteAbelianGroup::zero() const { return GroupElement(factors_.size(), Integer(0)); }

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  GroupElement s(factors_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = mod_positive(a[i] + b[i], factors_[i]);
  return s;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& a) const {
  GroupElement s(factors_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = mod_positive(-a[i], factors_[i]);
  return s;
}

GroupElement FiniteAbelianGroup::multiple(const GroupElement& a, const Integer& k) const {
  GroupElement s(factors_.size());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = mod_positive(a[i] * k, factors_[i]);
  return s;
}

bool FiniteAbelianGroup::is_zero(const GroupElement& a) const {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (mod_positive(a[i], factors_[i]) != 0) return false;
  }
  return true;
}

Integer FiniteAbelianGroup::element_order(const GroupElement& a) const {
  Integer ord = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer g;
    Integer r = mod_positive(a[i], factors_[i]);
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), factors_[i].get_mpz_t());
    Integer local = factors_[i] / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), local.get_mpz_t());
  }
  return ord;
}

std::vector<GroupElement> FiniteAbelianGroup::elements(std::size_t bound) const {
  Integer n = order();
  if (n > bound) throw Error(ErrorKind::TooLarge, "group of order " + n.get_str() + " exceeds bound");
  std::size_t count = n.get_ui();
  std::vector<GroupElement> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(element_at(k));
  return out;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& g) const {
  GroupElement r = reduce(g);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < r.size(); ++i) idx = idx * factors_[i].get_ui() + r[i].get_ui();
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
  GroupElement g(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    unsigned long d = factors_[i].get_ui();
    g[i] = static_cast<unsigned long>(index % d);
    index /= d;
  }
  return g;
}

// A finite abelian p-group with exponents e₁ ≥ e₂ ≥ ... has exactly
// p^{Σ min(j, eᵢ)} elements killed by p^j; successive differences of the
// logarithms recover #{i : eᵢ ≥ j}.
std::vector<Integer> FiniteAbelianGroup::subgroup_type(const std::vector<GroupElement>& members) const {
  const unsigned long n = members.size();
  if (n <= 1) return {};
  std::map<unsigned long, std::vector<unsigned>> exponents;  // prime -> descending exponents
  for (unsigned long p : prime_divisors(n)) {
    std::vector<unsigned> at_least;  // at_least[j-1] = #{i : e_i >= j}
    unsigned long prev_log = 0;
    Integer pj = 1;
    for (unsigned j = 1;; ++j) {
      pj *= p;
      unsigned long killed = 0;
      for (const auto& m : members) {
        if (is_zero(multiple(m, pj))) ++killed;
      }
      unsigned long log = 0;
      for (unsigned long k = killed; k > 1; k /= p) ++log;
      if (log == prev_log) break;
      at_least.push_back(static_cast<unsigned>(log - prev_log));
      prev_log = log;
    }
    std::vector<unsigned> e(at_least.empty() ? 0 : at_least.front(), 0);
    for (std::size_t j = 0; j < at_least.size(); ++j)
      for (unsigned i = 0; i < at_least[j]; ++i) e[i] = static_cast<unsigned>(j + 1);
    exponents[p] = e;
  }
  std::size_t width = 0;
  for (const auto& [p, e] : exponents) width = std::max(width, e.size());
  std::vector<Integer> factors(width, Integer(1));
  // factors[width-1] is the largest invariant factor
  for (const auto& [p, e] : exponents) {
    for (std::size_t t = 0; t < e.size(); ++t) {
      Integer pe;
      mpz_ui_pow_ui(pe.get_mpz_t(), p, e[t]);
      factors[width - 1 - t] *= pe;
    }
  }
  return factors;
}

// ---------------------------------------------------------------------------

Cokernel cokernel(const IntMatrix& a) {
  const std::size_t n = a.rows();
  SmithDecomposition snf = smith_normal_form(a);
  IntMatrix u_inv = inverse_unimodular(snf.U);
  std::vector<std::size_t> torsion_rows, free_rows;
  std::vector<Integer> factors;
  for (std::size_t i = 0; i < n; ++i) {
    Integer d = i < snf.factors.size() ? snf.factors[i] : Integer(0);
    if (d == 0) {
      free_rows.push_back(i);
    } else if (d > 1) {
      torsion_rows.push_back(i);
      factors.push_back(d);
    }
  }
  IntMatrix projection(torsion_rows.size(), n);
  IntMatrix section(n, torsion_rows.size());
  for (std::size_t k = 0; k < torsion_rows.size(); ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      projection(k, j) = snf.U(torsion_rows[k], j);
      section(j, k) = u_inv(j, torsion_rows[k]);
    }
  }
  IntMatrix free_projection(free_rows.size(), n);
  for (std::size_t k = 0; k < free_rows.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) free_projection(k, j) = snf.U(free_rows[k], j);
  return Cokernel{FiniteAbelianGroup(std::move(factors), std::move(projection), std::move(section)),
                  free_rows.size(), std::move(free_projection)};
}

Cokernel coinvariants(const IntMatrix& g) {
  if (g.rows() != g.cols()) throw Error(ErrorKind::DimensionMismatch, "automorphism must be square");
  Integer det = determinant(g);
  if (abs(det) != 1) throw Error(ErrorKind::NonUnimodular, "automorphism has determinant " + det.get_str());
  return cokernel(g - IntMatrix::identity(g.rows()));
}

FiniteAbelianGroup torsion_part(const Cokernel& c) { return c.torsion; }

std::vector<Subgroup> enumerate_subgroups(const FiniteAbelianGroup& g, std::size_t bound) {
  Integer order = g.order();
  if (order > bound) {
    throw Error(ErrorKind::TooLarge, "subgroup enumeration of a group of order " + order.get_str());
  }
  const auto elems = g.elements(bound);
  const std::size_t n = elems.size();
  std::vector<std::vector<std::size_t>> sum(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sum[i][j] = g.index_of(g.add(elems[i], elems[j]));

  auto join = [&](const std::vector<bool>& s, std::size_t x) {
    std::vector<bool> out = s;
    std::vector<std::size_t> frontier;
    for (std::size_t i = 0; i < n; ++i)
      if (s[i]) frontier.push_back(i);
    // S is a subgroup, so <S, x> is the union of the cosets S + kx.
    std::size_t mult = x;
    do {
      for (std::size_t i : frontier) out[sum[i][mult]] = true;
      mult = sum[mult][x];
    } while (!s[mult]);
    return out;
  };

  std::set<std::vector<bool>> seen;
  std::vector<Subgroup> result;
  std::vector<std::vector<bool>> queue;
  std::vector<bool> trivial(n, false);
  trivial[0] = true;
  seen.insert(trivial);
  result.push_back(Subgroup{{}, {0}});
  queue.push_back(trivial);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto current = queue[head];
    const auto generators = result[head].generators;
    for (std::size_t x = 0; x < n; ++x) {
      if (current[x]) continue;
      auto next = join(current, x);
      if (!seen.insert(next).second) continue;
      Subgroup sg;
      sg.generators = generators;
      sg.generators.push_back(elems[x]);
      for (std::size_t i = 0; i < n; ++i)
        if (next[i]) sg.members.push_back(i);
      result.push_back(std::move(sg));
      queue.push_back(std::move(next));
    }
  }
  std::vector<std::size_t> order_idx(result.size());
  std::iota(order_idx.begin(), order_idx.end(), 0);
  std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    if (result[a].members.size() != result[b].members.size())
      return result[a].members.size() < result[b].members.size();
    return result[a].members < result[b].members;
  });
  std::vector<Subgroup> sorted;
  for (auto i : order_idx) sorted.push_back(std::move(result[i]));
  return sorted;
}

}  // namespace alcove
