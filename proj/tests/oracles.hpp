#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the library's algorithms. Determinants use Laplace expansion over
// machine integers, and root systems are closed from a bare Cartan matrix.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<long long>>;

inline long long det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Mat minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long long> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const long long sign = (c % 2 == 0) ? 1 : -1;
    total += sign * m[0][c] * det(minor);
  }
  return total;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// d_k = gcd of all k×k minors, k = 1..min(rows, cols). Zero when all vanish.
inline std::vector<long long> determinantal_divisors(const Mat& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::vector<long long> out;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    choose(rows, k, 0, cur, rs);
    choose(cols, k, 0, cur, cs);
    long long g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Mat sub(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[r[i]][c[j]];
        g = std::gcd(g, det(sub));
      }
    }
    out.push_back(g);
  }
  return out;
}

inline Mat random_matrix(std::mt19937_64& rng, std::size_t max_dim, long long bound) {
  const std::size_t rows = 1 + rng() % max_dim, cols = 1 + rng() % max_dim;
  Mat m(rows, std::vector<long long>(cols));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<long long>(rng() % (2 * bound + 1)) - bound;
  return m;
}

/// Positive roots, in simple-root coordinates, closed under simple
/// reflections s_i(β) = β − ⟨β, α̌_i⟩ α_i with ⟨β, α̌_i⟩ = Σ_j a_ij β_j.
inline std::set<std::vector<long long>> positive_roots(const Mat& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto b = queue.back();
    queue.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      long long p = 0;
      for (std::size_t j = 0; j < n; ++j) p += cartan[i][j] * b[j];
      auto c = b;
      c[i] -= p;
      if (std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; }) &&
          std::any_of(c.begin(), c.end(), [](long long x) { return x > 0; }) && roots.insert(c).second) {
        queue.push_back(c);
      }
    }
  }
  return roots;
}

/// Transposing the Cartan matrix swaps roots and coroots.
inline Mat transpose(const Mat& m) {
  Mat t(m.empty() ? 0 : m[0].size(), std::vector<long long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

/// Coordinates of the highest coroot in the simple-coroot basis: the positive
/// coroot of largest height.
inline std::vector<long long> highest_coroot_marks(const Mat& cartan) {
  std::vector<long long> best;
  long long best_height = -1;
  for (const auto& c : positive_roots(transpose(cartan))) {
    const long long h = std::accumulate(c.begin(), c.end(), 0LL);
    if (h > best_height) {
      best_height = h;
      best = c;
    }
  }
  return best;
}

/// |W| as the number of distinct permutations of the full root system
/// generated by the simple reflections, with generators visited in `order`.
inline std::size_t weyl_order_by_permutations(const Mat& cartan, const std::vector<std::size_t>& order) {
  const std::size_t n = cartan.size();
  std::vector<std::vector<long long>> roots;
  for (const auto& r : positive_roots(cartan)) {
    roots.push_back(r);
    auto neg = r;
    for (auto& x : neg) x = -x;
    roots.push_back(neg);
  }
  std::sort(roots.begin(), roots.end());
  auto index = [&](const std::vector<long long>& v) {
    return static_cast<std::size_t>(std::lower_bound(roots.begin(), roots.end(), v) - roots.begin());
  };
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t i : order) {
    std::vector<std::size_t> perm(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      long long p = 0;
      for (std::size_t j = 0; j < n; ++j) p += cartan[i][j] * roots[k][j];
      auto c = roots[k];
      c[i] -= p;
      perm[k] = index(c);
    }
    gens.push_back(perm);
  }
  std::vector<std::size_t> id(roots.size());
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<std::size_t>> seen{id};
  std::vector<std::vector<std::size_t>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        std::vector<std::size_t> q(p.size());
        for (std::size_t k = 0; k < p.size(); ++k) q[k] = g[p[k]];
        if (seen.insert(q).second) next.push_back(q);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

/// Subgroups of ⊕ Z/d_i, each as a sorted list of mixed-radix element indices,
/// found by testing every subset for closure. Only for groups of order ≤ 12.
inline std::set<std::vector<std::size_t>> subgroups_by_subsets(const std::vector<long>& factors) {
  std::size_t order = 1;
  for (long d : factors) order *= static_cast<std::size_t>(d);
  auto digits = [&](std::size_t k) {
    std::vector<long> out(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      out[i] = static_cast<long>(k % static_cast<std::size_t>(factors[i]));
      k /= static_cast<std::size_t>(factors[i]);
    }
    return out;
  };
  auto encode = [&](const std::vector<long>& v) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) k = k * static_cast<std::size_t>(factors[i]) + static_cast<std::size_t>(v[i]);
    return k;
  };
  std::set<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (1ULL << order); ++mask) {
    if (!(mask & 1)) continue;  // must contain 0
    bool closed = true;
    for (std::size_t a = 0; a < order && closed; ++a) {
      if (!(mask >> a & 1)) continue;
      for (std::size_t b = 0; b < order && closed; ++b) {
        if (!(mask >> b & 1)) continue;
        auto x = digits(a), y = digits(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % factors[i];
        if (!(mask >> encode(x) & 1)) closed = false;
      }
    }
    if (!closed) continue;
    std::vector<std::size_t> members;
    for (std::size_t a = 0; a < order; ++a)
      if (mask >> a & 1) members.push_back(a);
    out.insert(members);
  }
  return out;
}

}  // namespace oracle
