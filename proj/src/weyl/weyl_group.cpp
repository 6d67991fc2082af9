#include <cstdlib>
#include <deque>
#include <unordered_map>

#include "alcove/weyl.hpp"

namespace alcove {

namespace {

std::size_t cap_from_env(std::size_t fallback) {
  if (const char* v = std::getenv("ALCOVE_WEYL_CAP")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end != v && *end == '\0' && parsed > 0) return static_cast<std::size_t>(parsed);
  }
  return fallback;
}

// s·M = M − α (α̌ᵀ M) for the reflection attached to (α, α̌).
IntMatrix reflect_left(const IntMatrix& m, const IntVector& a, const IntVector& ac) {
  const std::size_t n = m.rows();
  IntMatrix out = m;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer r = 0;
    for (std::size_t k = 0; k < n; ++k) r += ac[k] * m(k, j);
    if (r == 0) continue;
    for (std::size_t i = 0; i < n; ++i) out(i, j) -= a[i] * r;
  }
  return out;
}

}  // namespace

std::size_t default_weyl_cap() { return cap_from_env(kDefaultWeylCap); }
std::size_t default_scan_cap() { return cap_from_env(kDefaultScanCap); }

IntMatrix simple_reflection(const BasedRootDatum& d, std::size_t i, Side side) {
  const auto idx = static_cast<std::size_t>(d.simple.at(i));
  return side == Side::character ? d.reflection(idx) : d.coreflection(idx);
}

IntMatrix word_matrix(const BasedRootDatum& d, const std::vector<int>& word, Side side) {
  IntMatrix m = IntMatrix::identity(d.rank);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto i = static_cast<std::size_t>(*it);
    if (side == Side::character) {
      m = reflect_left(m, d.simple_root(i), d.simple_coroot(i));
    } else {
      m = reflect_left(m, d.simple_coroot(i), d.simple_root(i));
    }
  }
  return m;
}

std::vector<WeylElement> generate_weyl(const BasedRootDatum& d, std::size_t cap, Side side) {
  const std::size_t l = d.simple.size();
  std::vector<IntVector> a(l), ac(l);
  for (std::size_t i = 0; i < l; ++i) {
    a[i] = side == Side::character ? d.simple_root(i) : d.simple_coroot(i);
    ac[i] = side == Side::character ? d.simple_coroot(i) : d.simple_root(i);
  }
  std::vector<WeylElement> out;
  std::unordered_map<IntMatrix, std::size_t, IntMatrixHash> seen;
  out.push_back({IntMatrix::identity(d.rank), {}});
  seen.emplace(out.back().matrix, 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (std::size_t i = 0; i < l; ++i) {
      IntMatrix next = reflect_left(out[head].matrix, a[i], ac[i]);
      if (seen.count(next)) continue;
      if (out.size() >= cap) {
        throw CapExceededError("Weyl group enumeration exceeded cap " + std::to_string(cap), out.size());
      }
      std::vector<int> word;
      word.reserve(out[head].word.size() + 1);
      word.push_back(static_cast<int>(i));
      word.insert(word.end(), out[head].word.begin(), out[head].word.end());
      seen.emplace(next, out.size());
      out.push_back({std::move(next), std::move(word)});
    }
  }
  return out;
}

std::uint64_t weyl_order(const BasedRootDatum& d, std::size_t cap) {
  // Each w ∈ W corresponds to the chamber of w·ρ. Walking the orbit tree
  // (parent of a non-dominant point is obtained through its first positive
  // coordinate) reaches every chamber exactly once.
  const std::size_t l = d.simple.size();
  if (l == 0) return 1;
  const IntMatrix a = cartan_matrix(d);
  std::vector<std::vector<long long>> cartan(l, std::vector<long long>(l));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) cartan[i][j] = a(i, j).get_si();

  std::uint64_t count = 0;
  std::vector<std::vector<long long>> stack_p;
  std::vector<std::size_t> stack_next;
  stack_p.emplace_back(l, 1);
  stack_next.push_back(0);
  count = 1;
  std::vector<long long> child(l);
  while (!stack_p.empty()) {
    auto& p = stack_p.back();
    std::size_t& i = stack_next.back();
    bool descended = false;
    while (i < l) {
      const std::size_t k = i++;
      if (p[k] <= 0) continue;
      // ν = s_k μ; ⟨ν, α̌_j⟩ = p_j − p_k a_jk
      std::size_t first_negative = l;
      for (std::size_t j = 0; j < l; ++j) {
        child[j] = p[j] - p[k] * cartan[j][k];
        if (child[j] < 0 && first_negative == l) first_negative = j;
      }
      if (first_negative != k) continue;
      if (++count > cap) {
        throw CapExceededError("Weyl orbit scan exceeded cap " + std::to_string(cap), static_cast<std::size_t>(count - 1));
      }
      stack_p.push_back(child);
      stack_next.push_back(0);
      descended = true;
      break;
    }
    if (!descended) {
      stack_p.pop_back();
      stack_next.pop_back();
    }
  }
  return count;
}

}  // namespace alcove
