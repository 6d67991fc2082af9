#pragma once

// Invariant sweeps shared by the command-line `verify` command and the
// acceptance runner. Every sweep is deterministic for a given seed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alcove/json_io.hpp"

namespace alcove {

struct SuiteReport {
  std::string suite;
  bool pass = true;
  Json cases = Json::array();
  /// First failing case, serialized.
  std::optional<Json> counterexample;

  void record(Json c, bool ok);
  Json to_json() const;
};

std::vector<std::string> iota_default_types();
std::vector<std::string> yu_default_types();

/// Points of C̄ shared by the compatibility and order-law sweeps.
std::vector<RationalVector> sample_points(const AlcoveGeometry& alcove, std::size_t samples, std::uint64_t seed);

/// Both Ω constructions on the untwisted sc datum, ι checks, element-wise agreement.
SuiteReport run_iota_suite(const std::vector<std::string>& types, std::size_t scan_cap = default_scan_cap());
/// Folding validity and W(Ψ)^θ ≅ W(Ψ̲) for twisted types.
SuiteReport run_yu_suite(const std::vector<std::string>& types, std::size_t cap = default_weyl_cap());
/// ω̃_a · x = [x + x_a] for every a and sampled x.
SuiteReport run_compat_suite(const std::vector<std::string>& types, std::size_t samples, std::uint64_t seed);
/// |A̲_φ| = |ker| · |Ω̲_φ| on the same points, plus the kernel vs (X_σ)^tor comparison.
SuiteReport run_order_suite(const std::vector<std::string>& types, std::size_t samples, std::uint64_t seed);
/// Every subgroup of Ω̲ occurs as a stabilizer.
SuiteReport run_classify_suite(const std::vector<std::string>& types, std::uint64_t seed);

}  // namespace alcove
