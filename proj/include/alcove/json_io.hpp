#pragma once

// JSON forms of the library's values. Integers that may exceed 64 bits
// (matrix entries, rationals) are written as decimal strings; small counts,
// indices and invariant factors are plain numbers.

#include <json.hpp>

#include "alcove/rgroup.hpp"

namespace alcove {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const IntVector& v);
Json to_json(const RationalVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const BasedRootDatum& d);
Json to_json(const AffineMap& m);
Json to_json(const OmegaGroup& omega);
Json to_json(const RestrictionResult& r);
Json to_json(const StabilizerSubgroup& s);
Json to_json(const CoinvariantsBridge& b);
Json to_json(const Classification& c);
Json to_json(const Table1Row& row);
Json factors_json(const std::vector<Integer>& factors);

IntVector int_vector_from_json(const Json& j);
RationalVector rational_vector_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);
/// Throws Inconsistent on schema violations.
BasedRootDatum datum_from_json(const Json& j);
AffineMap affine_map_from_json(const Json& j);

}  // namespace alcove
