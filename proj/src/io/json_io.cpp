#include "alcove/json_io.hpp"

namespace alcove {

namespace {

Json small_int(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::TooLarge, "integer " + v.get_str() + " does not fit a JSON number");
  return v.get_si();
}

Json small_int_vector(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(small_int(x));
  return a;
}

Json small_int_matrix(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(small_int_vector(m.row(i)));
  return rows;
}

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Inconsistent, "JSON: " + what); }

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) schema_error("bad integer string '" + j.get<std::string>() + "'");
    return v;
  }
  schema_error("expected an integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<long> factors_long(const std::vector<Integer>& f) {
  std::vector<long> out;
  for (const auto& x : f) out.push_back(x.get_si());
  return out;
}

}  // namespace

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json to_json(const RationalVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_json(m.row(i)));
  return rows;
}

Json factors_json(const std::vector<Integer>& factors) { return factors_long(factors); }

Json to_json(const BasedRootDatum& d) {
  Json j;
  j["rank"] = d.rank;
  Json roots = Json::array(), coroots = Json::array();
  for (const auto& r : d.roots) roots.push_back(small_int_vector(r));
  for (const auto& c : d.coroots) coroots.push_back(small_int_vector(c));
  j["roots"] = roots;
  j["coroots"] = coroots;
  j["simple"] = d.simple;
  j["bijection"] = d.bijection;
  j["reduced"] = d.reduced;
  return j;
}

Json to_json(const AffineMap& m) {
  Json j;
  j["matrix"] = small_int_matrix(m.linear.matrix);
  j["translation"] = to_json(m.translation);
  j["word"] = m.linear.word;
  return j;
}

Json to_json(const OmegaGroup& omega) {
  Json j;
  j["order"] = omega.size();
  j["factors"] = factors_json(omega.quotient.invariant_factors());
  Json elements = Json::array();
  for (const auto& e : omega.elements) elements.push_back(to_json(e));
  j["elements"] = elements;
  Json images = Json::array();
  for (const auto& g : omega.iota_images) images.push_back(factors_long(g));
  j["iota_images"] = images;
  j["table"] = omega.table;
  return j;
}

Json to_json(const RestrictionResult& r) {
  Json j;
  j["folded"] = to_json(r.folded);
  j["folded_type"] = type_label(identify_type(r.folded));
  j["projection"] = to_json(r.projection);
  j["inclusion"] = to_json(r.inclusion);
  j["fibers"] = r.fibers;
  Json doubled = Json::array();
  for (bool b : r.doubled) doubled.push_back(b);
  j["doubled"] = doubled;
  j["group_order"] = r.group.size();
  return j;
}

Json to_json(const StabilizerSubgroup& s) {
  Json j;
  j["order"] = s.order();
  j["factors"] = factors_json(s.iso_type);
  j["elements"] = s.elements;
  return j;
}

Json to_json(const CoinvariantsBridge& b) {
  Json j;
  j["a_sigma"] = factors_json(b.a_sigma.invariant_factors());
  j["folded_quotient"] = factors_json(b.folded_quotient.invariant_factors());
  j["surjection"] = b.surjection;
  j["homomorphism"] = b.homomorphism;
  j["surjective"] = b.surjective;
  j["kernel_order"] = b.kernel.size();
  j["kernel_type"] = factors_json(b.kernel_type);
  j["torsion_type"] = factors_json(b.torsion_type);
  j["kernel_matches_torsion"] = b.kernel_matches_torsion;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  Json subs = Json::array();
  for (const auto& s : c.subgroups) {
    Json e;
    e["members"] = s.subgroup.members;
    e["factors"] = factors_json(s.iso_type);
    e["realized"] = s.realized;
    e["attempts"] = s.attempts;
    if (s.realized) e["witness"] = to_json(s.witness);
    subs.push_back(e);
  }
  j["subgroups"] = subs;
  j["all_realized"] = c.all_realized;
  return j;
}

Json to_json(const Table1Row& row) {
  Json j;
  j["type"] = row.type;
  j["expected"] = row.expected;
  j["computed"] = row.computed;
  j["match"] = row.match;
  return j;
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array()) schema_error("expected an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

RationalVector rational_vector_from_json(const Json& j) {
  if (!j.is_array()) schema_error("expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) {
    if (x.is_string()) {
      v.push_back(parse_rational(x.get<std::string>()));
    } else {
      v.push_back(Rational(integer_from_json(x)));
    }
  }
  return v;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array()) schema_error("expected an array of rows");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(int_vector_from_json(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) schema_error("ragged matrix");
  return IntMatrix::from_rows(rows, cols);
}

BasedRootDatum datum_from_json(const Json& j) {
  BasedRootDatum d;
  const Json& rank = field(j, "rank");
  if (!rank.is_number_unsigned()) schema_error("rank must be a nonnegative integer");
  d.rank = rank.get<std::size_t>();
  for (const auto& r : field(j, "roots")) d.roots.push_back(int_vector_from_json(r));
  for (const auto& c : field(j, "coroots")) d.coroots.push_back(int_vector_from_json(c));
  try {
    d.simple = field(j, "simple").get<std::vector<int>>();
    d.bijection = field(j, "bijection").get<std::vector<int>>();
    d.reduced = field(j, "reduced").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    schema_error(e.what());
  }
  for (int s : d.simple)
    if (s < 0 || static_cast<std::size_t>(s) >= d.roots.size()) schema_error("simple index out of range");
  for (int b : d.bijection)
    if (b < 0 || static_cast<std::size_t>(b) >= d.coroots.size()) schema_error("bijection index out of range");
  if (d.bijection.size() != d.roots.size()) schema_error("bijection length differs from the number of roots");
  return d;
}

AffineMap affine_map_from_json(const Json& j) {
  AffineMap m;
  m.linear.matrix = int_matrix_from_json(field(j, "matrix"));
  m.translation = rational_vector_from_json(field(j, "translation"));
  if (j.contains("word")) {
    try {
      m.linear.word = j.at("word").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
      schema_error(e.what());
    }
  }
  if (m.linear.matrix.rows() != m.translation.size() || m.linear.matrix.cols() != m.translation.size()) {
    schema_error("matrix and translation dimensions differ");
  }
  return m;
}

}  // namespace alcove
