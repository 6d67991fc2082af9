#include <sstream>

#include "alcove/rgroup.hpp"

namespace alcove {

Setting::Setting(const CartanType& t, Isogeny iso)
    : type(t),
      isogeny(iso),
      twisted(build_twisted(t, iso)),
      restriction(restrict_datum(twisted)),
      alcove(folded_alcove(restriction)),
      omega(omega_by_cosets(alcove)) {}

IntMatrix Setting::sigma() const {
  return twisted.twist.empty() ? IntMatrix::identity(twisted.datum.rank) : twisted.twist.front().matrix;
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    out.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
  }
  return out;
}

}  // namespace

ParameterPoint parse_point(const AlcoveGeometry& alcove, const std::string& text) {
  if (text == "c0") return {alcove.barycenter(), "c0"};
  if (text.rfind("face:", 0) == 0) {
    std::vector<int> walls;
    for (const auto& part : split(text.substr(5), ',')) {
      if (part.empty()) continue;
      try {
        std::size_t used = 0;
        walls.push_back(std::stoi(part, &used));
        if (used != part.size()) throw std::invalid_argument(part);
      } catch (const std::logic_error&) {
        throw Error(ErrorKind::Inconsistent, "bad wall index '" + part + "'");
      }
    }
    return {alcove.face_barycenter(walls), text};
  }
  RationalVector x;
  for (const auto& part : split(text, ',')) x.push_back(parse_rational(part));
  if (x.size() != alcove.dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) + " coordinates, expected " +
                                                  std::to_string(alcove.dimension()));
  }
  return {x, text};
}

RationalVector random_alcove_point(const AlcoveGeometry& alcove, std::mt19937_64& rng) {
  const auto& vs = alcove.vertices();
  std::vector<unsigned long> weights(vs.size());
  unsigned long total = 0;
  for (auto& w : weights) {
    w = rng() % 3 == 0 ? 0 : 1 + rng() % 29;
    total += w;
  }
  if (total == 0) {
    weights[rng() % weights.size()] = 1;
    total = 1;
  }
  RationalVector x(alcove.dimension(), Rational(0));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    if (weights[j] == 0) continue;
    Rational lambda(weights[j], total);
    lambda.canonicalize();
    x = add(x, scale(vs[j], lambda));
  }
  return x;
}

}  // namespace alcove
