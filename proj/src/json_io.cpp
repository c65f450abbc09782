#include "rectpierce/json_io.hpp"

#include <stdexcept>

namespace rectpierce {

nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.fits_int64()) return s.to_int64();
  return s.to_string();
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      auto v = j.get<std::uint64_t>();
      if (v > static_cast<std::uint64_t>(INT64_MAX)) return Scalar::parse(std::to_string(v));
      return Scalar(static_cast<std::int64_t>(v));
    }
    return Scalar(j.get<std::int64_t>());
  }
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

nlohmann::json point_to_json(const Point& p) {
  return nlohmann::json::array({scalar_to_json(p.x), scalar_to_json(p.y)});
}

Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("expected a point [x, y], got " + j.dump());
  }
  return Point{scalar_from_json(j[0]), scalar_from_json(j[1])};
}

}  // namespace rectpierce
