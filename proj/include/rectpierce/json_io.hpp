#pragma once

#include <json.hpp>

#include "rectpierce/geometry.hpp"
#include "rectpierce/scalar.hpp"

namespace rectpierce {

/// Integers that fit in 64 bits are written as JSON integers, everything
/// else as a "p/q" (or "p") string.
nlohmann::json scalar_to_json(const Scalar& s);

/// Accepts a JSON integer or a "p/q" string. Throws std::invalid_argument.
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const Point& p);
Point point_from_json(const nlohmann::json& j);

}  // namespace rectpierce
