#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "rectpierce/scalar.hpp"

namespace rectpierce {

using RectId = std::size_t;

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed axis-parallel rectangle [x_lo, x_hi] x [y_lo, y_hi] with strictly
/// positive width and height.
class Rect {
 public:
  /// Throws GeometryError unless x_lo < x_hi and y_lo < y_hi.
  Rect(RectId id, Scalar x_lo, Scalar x_hi, Scalar y_lo, Scalar y_hi);

  RectId id() const { return id_; }
  const Scalar& x_lo() const { return x_lo_; }
  const Scalar& x_hi() const { return x_hi_; }
  const Scalar& y_lo() const { return y_lo_; }
  const Scalar& y_hi() const { return y_hi_; }

  Scalar width() const { return x_hi_ - x_lo_; }
  Scalar height() const { return y_hi_ - y_lo_; }

  /// Corners in the order (lo,lo), (hi,lo), (lo,hi), (hi,hi).
  std::array<Point, 4> corners() const;

  Rect with_id(RectId id) const;

  friend bool operator==(const Rect&, const Rect&) = default;

 private:
  RectId id_;
  Scalar x_lo_, x_hi_, y_lo_, y_hi_;
};

/// Closed box that may be degenerate (a segment or a single point). Used for
/// intersections, which a Rect cannot represent.
struct Box {
  Scalar x_lo, x_hi, y_lo, y_hi;

  bool contains(const Point& p) const {
    return x_lo <= p.x && p.x <= x_hi && y_lo <= p.y && p.y <= y_hi;
  }
  friend bool operator==(const Box&, const Box&) = default;
};

bool intersects(const Rect& a, const Rect& b);
std::optional<Box> intersection(const Rect& a, const Rect& b);
bool contains_point(const Rect& r, const Point& p);

Scalar shorter_side(const Rect& r);
Scalar longer_side(const Rect& r);
Scalar aspect_ratio(const Rect& r);

/// Lower-left corner of the common intersection of all rectangles in
/// `family` that contain `p`. Throws GeometryError when none contains it.
Point snap_point(const Point& p, std::span<const Rect> family);

std::string to_string(const Point& p);
std::string to_string(const Rect& r);

}  // namespace rectpierce
