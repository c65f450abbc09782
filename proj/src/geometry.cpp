#include "rectpierce/geometry.hpp"

#include <utility>

namespace rectpierce {

Rect::Rect(RectId id, Scalar x_lo, Scalar x_hi, Scalar y_lo, Scalar y_hi)
    : id_(id),
      x_lo_(std::move(x_lo)),
      x_hi_(std::move(x_hi)),
      y_lo_(std::move(y_lo)),
      y_hi_(std::move(y_hi)) {
  if (!(x_lo_ < x_hi_)) {
    throw GeometryError("rect " + std::to_string(id_) + ": non-positive width");
  }
  if (!(y_lo_ < y_hi_)) {
    throw GeometryError("rect " + std::to_string(id_) + ": non-positive height");
  }
}

std::array<Point, 4> Rect::corners() const {
  return {Point{x_lo_, y_lo_}, Point{x_hi_, y_lo_}, Point{x_lo_, y_hi_}, Point{x_hi_, y_hi_}};
}

Rect Rect::with_id(RectId id) const {
  Rect copy = *this;
  copy.id_ = id;
  return copy;
}

bool intersects(const Rect& a, const Rect& b) {
  return a.x_lo() <= b.x_hi() && b.x_lo() <= a.x_hi() && a.y_lo() <= b.y_hi() &&
         b.y_lo() <= a.y_hi();
}

std::optional<Box> intersection(const Rect& a, const Rect& b) {
  Box box{max(a.x_lo(), b.x_lo()), min(a.x_hi(), b.x_hi()), max(a.y_lo(), b.y_lo()),
          min(a.y_hi(), b.y_hi())};
  if (box.x_hi < box.x_lo || box.y_hi < box.y_lo) return std::nullopt;
  return box;
}

bool contains_point(const Rect& r, const Point& p) {
  return r.x_lo() <= p.x && p.x <= r.x_hi() && r.y_lo() <= p.y && p.y <= r.y_hi();
}

Scalar shorter_side(const Rect& r) { return min(r.width(), r.height()); }

Scalar longer_side(const Rect& r) { return max(r.width(), r.height()); }

Scalar aspect_ratio(const Rect& r) { return longer_side(r) / shorter_side(r); }

Point snap_point(const Point& p, std::span<const Rect> family) {
  std::optional<Point> snapped;
  for (const Rect& r : family) {
    if (!contains_point(r, p)) continue;
    if (!snapped) {
      snapped = Point{r.x_lo(), r.y_lo()};
    } else {
      snapped->x = max(snapped->x, r.x_lo());
      snapped->y = max(snapped->y, r.y_lo());
    }
  }
  if (!snapped) throw GeometryError("snap_point: " + to_string(p) + " lies in no rectangle");
  return *snapped;
}

std::string to_string(const Point& p) {
  return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

std::string to_string(const Rect& r) {
  return "#" + std::to_string(r.id()) + " [" + r.x_lo().to_string() + ", " +
         r.x_hi().to_string() + "]x[" + r.y_lo().to_string() + ", " + r.y_hi().to_string() +
         "]";
}

}  // namespace rectpierce
