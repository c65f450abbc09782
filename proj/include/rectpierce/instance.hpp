#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectpierce/geometry.hpp"
#include "rectpierce/scalar.hpp"

namespace rectpierce {

/// Raised for malformed instance documents. The message names the offending
/// rectangle id when one is known.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite family of rectangles with canonical ids 0..n-1 and an optional
/// declared aspect-ratio bound.
class Instance {
 public:
  Instance() = default;
  /// Throws GeometryError if ids are not exactly 0..n-1 in order, or if the
  /// family exceeds `r_declared`.
  explicit Instance(std::vector<Rect> rects, std::optional<Scalar> r_declared = std::nullopt);

  std::span<const Rect> rects() const { return rects_; }
  const Rect& operator[](RectId id) const { return rects_.at(id); }
  std::size_t size() const { return rects_.size(); }
  bool empty() const { return rects_.empty(); }
  const std::optional<Scalar>& r_declared() const { return r_declared_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Rect> rects_;
  std::optional<Scalar> r_declared_;
};

/// Maximum aspect ratio over the family. Throws std::invalid_argument when
/// the instance is empty.
Scalar family_ratio(const Instance& inst);

Instance parse_instance(std::string_view json_text);
std::string serialize_instance(const Instance& inst);

/// Parameters for random r-bounded families. All lengths are snapped to a
/// grid of step 1/resolution.
struct GeneratorConfig {
  std::size_t n = 10;
  Scalar r_max = 1;
  Scalar window = 100;
  Scalar side_min = 1;
  Scalar side_max = 10;
  std::int64_t resolution = 1000;
  std::uint64_t seed = 0;
};

/// Deterministic generator. The stream is std::mt19937_64 seeded with
/// `seed`; bounded integers use rejection sampling on raw 64-bit draws
/// (threshold = 2^64 mod range), then `draw % range`. Per rectangle, in this
/// order, with all values in grid units (1/resolution):
///   1. shorter side s uniform in [ceil(side_min*Q), floor(side_max*Q)]
///   2. ratio numerator t uniform in [Q, floor(r_max*Q)] (ratio t/Q)
///   3. longer side L = min(floor(s*t/Q), floor(window*Q))
///   4. orientation: 0 = wide (width L), 1 = tall (height L)
///   5. x_lo uniform in [0, W - width], then y_lo uniform in [0, W - height],
///      where W = floor(window*Q).
/// Throws std::invalid_argument on infeasible configurations.
Instance generate_random(const GeneratorConfig& cfg);

enum class StructuredKind { kDisjointGrid, kCommonPointClique, kChain };

std::optional<StructuredKind> parse_structured_kind(std::string_view name);

/// Fixture families: pairwise-disjoint unit squares; unit squares sharing
/// one point; a chain in which only consecutive rectangles meet.
Instance generate_structured(StructuredKind kind, std::size_t n);

}  // namespace rectpierce
