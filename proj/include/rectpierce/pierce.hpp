#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rectpierce/geometry.hpp"
#include "rectpierce/instance.hpp"

namespace rectpierce {

enum class StepKind { kEps, kHelly };

struct TraceStep {
  std::size_t step = 0;
  StepKind kind = StepKind::kEps;
  std::optional<RectId> rect;  // the pivot rectangle; empty for a Helly step
  std::size_t added = 0;       // points appended to the transversal
  std::vector<RectId> removed;  // ascending

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Output of the piercing construction.
///
/// `transversal` pierces every rectangle. `certificate` lists the pivot of
/// each eps step followed, when the run ends in a Helly step, by one
/// representative of the final clique. When the run instead ends with an
/// eps step that empties the family, that last pivot is replaced by the
/// smallest-id disjoint pair of the family it was chosen from (one exists,
/// since that family had no common point). Either way the members are
/// pairwise disjoint, so |certificate| <= nu, and
/// |transversal| <= 2(ceil r + 1)(|certificate| - 1) + 1.
/// `trace[i].added` consecutive points of the
/// transversal belong to step i. `k_per_side` is the largest number of
/// segments used on a long edge by any eps step (1 if there were none).
struct PiercingResult {
  std::vector<Point> transversal;
  std::vector<RectId> certificate;
  std::vector<TraceStep> trace;
  std::size_t k_per_side = 1;

  bool ends_with_helly() const {
    return !trace.empty() && trace.back().kind == StepKind::kHelly;
  }

  friend bool operator==(const PiercingResult&, const PiercingResult&) = default;
};

/// Rectangle with the smallest shorter side; ties go to the smallest id.
/// Throws std::invalid_argument on empty input.
const Rect& select_min_rect(std::span<const Rect> remaining);

/// Number of equal segments each long edge of `pivot` is cut into:
/// max(1, ceil(longer / shorter)).
std::size_t segments_per_side(const Rect& pivot);

/// The 2(k+1) points cutting both long edges of `pivot` into k segments of
/// length longer/k <= shorter. Bottom edge (or left edge for a tall
/// rectangle) first, each edge in increasing coordinate order.
std::vector<Point> build_p_grid(const Rect& pivot);

/// Lower-left point of the common intersection, or nullopt if it is empty.
/// Throws std::invalid_argument on empty input.
std::optional<Point> helly_point(std::span<const Rect> family);

/// Raised if a per-step consistency check fails inside the construction
/// (the pierced set differs from the pivot's closed neighbourhood).
class ConstructionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Repeats: stop with one point if the remaining family has a common point;
/// otherwise take the min-shorter-side pivot, add its P-grid, and drop
/// every remaining rectangle the grid pierces. Throws std::invalid_argument
/// on an empty instance.
PiercingResult construct_transversal(const Instance& inst);

/// Serialisation in the piercing-result JSON schema.
std::string serialize_piercing(const PiercingResult& res);
/// Throws ParseError on schema violations.
PiercingResult parse_piercing(std::string_view json_text);

}  // namespace rectpierce
