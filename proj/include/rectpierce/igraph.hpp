#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rectpierce/geometry.hpp"
#include "rectpierce/instance.hpp"

namespace rectpierce {

/// Undirected simple graph over rectangle ids. Vertex i is rect i.
class IntersectionGraph {
 public:
  IntersectionGraph() = default;
  explicit IntersectionGraph(std::size_t n) : adjacency_(n) {}

  /// Builds from an edge list; duplicate edges are collapsed. Throws
  /// std::invalid_argument on self-loops or out-of-range endpoints.
  static IntersectionGraph from_edges(std::size_t n,
                                      const std::vector<std::pair<RectId, RectId>>& edges);

  std::size_t size() const { return adjacency_.size(); }
  const std::vector<RectId>& neighbors(RectId v) const { return adjacency_.at(v); }
  std::size_t degree(RectId v) const { return adjacency_.at(v).size(); }
  std::size_t edge_count() const;
  bool adjacent(RectId a, RectId b) const;

  /// Edges (a, b) with a < b in lexicographic order.
  std::vector<std::pair<RectId, RectId>> edges() const;

  friend bool operator==(const IntersectionGraph&, const IntersectionGraph&) = default;

 private:
  std::vector<std::vector<RectId>> adjacency_;  // each list sorted, no duplicates
};

/// Tests every pair with `intersects`.
IntersectionGraph build_graph_bruteforce(const Instance& inst);

/// Sweep over x with insert-before-remove at equal x (closed rectangles).
/// Active y-intervals live in a segment tree for stabbing queries plus an
/// ordered set keyed by y_lo for range queries, so each reported pair costs
/// O(log n).
IntersectionGraph build_graph_sweep(const Instance& inst);

struct DegeneracyOrder {
  std::vector<RectId> order;  // removal sequence
  std::size_t degeneracy = 0;
};

/// Min-degree peeling with ties broken by smallest id.
DegeneracyOrder degeneracy_order(const IntersectionGraph& g);

struct DepthResult {
  std::size_t omega = 0;
  Point witness;
};

/// Maximum number of rectangles sharing a point, searched over
/// {x_lo values} x {y_lo values}. By the Helly property for boxes this is
/// the clique number. Witness is the lexicographically smallest deepest
/// candidate. Throws std::invalid_argument on an empty instance.
DepthResult max_depth_omega(const Instance& inst);

}  // namespace rectpierce
