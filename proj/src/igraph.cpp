#include "rectpierce/igraph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace rectpierce {

IntersectionGraph IntersectionGraph::from_edges(
    std::size_t n, const std::vector<std::pair<RectId, RectId>>& edges) {
  IntersectionGraph g(n);
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

std::size_t IntersectionGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& list : adjacency_) total += list.size();
  return total / 2;
}

bool IntersectionGraph::adjacent(RectId a, RectId b) const {
  const auto& list = adjacency_.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<std::pair<RectId, RectId>> IntersectionGraph::edges() const {
  std::vector<std::pair<RectId, RectId>> out;
  for (RectId a = 0; a < adjacency_.size(); ++a) {
    for (RectId b : adjacency_[a]) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

IntersectionGraph build_graph_bruteforce(const Instance& inst) {
  std::vector<std::pair<RectId, RectId>> edges;
  const auto rects = inst.rects();
  for (std::size_t a = 0; a < rects.size(); ++a) {
    for (std::size_t b = a + 1; b < rects.size(); ++b) {
      if (intersects(rects[a], rects[b])) edges.emplace_back(a, b);
    }
  }
  return IntersectionGraph::from_edges(rects.size(), edges);
}

namespace {

// Order-preserving map from the distinct values to 0..m-1.
class Compressor {
 public:
  explicit Compressor(std::vector<Scalar> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  }
  std::size_t rank(const Scalar& v) const {
    return static_cast<std::size_t>(std::lower_bound(values_.begin(), values_.end(), v) -
                                    values_.begin());
  }
  const Scalar& value(std::size_t rank) const { return values_[rank]; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<Scalar> values_;
};

struct RankedRect {
  std::size_t x_lo, x_hi, y_lo, y_hi;
};

std::vector<RankedRect> rank_rects(const Instance& inst, Compressor& xs, Compressor& ys) {
  std::vector<Scalar> xv, yv;
  for (const Rect& r : inst.rects()) {
    xv.push_back(r.x_lo());
    xv.push_back(r.x_hi());
    yv.push_back(r.y_lo());
    yv.push_back(r.y_hi());
  }
  xs = Compressor(std::move(xv));
  ys = Compressor(std::move(yv));
  std::vector<RankedRect> out;
  out.reserve(inst.size());
  for (const Rect& r : inst.rects()) {
    out.push_back({xs.rank(r.x_lo()), xs.rank(r.x_hi()), ys.rank(r.y_lo()), ys.rank(r.y_hi())});
  }
  return out;
}

// Segment tree over discrete ranks supporting insert/erase of closed
// intervals and "all intervals containing rank k".
class StabbingTree {
 public:
  explicit StabbingTree(std::size_t m) : size_(std::max<std::size_t>(m, 1)), nodes_(4 * size_) {}

  void insert(std::size_t lo, std::size_t hi, RectId id) { update(1, 0, size_ - 1, lo, hi, id, true); }
  void erase(std::size_t lo, std::size_t hi, RectId id) { update(1, 0, size_ - 1, lo, hi, id, false); }

  template <typename Fn>
  void stab(std::size_t k, Fn&& fn) const {
    std::size_t node = 1, lo = 0, hi = size_ - 1;
    for (;;) {
      for (RectId id : nodes_[node]) fn(id);
      if (lo == hi) return;
      std::size_t mid = (lo + hi) / 2;
      if (k <= mid) {
        node = 2 * node;
        hi = mid;
      } else {
        node = 2 * node + 1;
        lo = mid + 1;
      }
    }
  }

 private:
  void update(std::size_t node, std::size_t lo, std::size_t hi, std::size_t qlo, std::size_t qhi,
              RectId id, bool add) {
    if (qhi < lo || hi < qlo) return;
    if (qlo <= lo && hi <= qhi) {
      if (add) {
        nodes_[node].insert(id);
      } else {
        nodes_[node].erase(id);
      }
      return;
    }
    std::size_t mid = (lo + hi) / 2;
    update(2 * node, lo, mid, qlo, qhi, id, add);
    update(2 * node + 1, mid + 1, hi, qlo, qhi, id, add);
  }

  std::size_t size_;
  std::vector<std::set<RectId>> nodes_;
};

}  // namespace

IntersectionGraph build_graph_sweep(const Instance& inst) {
  const std::size_t n = inst.size();
  if (n == 0) return IntersectionGraph(0);

  Compressor xs({}), ys({});
  const std::vector<RankedRect> ranked = rank_rects(inst, xs, ys);

  // (x rank, kind, id); kind 0 = insert sorts before kind 1 = remove.
  std::vector<std::tuple<std::size_t, int, RectId>> events;
  events.reserve(2 * n);
  for (RectId id = 0; id < n; ++id) {
    events.emplace_back(ranked[id].x_lo, 0, id);
    events.emplace_back(ranked[id].x_hi, 1, id);
  }
  std::sort(events.begin(), events.end());

  StabbingTree active_tree(ys.size());
  std::set<std::pair<std::size_t, RectId>> active_by_lo;
  std::vector<std::pair<RectId, RectId>> edges;

  for (const auto& [x, kind, id] : events) {
    const RankedRect& r = ranked[id];
    if (kind == 1) {
      active_tree.erase(r.y_lo, r.y_hi, id);
      active_by_lo.erase({r.y_lo, id});
      continue;
    }
    // Active intervals meeting [y_lo, y_hi] either contain y_lo or start
    // strictly inside (y_lo, y_hi]; the two cases are disjoint.
    active_tree.stab(r.y_lo, [&](RectId other) { edges.emplace_back(other, id); });
    for (auto it = active_by_lo.upper_bound({r.y_lo, n}); it != active_by_lo.end() && it->first <= r.y_hi;
         ++it) {
      edges.emplace_back(it->second, id);
    }
    active_tree.insert(r.y_lo, r.y_hi, id);
    active_by_lo.insert({r.y_lo, id});
  }
  return IntersectionGraph::from_edges(n, edges);
}

DegeneracyOrder degeneracy_order(const IntersectionGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> degree(n);
  std::set<std::pair<std::size_t, RectId>> queue;
  for (RectId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.insert({degree[v], v});
  }
  std::vector<bool> removed(n, false);
  DegeneracyOrder result;
  result.order.reserve(n);
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = true;
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, d);
    for (RectId u : g.neighbors(v)) {
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      --degree[u];
      queue.insert({degree[u], u});
    }
  }
  return result;
}

DepthResult max_depth_omega(const Instance& inst) {
  if (inst.empty()) throw std::invalid_argument("max_depth_omega: empty instance");
  Compressor xs({}), ys({});
  const std::vector<RankedRect> ranked = rank_rects(inst, xs, ys);

  std::vector<std::size_t> x_candidates;
  for (const RankedRect& r : ranked) x_candidates.push_back(r.x_lo);
  std::sort(x_candidates.begin(), x_candidates.end());
  x_candidates.erase(std::unique(x_candidates.begin(), x_candidates.end()), x_candidates.end());

  std::size_t best = 0, best_x = 0, best_y = 0;
  std::vector<std::pair<std::size_t, int>> events;
  for (std::size_t x : x_candidates) {
    events.clear();
    for (const RankedRect& r : ranked) {
      if (r.x_lo <= x && x <= r.x_hi) {
        // Opens (0) sort before closes (1) at equal y: closed intervals.
        events.emplace_back(r.y_lo, 0);
        events.emplace_back(r.y_hi, 1);
      }
    }
    std::sort(events.begin(), events.end());
    std::size_t depth = 0;
    for (auto [y, kind] : events) {
      if (kind == 0) {
        ++depth;
        if (depth > best) {
          best = depth;
          best_x = x;
          best_y = y;
        }
      } else {
        --depth;
      }
    }
  }
  return {best, Point{xs.value(best_x), ys.value(best_y)}};
}

}  // namespace rectpierce
