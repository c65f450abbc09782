#include "rectpierce/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

namespace rectpierce {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

Mask all_bits(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

void check_size(std::size_t n, std::size_t cap, const char* oracle) {
  if (cap > 64) {
    throw std::invalid_argument(std::string(oracle) + ": size cap above 64 is not supported");
  }
  if (n > cap) {
    throw OracleLimitError(std::string(oracle) + ": instance has " + std::to_string(n) +
                           " rectangles, limit is " + std::to_string(cap));
  }
}

class Deadline {
 public:
  Deadline(std::chrono::milliseconds budget, const char* oracle)
      : end_(std::chrono::steady_clock::now() + budget), oracle_(oracle) {}

  void tick() {
    if ((calls_++ & 0x3ff) != 0) return;
    if (std::chrono::steady_clock::now() > end_) {
      throw BudgetExceeded(std::string(oracle_) + ": time budget exceeded");
    }
  }

 private:
  std::chrono::steady_clock::time_point end_;
  const char* oracle_;
  std::uint64_t calls_ = 0;
};

std::vector<Mask> neighbor_masks(const IntersectionGraph& g) {
  std::vector<Mask> out(g.size(), 0);
  for (RectId v = 0; v < g.size(); ++v) {
    for (RectId u : g.neighbors(v)) out[v] |= bit(u);
  }
  return out;
}

// Set cover over point masks, searched by increasing cover size.
class CoverSearch {
 public:
  CoverSearch(std::vector<Mask> sets, std::size_t n, Deadline& deadline)
      : sets_(std::move(sets)), n_(n), deadline_(deadline), covering_(n) {
    for (std::size_t s = 0; s < sets_.size(); ++s) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (sets_[s] & bit(i)) covering_[i].push_back(s);
      }
    }
    // Two rectangles sharing no set can never be pierced by one point.
    conflict_.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t s : covering_[i]) conflict_[i] |= sets_[s];
    }
  }

  std::vector<std::size_t> solve() {
    const Mask everything = all_bits(n_);
    for (std::size_t k = packing_bound(everything); k <= n_; ++k) {
      chosen_.clear();
      if (search(everything, k)) return chosen_;
    }
    return chosen_;  // unreachable: n singleton covers always exist
  }

 private:
  // Greedy set of uncovered rectangles no two of which share a point.
  std::size_t packing_bound(Mask uncovered) const {
    std::size_t count = 0;
    Mask blocked = 0;
    for (Mask rest = uncovered; rest; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if (blocked & bit(i)) continue;
      ++count;
      blocked |= conflict_[i];
    }
    return count;
  }

  bool search(Mask uncovered, std::size_t budget) {
    deadline_.tick();
    if (uncovered == 0) return true;
    if (budget == 0 || packing_bound(uncovered) > budget) return false;

    // Branch on the uncovered rectangle with the fewest covering sets.
    std::size_t pick = n_;
    for (Mask rest = uncovered; rest; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      if (pick == n_ || covering_[i].size() < covering_[pick].size()) pick = i;
    }
    for (std::size_t s : covering_[pick]) {
      chosen_.push_back(s);
      if (search(uncovered & ~sets_[s], budget - 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Mask> sets_;
  std::size_t n_;
  Deadline& deadline_;
  std::vector<std::vector<std::size_t>> covering_;
  std::vector<Mask> conflict_;
  std::vector<std::size_t> chosen_;
};

class IndependentSetSearch {
 public:
  IndependentSetSearch(std::vector<Mask> adjacency, Deadline& deadline)
      : adjacency_(std::move(adjacency)), deadline_(deadline) {}

  Mask solve(Mask candidates) {
    best_ = 0;
    best_size_ = 0;
    search(0, candidates);
    return best_;
  }

 private:
  void search(Mask current, Mask candidates) {
    deadline_.tick();
    const auto size = static_cast<std::size_t>(std::popcount(current));
    if (candidates == 0) {
      if (size > best_size_) {
        best_ = current;
        best_size_ = size;
      }
      return;
    }
    if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best_size_) return;
    const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    search(current | bit(v), candidates & ~adjacency_[v] & ~bit(v));
    search(current, candidates & ~bit(v));
  }

  std::vector<Mask> adjacency_;
  Deadline& deadline_;
  Mask best_ = 0;
  std::size_t best_size_ = 0;
};

std::vector<RectId> ids_of(Mask m) {
  std::vector<RectId> out;
  for (; m; m &= m - 1) out.push_back(static_cast<RectId>(std::countr_zero(m)));
  return out;
}

class ColoringSearch {
 public:
  ColoringSearch(const IntersectionGraph& g, std::vector<RectId> order, Deadline& deadline)
      : g_(g), order_(std::move(order)), deadline_(deadline), colors_(g.size(), kNone) {}

  bool solve(std::size_t k) {
    std::fill(colors_.begin(), colors_.end(), kNone);
    return assign(0, 0, k);
  }

  const std::vector<std::size_t>& colors() const { return colors_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  bool assign(std::size_t pos, std::size_t used, std::size_t k) {
    deadline_.tick();
    if (pos == order_.size()) return true;
    const RectId v = order_[pos];
    // A fresh colour is interchangeable with any other fresh one.
    const std::size_t limit = std::min(k, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      const auto& nbrs = g_.neighbors(v);
      if (std::any_of(nbrs.begin(), nbrs.end(), [&](RectId u) { return colors_[u] == c; })) {
        continue;
      }
      colors_[v] = c;
      if (assign(pos + 1, std::max(used, c + 1), k)) return true;
      colors_[v] = kNone;
    }
    return false;
  }

  const IntersectionGraph& g_;
  std::vector<RectId> order_;
  Deadline& deadline_;
  std::vector<std::size_t> colors_;
};

}  // namespace

std::vector<Point> candidate_points(const Instance& inst) {
  if (inst.empty()) throw std::invalid_argument("candidate_points: empty instance");
  std::vector<Scalar> xs, ys;
  for (const Rect& r : inst.rects()) {
    xs.push_back(r.x_lo());
    ys.push_back(r.y_lo());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<Point> out;
  for (const Scalar& x : xs) {
    for (const Scalar& y : ys) {
      Point p{x, y};
      const auto rects = inst.rects();
      if (std::any_of(rects.begin(), rects.end(), [&](const Rect& r) { return contains_point(r, p); })) {
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

TauResult exact_tau(const Instance& inst, const ExactLimits& lim) {
  check_size(inst.size(), lim.max_n_tau, "exact_tau");
  const std::vector<Point> candidates = candidate_points(inst);
  return exact_tau_over(inst, candidates, lim);
}

TauResult exact_tau_over(const Instance& inst, std::span<const Point> candidates,
                         const ExactLimits& lim) {
  check_size(inst.size(), lim.max_n_tau, "exact_tau");
  if (inst.empty()) return {};
  const std::size_t n = inst.size();

  // One representative point per distinct mask (first in candidate order).
  std::map<Mask, std::size_t> first_with_mask;
  Mask reachable = 0;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Mask m = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (contains_point(inst[i], candidates[c])) m |= bit(i);
    }
    if (m != 0) first_with_mask.emplace(m, c);
    reachable |= m;
  }
  if (reachable != all_bits(n)) {
    throw std::invalid_argument("exact_tau: some rectangle contains no candidate point");
  }

  // Drop masks strictly contained in another; order sets by representative.
  std::vector<std::pair<std::size_t, Mask>> kept;
  for (const auto& [m, c] : first_with_mask) {
    bool dominated = false;
    for (const auto& [other, unused] : first_with_mask) {
      if (other != m && (m & other) == m) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.emplace_back(c, m);
  }
  std::sort(kept.begin(), kept.end());

  std::vector<Mask> sets;
  for (const auto& [c, m] : kept) sets.push_back(m);
  Deadline deadline(lim.time_budget, "exact_tau");
  CoverSearch search(std::move(sets), n, deadline);
  std::vector<std::size_t> chosen = search.solve();
  std::sort(chosen.begin(), chosen.end());

  TauResult result;
  result.tau = chosen.size();
  for (std::size_t s : chosen) result.points.push_back(candidates[kept[s].first]);
  return result;
}

NuResult exact_nu(const Instance& inst, const ExactLimits& lim) {
  check_size(inst.size(), lim.max_n_nu, "exact_nu");
  const IntersectionGraph g = build_graph_bruteforce(inst);
  Deadline deadline(lim.time_budget, "exact_nu");
  IndependentSetSearch search(neighbor_masks(g), deadline);
  const Mask best = search.solve(all_bits(g.size()));
  NuResult result;
  result.witness = ids_of(best);
  result.nu = result.witness.size();
  return result;
}

std::size_t exact_omega_clique(const IntersectionGraph& g, const ExactLimits& lim) {
  check_size(g.size(), lim.max_n_chi, "exact_omega_clique");
  // A clique of g is an independent set of the complement.
  std::vector<Mask> complement = neighbor_masks(g);
  const Mask everything = all_bits(g.size());
  for (RectId v = 0; v < g.size(); ++v) complement[v] = ~complement[v] & everything & ~bit(v);
  Deadline deadline(lim.time_budget, "exact_omega_clique");
  IndependentSetSearch search(std::move(complement), deadline);
  return static_cast<std::size_t>(std::popcount(search.solve(everything)));
}

ChiResult exact_chi(const Instance& inst, const ExactLimits& lim) {
  check_size(inst.size(), lim.max_n_chi, "exact_chi");
  const IntersectionGraph g = build_graph_bruteforce(inst);
  ChiResult result;
  result.coloring = greedy_degeneracy_coloring(g);
  result.chi = result.coloring.num_colors;
  if (inst.empty()) return result;

  const std::size_t lower = max_depth_omega(inst).omega;
  std::vector<RectId> order(result.coloring.order_used.order.rbegin(),
                            result.coloring.order_used.order.rend());
  Deadline deadline(lim.time_budget, "exact_chi");
  ColoringSearch search(g, std::move(order), deadline);
  for (std::size_t k = lower; k < result.chi; ++k) {
    if (search.solve(k)) {
      result.chi = k;
      result.coloring.colors = search.colors();
      result.coloring.num_colors = k;
      break;
    }
  }
  return result;
}

}  // namespace rectpierce
