#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "rectpierce/color.hpp"
#include "rectpierce/geometry.hpp"
#include "rectpierce/igraph.hpp"
#include "rectpierce/instance.hpp"

namespace rectpierce {

/// Size caps and wall-clock budget for the exponential oracles. No cap may
/// exceed 64 (the searches use 64-bit vertex masks).
struct ExactLimits {
  std::size_t max_n_tau = 12;
  std::size_t max_n_nu = 24;
  std::size_t max_n_chi = 16;
  std::chrono::milliseconds time_budget{std::chrono::seconds(30)};
};

/// Instance larger than the oracle's cap.
class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Search ran past its time budget. Never accompanied by a partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {x_lo values} x {y_lo values}, restricted to points inside at least one
/// rectangle, sorted lexicographically by (x, y).
std::vector<Point> candidate_points(const Instance& inst);

struct TauResult {
  std::size_t tau = 0;
  std::vector<Point> points;
};

/// Minimum number of points piercing the instance, searched over
/// candidate_points.
TauResult exact_tau(const Instance& inst, const ExactLimits& lim = {});

/// Minimum cover of the instance using only `candidates`. Throws
/// std::invalid_argument if some rectangle contains none of them.
TauResult exact_tau_over(const Instance& inst, std::span<const Point> candidates,
                         const ExactLimits& lim = {});

struct NuResult {
  std::size_t nu = 0;
  std::vector<RectId> witness;  // ascending
};

NuResult exact_nu(const Instance& inst, const ExactLimits& lim = {});

struct ChiResult {
  std::size_t chi = 0;
  Coloring coloring;
};

/// Optimal colouring of the intersection graph: tries k from the point-depth
/// clique bound upward, each by backtracking, stopping at the greedy bound.
ChiResult exact_chi(const Instance& inst, const ExactLimits& lim = {});

/// Maximum clique of `g` found from the graph alone. Bounded by max_n_chi.
std::size_t exact_omega_clique(const IntersectionGraph& g, const ExactLimits& lim = {});

}  // namespace rectpierce
