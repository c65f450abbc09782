#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "rectpierce/color.hpp"
#include "rectpierce/exact.hpp"
#include "rectpierce/instance.hpp"
#include "rectpierce/pierce.hpp"

namespace rectpierce {

/// Result refers to rectangles the instance does not have.
class MalformedResult : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::string instance_id;
  std::vector<Check> checks;
  std::map<std::string, double> ratios;

  bool pass() const;
  const Check* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

/// 2(ceil(r)+1)(certified - 1) + 1, or 0 when nothing is certified.
std::size_t transversal_bound(const Scalar& r, std::size_t certified);

/// 2(ceil(r)+1)(omega - 1) + 1.
std::size_t coloring_bound(const Scalar& r, std::size_t omega);

/// Recomputes, from the instance and the result alone:
///   structure            trace, point counts and certificate agree
///   completeness         every rectangle holds a transversal point
///   certificate_disjoint certificate rectangles pairwise disjoint
///   transversal_bound    |T| against transversal_bound(ceil r, |I|)
///   pivot_neighborhood   per eps step, the step's points pierce exactly the
///                        pivot's closed neighbourhood among the survivors,
///                        and that set is what the step removed
/// Throws MalformedResult on out-of-range ids.
VerificationReport verify_piercing(const Instance& inst, const PiercingResult& res,
                                   std::string instance_id = "");

/// proper, contiguous, chi_bound, and squares_bound (4*omega - 3) when the
/// family consists of squares. Throws MalformedResult on a size mismatch or
/// an empty instance.
VerificationReport verify_coloring_bounds(const Instance& inst, const Coloring& c,
                                          std::string instance_id = "");

struct InstanceStats {
  std::string instance_id;
  std::size_t n = 0;
  Scalar r;
  std::size_t transversal_size = 0;
  std::size_t certificate_size = 0;
  std::size_t num_colors = 0;
  std::size_t omega = 0;
  std::optional<std::size_t> tau_exact;
  std::optional<std::size_t> nu_exact;
  bool verified = false;
  bool wegner_flag = false;  // tau_exact > 2 * nu_exact - 1
};

struct RatioSummary {
  double max = 0.0;
  double mean = 0.0;
  std::size_t count = 0;
};

struct BatchSummary {
  std::vector<InstanceStats> rows;  // sorted by instance id
  RatioSummary tau_alg_over_cert;
  RatioSummary colors_over_omega;
  RatioSummary tau_exact_over_nu_exact;
  std::size_t wegner_flags = 0;
  std::size_t failed_verifications = 0;

  nlohmann::json to_json() const;
};

struct NamedInstance {
  std::string id;
  Instance instance;
};

/// Runs piercing and colouring on every instance, verifies both, and adds
/// exact tau/nu for instances with at most `exact_max_n` rectangles.
/// Instances are processed concurrently; rows come back sorted by id.
BatchSummary batch_stats(const std::vector<NamedInstance>& corpus, std::size_t exact_max_n = 10,
                         const ExactLimits& lim = {});

}  // namespace rectpierce
