#include "rectpierce/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "rectpierce/igraph.hpp"
#include "rectpierce/json_io.hpp"

namespace rectpierce {

using nlohmann::json;

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::find(const std::string& name) const {
  for (const Check& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

json VerificationReport::to_json() const {
  json checks_json = json::array();
  for (const Check& c : checks) {
    checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return {{"instance", instance_id}, {"pass", pass()}, {"checks", std::move(checks_json)},
          {"ratios", ratios}};
}

std::size_t transversal_bound(const Scalar& r, std::size_t certified) {
  const auto per_step = static_cast<std::size_t>(2 * (r.ceil() + 1));
  return certified == 0 ? 0 : per_step * (certified - 1) + 1;
}

std::size_t coloring_bound(const Scalar& r, std::size_t omega) {
  const auto per_step = static_cast<std::size_t>(2 * (r.ceil() + 1));
  return omega == 0 ? 1 : per_step * (omega - 1) + 1;
}

namespace {

std::string ids_to_string(const std::vector<RectId>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
  return out + "}";
}

void require_id(const Instance& inst, RectId id, const std::string& where) {
  if (id >= inst.size()) {
    throw MalformedResult(where + " references rect " + std::to_string(id) + " but the instance has " +
                          std::to_string(inst.size()));
  }
}

}  // namespace

VerificationReport verify_piercing(const Instance& inst, const PiercingResult& res,
                                   std::string instance_id) {
  for (RectId id : res.certificate) require_id(inst, id, "certificate");
  for (const TraceStep& t : res.trace) {
    if (t.rect) require_id(inst, *t.rect, "trace");
    for (RectId id : t.removed) require_id(inst, id, "trace removed list");
  }

  VerificationReport report;
  report.instance_id = std::move(instance_id);
  const auto rects = inst.rects();

  // completeness
  {
    Check c{"completeness", true, ""};
    for (const Rect& r : rects) {
      const bool hit = std::any_of(res.transversal.begin(), res.transversal.end(),
                                   [&](const Point& p) { return contains_point(r, p); });
      if (!hit) {
        c.pass = false;
        c.detail = "rect " + std::to_string(r.id()) + " contains no transversal point";
        break;
      }
    }
    report.checks.push_back(std::move(c));
  }

  // certificate_disjoint
  {
    Check c{"certificate_disjoint", true, ""};
    for (std::size_t a = 0; a < res.certificate.size() && c.pass; ++a) {
      for (std::size_t b = a + 1; b < res.certificate.size(); ++b) {
        const RectId ia = res.certificate[a], ib = res.certificate[b];
        if (ia == ib || intersects(inst[ia], inst[ib])) {
          c.pass = false;
          c.detail = "certificate rects " + std::to_string(ia) + " and " + std::to_string(ib) +
                     " intersect";
          break;
        }
      }
    }
    report.checks.push_back(std::move(c));
  }

  if (!inst.empty()) {
    const Scalar r = family_ratio(inst);
    const std::size_t bound = transversal_bound(r, res.certificate.size());
    Check c{"transversal_bound", res.transversal.size() <= bound,
            "|T| = " + std::to_string(res.transversal.size()) + " <= " + std::to_string(bound) +
                " (ceil r = " + std::to_string(r.ceil()) + ", |I| = " +
                std::to_string(res.certificate.size()) + ")"};
    report.checks.push_back(std::move(c));
  }

  // structure + pivot_neighborhood, by replaying the trace.
  Check structure{"structure", true, ""};
  Check neighborhood{"pivot_neighborhood", true, ""};
  auto fail = [](Check& c, std::string why) {
    if (c.pass) c.detail = std::move(why);
    c.pass = false;
  };

  std::vector<bool> alive(inst.size(), true);
  std::size_t offset = 0;
  // One entry per step, plus one when the last eps step closes the run
  // with a disjoint pair instead of its pivot.
  const bool pair_end = !res.trace.empty() && !res.ends_with_helly();
  if (res.certificate.size() != res.trace.size() + (pair_end ? 1 : 0)) {
    fail(structure, "certificate has " + std::to_string(res.certificate.size()) +
                        " entries for " + std::to_string(res.trace.size()) + " steps");
  }
  for (std::size_t s = 0; s < res.trace.size(); ++s) {
    const TraceStep& t = res.trace[s];
    const std::string where = "step " + std::to_string(s);
    if (t.step != s) fail(structure, where + ": step index " + std::to_string(t.step));
    if (offset + t.added > res.transversal.size()) {
      fail(structure, where + ": trace claims more points than the transversal holds");
      break;
    }
    const std::span<const Point> pts(res.transversal.data() + offset, t.added);
    offset += t.added;

    std::vector<RectId> pierced;
    for (const Rect& r : rects) {
      if (!alive[r.id()]) continue;
      if (std::any_of(pts.begin(), pts.end(), [&](const Point& p) { return contains_point(r, p); })) {
        pierced.push_back(r.id());
      }
    }
    std::vector<RectId> removed = t.removed;
    std::sort(removed.begin(), removed.end());
    for (RectId id : removed) {
      if (!alive[id]) fail(structure, where + ": removes rect " + std::to_string(id) + " twice");
    }

    if (t.kind == StepKind::kHelly) {
      if (s + 1 != res.trace.size()) fail(structure, where + ": Helly step is not the last step");
      if (t.added != 1) fail(structure, where + ": Helly step must add exactly one point");
      std::vector<RectId> survivors;
      for (RectId id = 0; id < inst.size(); ++id) {
        if (alive[id]) survivors.push_back(id);
      }
      if (pierced != survivors || removed != survivors) {
        fail(neighborhood, where + ": Helly point pierces " + ids_to_string(pierced) + " of " +
                               ids_to_string(survivors) + ", removed " + ids_to_string(removed));
      }
      if (s < res.certificate.size() &&
          !std::binary_search(survivors.begin(), survivors.end(), res.certificate[s])) {
        fail(structure, where + ": certificate entry is not in the final clique");
      }
    } else {
      if (!t.rect) {
        fail(structure, where + ": eps step without a pivot");
      } else {
        const Rect& pivot = inst[*t.rect];
        if (!alive[pivot.id()]) fail(structure, where + ": pivot already removed");
        if (pair_end && s + 1 == res.trace.size()) {
          for (std::size_t e = s; e < std::min(s + 2, res.certificate.size()); ++e) {
            if (!alive[res.certificate[e]]) fail(structure, where + ": closing pair member already removed");
          }
        } else if (s < res.certificate.size() && res.certificate[s] != pivot.id()) {
          fail(structure, where + ": certificate entry differs from pivot");
        }
        std::vector<RectId> closed_nbhd;
        for (const Rect& r : rects) {
          if (alive[r.id()] && intersects(r, pivot)) closed_nbhd.push_back(r.id());
        }
        if (pierced != closed_nbhd || removed != closed_nbhd) {
          fail(neighborhood, where + ": pierced " + ids_to_string(pierced) + ", neighbourhood " +
                                 ids_to_string(closed_nbhd) + ", removed " + ids_to_string(removed));
        }
      }
    }
    for (RectId id : removed) alive[id] = false;
  }
  if (offset != res.transversal.size()) {
    fail(structure, "trace accounts for " + std::to_string(offset) + " of " +
                        std::to_string(res.transversal.size()) + " points");
  }
  if (std::any_of(alive.begin(), alive.end(), [](bool a) { return a; })) {
    fail(structure, "trace leaves rectangles unremoved");
  }
  report.checks.push_back(std::move(structure));
  report.checks.push_back(std::move(neighborhood));

  if (!res.certificate.empty()) {
    report.ratios["tau_alg_over_nu_cert"] =
        static_cast<double>(res.transversal.size()) / static_cast<double>(res.certificate.size());
  }
  return report;
}

VerificationReport verify_coloring_bounds(const Instance& inst, const Coloring& c,
                                          std::string instance_id) {
  if (inst.empty()) throw MalformedResult("verify_coloring_bounds: empty instance");
  if (c.colors.size() != inst.size()) {
    throw MalformedResult("coloring has " + std::to_string(c.colors.size()) + " entries for " +
                          std::to_string(inst.size()) + " rectangles");
  }
  VerificationReport report;
  report.instance_id = std::move(instance_id);
  const auto rects = inst.rects();

  {
    Check proper{"proper", true, ""};
    for (std::size_t a = 0; a < rects.size() && proper.pass; ++a) {
      for (std::size_t b = a + 1; b < rects.size(); ++b) {
        if (c.colors[a] == c.colors[b] && intersects(rects[a], rects[b])) {
          proper.pass = false;
          proper.detail = "rects " + std::to_string(a) + " and " + std::to_string(b) +
                          " intersect and share colour " + std::to_string(c.colors[a]);
          break;
        }
      }
    }
    report.checks.push_back(std::move(proper));
  }
  {
    std::vector<bool> used(c.num_colors, false);
    bool in_range = true;
    for (std::size_t col : c.colors) {
      if (col >= c.num_colors) {
        in_range = false;
      } else {
        used[col] = true;
      }
    }
    const bool all_used = std::all_of(used.begin(), used.end(), [](bool u) { return u; });
    report.checks.push_back({"contiguous", in_range && all_used,
                             "colours used: 0.." + std::to_string(c.num_colors) + "-1"});
  }

  const std::size_t omega = max_depth_omega(inst).omega;
  const Scalar r = family_ratio(inst);
  const std::size_t bound = coloring_bound(r, omega);
  report.checks.push_back({"chi_bound", c.num_colors <= bound,
                           std::to_string(c.num_colors) + " <= " + std::to_string(bound) +
                               " (omega = " + std::to_string(omega) + ")"});
  if (r == Scalar(1)) {
    const std::size_t square_bound = 4 * omega - 3;
    report.checks.push_back({"squares_bound", c.num_colors <= square_bound,
                             std::to_string(c.num_colors) + " <= 4*" + std::to_string(omega) +
                                 "-3 = " + std::to_string(square_bound)});
  }
  report.ratios["colors_over_omega"] =
      static_cast<double>(c.num_colors) / static_cast<double>(omega);
  return report;
}

namespace {

InstanceStats stats_for(const NamedInstance& item, std::size_t exact_max_n, const ExactLimits& lim) {
  const Instance& inst = item.instance;
  InstanceStats row;
  row.instance_id = item.id;
  row.n = inst.size();
  row.r = family_ratio(inst);

  const PiercingResult piercing = construct_transversal(inst);
  const Coloring coloring = greedy_degeneracy_coloring(build_graph_sweep(inst));
  row.transversal_size = piercing.transversal.size();
  row.certificate_size = piercing.certificate.size();
  row.num_colors = coloring.num_colors;
  row.omega = max_depth_omega(inst).omega;
  row.verified = verify_piercing(inst, piercing).pass() && verify_coloring_bounds(inst, coloring).pass();

  if (inst.size() <= exact_max_n) {
    row.tau_exact = exact_tau(inst, lim).tau;
    row.nu_exact = exact_nu(inst, lim).nu;
    row.wegner_flag = *row.tau_exact + 1 > 2 * *row.nu_exact;
  }
  return row;
}

void accumulate(RatioSummary& s, double value) {
  s.max = s.count == 0 ? value : std::max(s.max, value);
  s.mean += (value - s.mean) / static_cast<double>(++s.count);
}

json summary_json(const RatioSummary& s) {
  return {{"max", s.max}, {"mean", s.mean}, {"count", s.count}};
}

}  // namespace

BatchSummary batch_stats(const std::vector<NamedInstance>& corpus, std::size_t exact_max_n,
                         const ExactLimits& lim) {
  if (corpus.empty()) throw std::invalid_argument("batch_stats: empty corpus");
  std::vector<InstanceStats> rows(corpus.size());
  std::vector<std::exception_ptr> errors(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) {
      try {
        rows[i] = stats_for(corpus[i], exact_max_n, lim);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(corpus.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::sort(rows.begin(), rows.end(),
            [](const InstanceStats& a, const InstanceStats& b) { return a.instance_id < b.instance_id; });
  BatchSummary summary;
  for (const InstanceStats& row : rows) {
    accumulate(summary.tau_alg_over_cert,
               static_cast<double>(row.transversal_size) / static_cast<double>(row.certificate_size));
    accumulate(summary.colors_over_omega,
               static_cast<double>(row.num_colors) / static_cast<double>(row.omega));
    if (row.tau_exact) {
      accumulate(summary.tau_exact_over_nu_exact,
                 static_cast<double>(*row.tau_exact) / static_cast<double>(*row.nu_exact));
    }
    if (row.wegner_flag) ++summary.wegner_flags;
    if (!row.verified) ++summary.failed_verifications;
  }
  summary.rows = std::move(rows);
  return summary;
}

json BatchSummary::to_json() const {
  json rows_json = json::array();
  for (const InstanceStats& row : rows) {
    json j = {{"instance", row.instance_id},
              {"n", row.n},
              {"r", scalar_to_json(row.r)},
              {"tau_alg", row.transversal_size},
              {"nu_cert", row.certificate_size},
              {"colors", row.num_colors},
              {"omega", row.omega},
              {"verified", row.verified}};
    if (row.tau_exact) {
      j["tau_exact"] = *row.tau_exact;
      j["nu_exact"] = *row.nu_exact;
      j["wegner_flag"] = row.wegner_flag;
    }
    rows_json.push_back(std::move(j));
  }
  return {{"instances", std::move(rows_json)},
          {"tau_alg_over_nu_cert", summary_json(tau_alg_over_cert)},
          {"colors_over_omega", summary_json(colors_over_omega)},
          {"tau_exact_over_nu_exact", summary_json(tau_exact_over_nu_exact)},
          {"wegner_flags", wegner_flags},
          {"failed_verifications", failed_verifications}};
}

}  // namespace rectpierce
