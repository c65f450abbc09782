// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rectpierce/color.hpp"
#include "rectpierce/exact.hpp"
#include "rectpierce/igraph.hpp"
#include "rectpierce/pierce.hpp"
#include "rectpierce/verify.hpp"
#include "test_support.hpp"

namespace rp = rectpierce;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Ratio grid shared by the random corpora.
const std::vector<rp::Scalar>& ratios() {
  static const std::vector<rp::Scalar> rs = {rp::Scalar(1), rp::Scalar(2), rp::Scalar(3), rp::Scalar(5, 2)};
  return rs;
}

rp::Instance random_instance(std::size_t n, const rp::Scalar& r, std::uint64_t seed, std::int64_t side_max = 10) {
  rp::GeneratorConfig cfg;
  cfg.n = n;
  cfg.r_max = r;
  cfg.side_max = side_max;
  // Keep the expected degree roughly constant as n grows.
  cfg.window = std::max<std::int64_t>(
      2 * side_max, static_cast<std::int64_t>(std::ceil(1.5 * side_max * std::sqrt(static_cast<double>(n)))));
  cfg.seed = seed;
  return rp::generate_random(cfg);
}

std::size_t per_step(const rp::Scalar& r) { return static_cast<std::size_t>(2 * (r.ceil() + 1)); }

std::size_t neighbourhood_discrepancies = 0;
std::size_t pivot_steps = 0;

Outcome criterion1() {
  const auto start = Clock::now();
  const std::vector<std::size_t> sizes = {10, 50, 200};
  Outcome out;
  std::size_t failures = 0;
  std::size_t count = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = sizes[seed % 3];
    const rp::Scalar& r = ratios()[(seed / 3) % 4];
    const rp::Instance inst = random_instance(n, r, 1000 + seed);
    const rp::PiercingResult res = rp::construct_transversal(inst);
    const rp::VerificationReport report = rp::verify_piercing(inst, res);
    ++count;
    for (const char* name : {"completeness", "certificate_disjoint", "transversal_bound"}) {
      const rp::Check* c = report.find(name);
      if (c == nullptr || !c->pass) {
        ++failures;
        if (out.detail.empty()) out.detail = "seed " + std::to_string(1000 + seed) + " failed " + name + "; ";
      }
    }
    const rp::Check* nbhd = report.find("pivot_neighborhood");
    if (nbhd == nullptr || !nbhd->pass) ++neighbourhood_discrepancies;
    for (const rp::TraceStep& step : res.trace) pivot_steps += step.kind == rp::StepKind::kEps;
  }
  const double elapsed = seconds_since(start);
  out.pass = failures == 0 && elapsed < 60.0;
  out.detail += std::to_string(count) + " instances, " + std::to_string(failures) + " failed checks, " +
                std::to_string(elapsed) + " s (limit 60 s)";
  return out;
}

Outcome criterion2() {
  const auto start = Clock::now();
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const rp::Scalar& r = ratios()[seed % 4];
    const rp::Instance inst = random_instance(1 + seed % 10, r, 2000 + seed, 6);
    const std::size_t tau = rp::exact_tau(inst).tau;
    const std::size_t nu = rp::exact_nu(inst).nu;
    const std::size_t alg = rp::construct_transversal(inst).transversal.size();
    if (tau > per_step(r) * (nu - 1) + 1 || tau > alg) ++violations;
  }
  const double elapsed = seconds_since(start);
  return {violations == 0 && elapsed < 300.0,
          "200 instances, " + std::to_string(violations) + " violations, " + std::to_string(elapsed) + " s"};
}

Outcome criterion3() {
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const rp::Instance inst = random_instance(1 + seed % 10, rp::Scalar(1), 3000 + seed, 6);
    const std::size_t tau = rp::exact_tau(inst).tau;
    const std::size_t nu = rp::exact_nu(inst).nu;
    const rp::PiercingResult res = rp::construct_transversal(inst);
    if (tau + 3 > 4 * nu || res.transversal.size() + 3 > 4 * res.certificate.size()) ++violations;
  }
  return {violations == 0, "200 square instances, " + std::to_string(violations) + " violations"};
}

struct ColoringCorpus {
  std::vector<rp::Instance> instances;
};

const ColoringCorpus& coloring_corpus() {
  static const ColoringCorpus corpus = [] {
    ColoringCorpus c;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const rp::Scalar& r = ratios()[seed % 4];
      c.instances.push_back(random_instance(1 + seed % 100, r, 4000 + seed));
    }
    return c;
  }();
  return corpus;
}

Outcome criterion4() {
  std::size_t violations = 0;
  for (const rp::Instance& inst : coloring_corpus().instances) {
    const rp::Scalar r = rp::family_ratio(inst);
    const std::size_t omega = rp::max_depth_omega(inst).omega;
    const std::size_t d = rp::degeneracy_order(rp::build_graph_sweep(inst)).degeneracy;
    if (d > per_step(r) * (omega - 1)) ++violations;
  }
  return {violations == 0, "500 instances, " + std::to_string(violations) + " violations"};
}

Outcome criterion5() {
  std::size_t violations = 0;
  std::size_t squares = 0;
  for (const rp::Instance& inst : coloring_corpus().instances) {
    const rp::Scalar r = rp::family_ratio(inst);
    const rp::IntersectionGraph g = rp::build_graph_sweep(inst);
    const rp::Coloring c = rp::greedy_degeneracy_coloring(g);
    const std::size_t omega = rp::max_depth_omega(inst).omega;
    bool ok = rp::validate_coloring(g, c) && c.num_colors <= per_step(r) * (omega - 1) + 1;
    if (r == rp::Scalar(1)) {
      ++squares;
      ok = ok && c.num_colors + 3 <= 4 * omega;
    }
    if (!ok) ++violations;
  }
  return {violations == 0, "500 instances (" + std::to_string(squares) + " square families), " +
                               std::to_string(violations) + " violations"};
}

Outcome criterion6() {
  return {neighbourhood_discrepancies == 0 && pivot_steps > 0,
          std::to_string(pivot_steps) + " pivot steps replayed, " + std::to_string(neighbourhood_discrepancies) +
              " discrepancies"};
}

Outcome criterion7() {
  std::size_t mismatches = 0;
  std::mt19937_64 gen(7);
  for (std::uint64_t i = 0; i < 300; ++i) {
    // Alternate generator output with arbitrary rational families, which
    // exercise shared and touching coordinates.
    const rp::Instance inst =
        i % 2 == 0 ? random_instance(1 + (i * 37) % 500, ratios()[i % 4], 7000 + i)
                   : rectpierce::testing::random_family(gen, 1 + (i * 53) % 500, 40);
    if (!(rp::build_graph_sweep(inst) == rp::build_graph_bruteforce(inst))) ++mismatches;
  }
  std::size_t omega_mismatches = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const rp::Instance inst = i % 2 == 0 ? random_instance(1 + i % 15, ratios()[i % 4], 7500 + i, 6)
                                         : rectpierce::testing::random_family(gen, 1 + i % 15, 12);
    if (rp::exact_omega_clique(rp::build_graph_bruteforce(inst)) != rp::max_depth_omega(inst).omega) {
      ++omega_mismatches;
    }
  }
  std::size_t tau_mismatches = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const rp::Instance inst = rectpierce::testing::random_family(gen, 1 + i % 6, 8);
    std::vector<rp::Scalar> xs, ys;
    for (const rp::Rect& r : inst.rects()) {
      xs.insert(xs.end(), {r.x_lo(), r.x_hi()});
      ys.insert(ys.end(), {r.y_lo(), r.y_hi()});
    }
    std::vector<rp::Point> fine;
    for (const rp::Scalar& x : xs) {
      for (const rp::Scalar& y : ys) fine.push_back(rp::Point{x, y});
    }
    if (rp::exact_tau(inst).tau != rp::exact_tau_over(inst, fine).tau) ++tau_mismatches;
  }
  return {mismatches + omega_mismatches + tau_mismatches == 0,
          "sweep/brute " + std::to_string(mismatches) + "/300, clique/depth " + std::to_string(omega_mismatches) +
              "/200, candidate/fine tau " + std::to_string(tau_mismatches) + "/100 mismatches"};
}

Outcome criterion8() {
  namespace t = rectpierce::testing;
  std::mt19937_64 gen(8);
  std::size_t tested = 0;
  std::size_t failures = 0;
  while (tested < 10000) {
    const rp::Scalar eps = t::random_rational(gen, 1, 4, 9);
    const rp::Scalar cw = eps * t::random_rational(gen, 0, 1, 9);
    const rp::Scalar ch = eps * t::random_rational(gen, 0, 1, 9);
    const rp::Scalar rw = eps * (rp::Scalar(1) + t::random_rational(gen, 0, 3, 9));
    const rp::Scalar rh = eps * (rp::Scalar(1) + t::random_rational(gen, 0, 3, 9));
    if (cw == rp::Scalar(0) || ch == rp::Scalar(0)) continue;
    const rp::Scalar cx = t::random_rational(gen, 0, 10), cy = t::random_rational(gen, 0, 10);
    const rp::Scalar rx = t::random_rational(gen, 0, 10), ry = t::random_rational(gen, 0, 10);
    const rp::Rect c(0, cx, cx + cw, cy, cy + ch);
    const rp::Rect r(1, rx, rx + rw, ry, ry + rh);
    if (!rp::intersects(r, c)) continue;
    ++tested;
    const auto corners = c.corners();
    if (std::none_of(corners.begin(), corners.end(), [&](const rp::Point& p) { return rp::contains_point(r, p); })) {
      ++failures;
    }
  }
  return {failures == 0, std::to_string(tested) + " triples, " + std::to_string(failures) + " without a corner"};
}

Outcome criterion9() {
  std::size_t mutants = 0;
  std::size_t caught = 0;
  bool baseline_ok = true;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const rp::Instance inst = random_instance(10 + seed % 40, ratios()[seed % 4], 9000 + seed);
    const rp::PiercingResult res = rp::construct_transversal(inst);
    baseline_ok = baseline_ok && rp::verify_piercing(inst, res).pass();
    for (std::size_t i = 0; i < res.transversal.size(); ++i) {
      rp::PiercingResult mutated = res;
      mutated.transversal.erase(mutated.transversal.begin() + static_cast<std::ptrdiff_t>(i));
      ++mutants;
      caught += !rp::verify_piercing(inst, mutated).pass();
    }
    const rp::IntersectionGraph g = rp::build_graph_sweep(inst);
    const rp::Coloring c = rp::greedy_degeneracy_coloring(g);
    baseline_ok = baseline_ok && rp::verify_coloring_bounds(inst, c).pass();
    for (rp::RectId v = 0; v < g.size(); ++v) {
      std::set<std::size_t> targets;
      for (rp::RectId u : g.neighbors(v)) targets.insert(c.colors[u]);
      for (std::size_t colour : targets) {
        rp::Coloring mutated = c;
        mutated.colors[v] = colour;
        ++mutants;
        caught += !rp::verify_coloring_bounds(inst, mutated).pass();
      }
    }
  }
  return {baseline_ok && caught == mutants && mutants > 0,
          std::to_string(caught) + "/" + std::to_string(mutants) + " mutants caught" +
              (baseline_ok ? "" : ", unmutated output failed verification")};
}

Outcome criterion10() {
  std::size_t accepted = 0;
  std::size_t with_edges = 0;
  std::size_t violations = 0;
  for (std::uint64_t seed = 0; accepted < 100; ++seed) {
    if (seed > 100000) return {false, "could not generate 100 triangle-free instances"};
    rp::GeneratorConfig cfg;
    cfg.n = 2 + seed % 13;
    cfg.r_max = 1;
    cfg.side_max = 6;
    cfg.window = 18;
    cfg.seed = 10000 + seed;
    const rp::Instance inst = rp::generate_random(cfg);
    if (rp::max_depth_omega(inst).omega > 2) continue;
    const rp::IntersectionGraph g = rp::build_graph_bruteforce(inst);
    if (rp::exact_omega_clique(g) > 2) continue;
    ++accepted;
    with_edges += g.edge_count() > 0;
    if (rp::exact_chi(inst).chi > 3) ++violations;
  }
  return {violations == 0, std::to_string(accepted) + " triangle-free square instances (" +
                               std::to_string(with_edges) + " with edges), " + std::to_string(violations) +
                               " with chi > 3"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 transversal bound, 1000 generated instances", criterion1},
      {"2 exact tau vs nu bound, n <= 10", criterion2},
      {"3 squares: tau <= 4 nu - 3", criterion3},
      {"4 degeneracy bound, 500 instances", criterion4},
      {"5 greedy colouring bound, 500 instances", criterion5},
      {"6 pierced set equals pivot neighbourhood", criterion6},
      {"7 oracle equivalences", criterion7},
      {"8 corner lemma, 10000 triples", criterion8},
      {"9 mutation sensitivity, 50 instances", criterion9},
      {"10 triangle-free squares are 3-colourable", criterion10},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%s] %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
    failed += !out.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
