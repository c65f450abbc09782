// Command-line front end. Results go to --out (standard output for "-"),
// diagnostics to standard error.
//
// Exit codes: 0 success, 1 usage / IO / parse error, 2 verification
// failure, 3 exact oracle over its size cap or time budget.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rectpierce/color.hpp"
#include "rectpierce/exact.hpp"
#include "rectpierce/igraph.hpp"
#include "rectpierce/instance.hpp"
#include "rectpierce/json_io.hpp"
#include "rectpierce/pierce.hpp"
#include "rectpierce/render.hpp"
#include "rectpierce/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace rectpierce;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kVerificationFailed = 2;
constexpr int kOracleLimit = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::vector<NamedInstance> load_corpus(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const std::string& input : inputs) {
    if (fs::is_directory(input)) {
      for (const auto& entry : fs::directory_iterator(input)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
      }
    } else {
      files.emplace_back(input);
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw UsageError("no instance files found");
  std::vector<NamedInstance> corpus;
  for (const fs::path& f : files) {
    try {
      corpus.push_back({f.stem().string(), load_instance(f.string())});
    } catch (const ParseError& e) {
      throw ParseError(f.string() + ": " + e.what());
    }
  }
  return corpus;
}

// True for a piercing result, false for a colouring.
bool is_piercing_document(const std::string& path, const std::string& text) {
  json probe;
  try {
    probe = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
  if (probe.is_object() && probe.contains("points")) return true;
  if (probe.is_object() && probe.contains("colors")) return false;
  throw ParseError(path + ": neither a piercing result nor a colouring");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct GenerateOptions {
  std::string kind = "random";
  std::size_t n = 10;
  std::string r = "1";
  std::uint64_t seed = 0;
  std::string window = "100";
  std::string side_min = "1";
  std::string side_max = "10";
  std::int64_t resolution = 1000;
  std::string out = "-";
};

int run_generate(const GenerateOptions& o) {
  if (o.n == 0) throw UsageError("--n must be positive");
  Instance inst;
  if (o.kind == "random") {
    GeneratorConfig cfg;
    cfg.n = o.n;
    cfg.r_max = Scalar::parse(o.r);
    cfg.seed = o.seed;
    cfg.window = Scalar::parse(o.window);
    cfg.side_min = Scalar::parse(o.side_min);
    cfg.side_max = Scalar::parse(o.side_max);
    cfg.resolution = o.resolution;
    inst = generate_random(cfg);
  } else if (auto kind = parse_structured_kind(o.kind)) {
    inst = generate_structured(*kind, o.n);
  } else {
    throw UsageError("unknown --kind " + o.kind);
  }
  write_output(o.out, serialize_instance(inst));
  std::cerr << "generated " << inst.size() << " rectangles\n";
  return kOk;
}

struct RunOptions {
  std::string instance;
  std::string out = "-";
  std::string svg;
};

int run_pierce(const RunOptions& o) {
  const Instance inst = load_instance(o.instance);
  const PiercingResult res = construct_transversal(inst);
  write_output(o.out, serialize_piercing(res));
  if (!o.svg.empty()) write_output(o.svg, render_svg(inst, res));
  std::cerr << "transversal: " << res.transversal.size()
            << " points, certificate: " << res.certificate.size() << " disjoint rectangles\n";
  return kOk;
}

int run_color(const RunOptions& o) {
  const Instance inst = load_instance(o.instance);
  const Coloring c = greedy_degeneracy_coloring(build_graph_sweep(inst));
  write_output(o.out, serialize_coloring(c));
  if (!o.svg.empty()) write_output(o.svg, render_svg(inst, c));
  std::cerr << "colours: " << c.num_colors << " (degeneracy " << c.order_used.degeneracy << ")\n";
  return kOk;
}

struct ExactOptions {
  std::string instance;
  std::string what = "tau,nu";
  std::size_t max_n = 0;
  std::int64_t budget_ms = 30000;
  bool witness = false;
  std::string out = "-";
};

int run_exact(const ExactOptions& o) {
  const Instance inst = load_instance(o.instance);
  ExactLimits lim;
  if (o.max_n > 0) lim.max_n_tau = lim.max_n_nu = lim.max_n_chi = o.max_n;
  lim.time_budget = std::chrono::milliseconds(o.budget_ms);

  json doc = json::object();
  for (const std::string& what : split_csv(o.what)) {
    if (what == "tau") {
      const TauResult t = exact_tau(inst, lim);
      doc["tau"] = t.tau;
      if (o.witness) {
        json pts = json::array();
        for (const Point& p : t.points) pts.push_back(point_to_json(p));
        doc["tau_points"] = std::move(pts);
      }
    } else if (what == "nu") {
      const NuResult nu = exact_nu(inst, lim);
      doc["nu"] = nu.nu;
      if (o.witness) doc["nu_witness"] = nu.witness;
    } else if (what == "chi") {
      const ChiResult chi = exact_chi(inst, lim);
      doc["chi"] = chi.chi;
      if (o.witness) doc["chi_colors"] = chi.coloring.colors;
    } else if (what == "omega") {
      doc["omega"] = exact_omega_clique(build_graph_bruteforce(inst), lim);
    } else {
      throw UsageError("unknown --what entry '" + what + "' (tau, nu, chi, omega)");
    }
  }
  write_output(o.out, doc.dump() + "\n");
  return kOk;
}

struct VerifyOptions {
  std::string instance;
  std::string result;
  std::string batch;
  std::string out = "-";
};

int run_verify(const VerifyOptions& o) {
  json reports = json::array();
  bool all_pass = true;
  auto add = [&](const VerificationReport& r) {
    all_pass = all_pass && r.pass();
    reports.push_back(r.to_json());
  };

  if (!o.batch.empty()) {
    for (const NamedInstance& item : load_corpus({o.batch})) {
      add(verify_piercing(item.instance, construct_transversal(item.instance), item.id));
      add(verify_coloring_bounds(item.instance,
                                 greedy_degeneracy_coloring(build_graph_sweep(item.instance)), item.id));
    }
  } else {
    if (o.instance.empty()) throw UsageError("verify needs an instance file or --batch");
    const Instance inst = load_instance(o.instance);
    const std::string id = fs::path(o.instance).stem().string();
    if (o.result.empty()) {
      add(verify_piercing(inst, construct_transversal(inst), id));
      add(verify_coloring_bounds(inst, greedy_degeneracy_coloring(build_graph_sweep(inst)), id));
    } else {
      const std::string text = read_file(o.result);
      if (is_piercing_document(o.result, text)) {
        add(verify_piercing(inst, parse_piercing(text), id));
      } else {
        add(verify_coloring_bounds(inst, parse_coloring(text), id));
      }
    }
  }
  write_output(o.out, (reports.size() == 1 ? reports[0] : reports).dump(2) + "\n");
  std::cerr << (all_pass ? "all checks passed\n" : "verification FAILED\n");
  return all_pass ? kOk : kVerificationFailed;
}

struct StatsOptions {
  std::vector<std::string> inputs;
  std::size_t exact_max_n = 10;
  std::string out = "-";
};

int run_stats(const StatsOptions& o) {
  const BatchSummary summary = batch_stats(load_corpus(o.inputs), o.exact_max_n);
  write_output(o.out, summary.to_json().dump(2) + "\n");
  std::cerr << summary.rows.size() << " instances, max |T|/|I| = " << summary.tau_alg_over_cert.max
            << ", max colours/omega = " << summary.colors_over_omega.max
            << ", Wegner flags = " << summary.wegner_flags << "\n";
  return summary.failed_verifications == 0 ? kOk : kVerificationFailed;
}

struct RenderOptions {
  std::string instance;
  std::string overlay;
  std::string out = "-";
  int canvas = 800;
};

int run_render(const RenderOptions& o) {
  const Instance inst = load_instance(o.instance);
  Overlay overlay;
  if (!o.overlay.empty()) {
    const std::string text = read_file(o.overlay);
    if (is_piercing_document(o.overlay, text)) {
      overlay = parse_piercing(text);
    } else {
      overlay = parse_coloring(text);
    }
  }
  RenderStyle style;
  style.canvas = o.canvas;
  write_output(o.out, render_svg(inst, overlay, style));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Piercing and colouring of r-bounded rectangle families with checkable certificates"};
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a random or structured instance");
  generate->add_option("--kind", gen.kind, "random | disjoint_grid | common_point_clique | chain");
  generate->add_option("--n", gen.n, "Number of rectangles");
  generate->add_option("--r", gen.r, "Maximum aspect ratio, integer or p/q");
  generate->add_option("--seed", gen.seed, "PRNG seed");
  generate->add_option("--window", gen.window, "Side of the bounding square");
  generate->add_option("--side-min", gen.side_min, "Minimum shorter side");
  generate->add_option("--side-max", gen.side_max, "Maximum shorter side");
  generate->add_option("--resolution", gen.resolution, "Grid denominator Q");
  generate->add_option("--out", gen.out, "Output path, - for standard output");

  RunOptions pierce_opts;
  auto* pierce = app.add_subcommand("pierce", "Construct a transversal with its certificate");
  pierce->add_option("instance", pierce_opts.instance)->required();
  pierce->add_option("--out", pierce_opts.out);
  pierce->add_option("--svg", pierce_opts.svg, "Also write an SVG figure");

  RunOptions color_opts;
  auto* color = app.add_subcommand("color", "Greedy degeneracy colouring");
  color->add_option("instance", color_opts.instance)->required();
  color->add_option("--out", color_opts.out);
  color->add_option("--svg", color_opts.svg, "Also write an SVG figure");

  ExactOptions exact_opts;
  auto* exact = app.add_subcommand("exact", "Exact tau / nu / chi / omega on small instances");
  exact->add_option("instance", exact_opts.instance)->required();
  exact->add_option("--what", exact_opts.what, "Comma list of tau, nu, chi, omega");
  exact->add_option("--max-n", exact_opts.max_n, "Override every size cap (at most 64)");
  exact->add_option("--budget-ms", exact_opts.budget_ms, "Time budget per oracle");
  exact->add_flag("--witness", exact_opts.witness, "Include optimal witnesses");
  exact->add_option("--out", exact_opts.out);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Re-check a result, or pierce+colour and check");
  verify->add_option("instance", verify_opts.instance);
  verify->add_option("result", verify_opts.result, "Piercing or colouring JSON");
  verify->add_option("--batch", verify_opts.batch, "Directory of instance files");
  verify->add_option("--out", verify_opts.out);

  StatsOptions stats_opts;
  auto* stats = app.add_subcommand("stats", "Ratio statistics over a corpus");
  stats->add_option("inputs", stats_opts.inputs, "Instance files or directories")->required();
  stats->add_option("--exact-max-n", stats_opts.exact_max_n, "Run exact oracles up to this size");
  stats->add_option("--out", stats_opts.out);

  RenderOptions render_opts;
  auto* render = app.add_subcommand("render", "SVG figure of an instance");
  render->add_option("instance", render_opts.instance)->required();
  render->add_option("--overlay", render_opts.overlay, "Piercing or colouring JSON");
  render->add_option("--canvas", render_opts.canvas, "Canvas size in pixels");
  render->add_option("--out", render_opts.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*generate) return run_generate(gen);
    if (*pierce) return run_pierce(pierce_opts);
    if (*color) return run_color(color_opts);
    if (*exact) return run_exact(exact_opts);
    if (*verify) return run_verify(verify_opts);
    if (*stats) return run_stats(stats_opts);
    if (*render) return run_render(render_opts);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const OracleLimitError& e) {
    std::cerr << "oracle limit: " << e.what() << "\n";
    return kOracleLimit;
  } catch (const BudgetExceeded& e) {
    std::cerr << "oracle budget: " << e.what() << "\n";
    return kOracleLimit;
  } catch (const MalformedResult& e) {
    std::cerr << "malformed result: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const ConstructionError& e) {
    std::cerr << "construction check failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
