#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "toggledyn/census.hpp"
#include "toggledyn/config.hpp"
#include "toggledyn/error.hpp"
#include "toggledyn/fence.hpp"
#include "toggledyn/io.hpp"
#include "toggledyn/render.hpp"
#include "toggledyn/verify.hpp"

using namespace toggledyn;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kBound = 3;

int run_census(const RunConfig& cfg) {
  Graph g = config_graph(cfg);
  int n = g.size();
  OperatorWord w = config_word(cfg, n);
  CensusOptions opts;
  opts.max_n = cfg.max_n;
  opts.force = cfg.force;
  opts.threads = cfg.threads;
  if (cfg.sample > 0) {
    auto sc = sampled_census(g, w, static_cast<std::uint64_t>(cfg.sample), cfg.rng_seed);
    if (cfg.format == "table") {
      std::cout << "graph " << g.to_text() << "\nword  " << w.to_text() << "\nsampled " << sc.samples
                << " starts, order divisible by " << sc.sizes.order() << "\nsize\tcount\n";
      for (auto [k, m] : sc.sizes.counts) std::cout << k << "\t" << m << "\n";
    } else {
      std::cout << sampled_census_json(sc, g, w).dump(2) << "\n";
    }
    return kOk;
  }
  OrbitCensus census = full_census(g, w, opts);
  if (cfg.format == "table") {
    std::cout << "graph " << g.to_text() << "\nword  " << w.to_text() << "\norder " << census.order()
              << "\n";
    if (!cfg.order_only) {
      std::cout << "size\tcount\n";
      for (auto [k, m] : census.sizes.counts) std::cout << k << "\t" << m << "\n";
    }
  } else {
    std::cout << census_json(census, g, w, cfg.order_only).dump(2) << "\n";
  }
  return kOk;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw InvalidArgument("--n expects N or A..B, got '" + text + "'");
  }
}

int run_verify(const RunConfig& cfg) {
  if (!is_suite(cfg.suite)) throw InvalidArgument("unknown suite: " + cfg.suite);
  SuiteOptions opts;
  if (!cfg.n) throw InvalidArgument("verify needs --n");
  opts.n_max = *cfg.n;
  opts.n_min = cfg.n_min.value_or(*cfg.n);
  if (opts.n_min > opts.n_max) throw InvalidArgument("empty n range");
  if (opts.n_max > cfg.max_n && !cfg.force)
    throw BoundExceeded("n = " + std::to_string(opts.n_max) + " exceeds the bound " +
                        std::to_string(cfg.max_n) + "; pass --force");
  opts.d = cfg.d;
  if (cfg.seeds != "all") {
    try {
      opts.seeds = std::stoll(cfg.seeds);
    } catch (const std::exception&) {
      throw InvalidArgument("--seeds expects 'all' or a count");
    }
  }
  opts.rng_seed = cfg.rng_seed;
  opts.threads = cfg.threads;
  SuiteReport rep = run_suite(cfg.suite, opts);
  if (cfg.format == "table") {
    // Scalar fields only; nested data stays in the JSON form.
    for (const auto& inst : rep.instances) {
      std::cout << (inst.value("pass", false) ? "pass" : "FAIL");
      for (const auto& [key, value] : inst.items())
        if (key != "pass" && value.is_primitive()) std::cout << "\t" << key << "=" << value.dump();
      std::cout << "\n";
    }
    std::cout << rep.suite << ": " << (rep.ok() ? "ok" : "FAILED") << " (" << rep.checked
              << " checked, " << rep.failed << " failed)\n";
  } else {
    std::cout << rep.to_json().dump(2) << "\n";
  }
  return rep.ok() ? kOk : kMismatch;
}

Labeling timeline_seed(const RunConfig& cfg, int n) {
  if (!cfg.seed_labeling.empty()) {
    Labeling s = Labeling::parse(cfg.seed_labeling);
    if (s.size() != n) throw InvalidArgument("seed labeling has the wrong length");
    return s;
  }
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  std::mt19937_64 rng(cfg.rng_seed);
  std::shuffle(img.begin(), img.end(), rng);
  return Labeling(img);
}

int run_timeline(const RunConfig& cfg) {
  int n = 0;
  if (!cfg.graph.empty()) {
    Graph g = Graph::parse(cfg.graph);
    if (!(g == Graph::path(g.size()))) throw InvalidArgument("timelines are defined on path graphs only");
    n = g.size();
  } else if (cfg.n) {
    n = *cfg.n;
  } else if (!cfg.seed_labeling.empty()) {
    n = Labeling::parse(cfg.seed_labeling).size();
  } else {
    throw InvalidArgument("timeline needs --n, --graph or --labeling");
  }
  if (!cfg.d) throw InvalidArgument("timeline needs --d");
  Timeline tl(timeline_seed(cfg, n), *cfg.d);

  long long period = -1;
  long long steps = cfg.steps > 0 ? cfg.steps : n;
  if (cfg.until_period) {
    period = tl.period();
    steps = period;
  }
  if (cfg.render == "ascii") {
    for (long long t = 0; t <= steps; ++t) std::cout << render_ascii(tl, t) << "\n";
  } else if (cfg.render == "svg") {
    std::cout << render_svg(tl, 0, steps);
  } else if (!cfg.render.empty()) {
    throw InvalidArgument("--render expects ascii or svg");
  } else {
    std::cout << json{{"type", "seed"}, {"n", n}, {"d", *cfg.d}, {"labeling", tl.at(0).to_text()}}.dump()
              << "\n";
    for (long long t = 1; t <= steps; ++t)
      for (const auto& st : tl.small_steps(t)) {
        json rec = small_step_json(st);
        rec["type"] = "step";
        std::cout << rec.dump() << "\n";
      }
  }
  if (period >= 0 && cfg.render.empty())
    std::cout << json{{"type", "period"}, {"period", period}}.dump() << "\n";
  if (cfg.fence) {
    HasseFence fence = build_fence(tl, 3);
    json rec = fence_json(fence, first_transversal(fence));
    rec["type"] = "fence";
    std::cout << rec.dump() << "\n";
  }
  return kOk;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "census") return run_census(cfg);
  if (cfg.command == "verify") return run_verify(cfg);
  if (cfg.command == "timeline") return run_timeline(cfg);
  throw InvalidArgument("unknown command: " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toggledyn: toggle-promotion dynamics on graph labelings"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.max_n = default_max_n();
  bool print_config = false;
  std::string config_file;
  std::string n_text;
  app.add_flag("--print-config", print_config, "Print the normalized run config and exit");

  auto common_bounds = [&](CLI::App* sub) {
    sub->add_option("--max-n", cfg.max_n, "State-space bound (default from TOGGLEDYN_MAX_N or 9)");
    sub->add_flag("--force", cfg.force, "Ignore the state-space bound");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  };

  auto* census = app.add_subcommand("census", "Orbit census of an operator");
  census->add_option("--graph", cfg.graph, "Graph: path:N, cycle:N or 'n; a-b,...'");
  census->add_option("--n", cfg.n, "Number of vertices (Path_n when --graph is absent)");
  census->add_option("--op", cfg.op, "pro, tpro, tpro-pi, tpro-beta, bro, cyc-bro, phi");
  census->add_option("--word", cfg.word, "Explicit word in application order, e.g. 't1 t2 cyc'");
  census->add_option("--pi", cfg.pi, "Bijection for tpro-pi, e.g. 3,1,2,4");
  census->add_option("--B", cfg.b, "Subset for bro/cyc-bro, e.g. 1,3,4, or R");
  census->add_option("--d", cfg.d, "Parameter d");
  census->add_flag("--order-only", cfg.order_only, "Print only the order");
  census->add_option("--sample", cfg.sample, "Sample orbits from K random starts instead of a full census")
      ->check(CLI::PositiveNumber);
  census->add_option("--seed", cfg.rng_seed, "Random seed for --sample");
  common_bounds(census);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", cfg.suite, "Suite name")->required();
  verify->add_option("--n", n_text, "N or A..B")->required();
  verify->add_option("--d", cfg.d, "Restrict to one d");
  verify->add_flag("--all-d", "Every admissible d (default)");
  verify->add_option("--seeds", cfg.seeds, "'all' or a sample count");
  verify->add_option("--seed", cfg.rng_seed, "Random seed");
  common_bounds(verify);

  auto* timeline = app.add_subcommand("timeline", "Simulate a stones/coins timeline");
  timeline->add_option("--n", cfg.n, "Path length");
  timeline->add_option("--graph", cfg.graph, "Path graph, e.g. path:6");
  timeline->add_option("--d", cfg.d, "Number of stones")->required();
  timeline->add_option("--labeling", cfg.seed_labeling, "Seed labeling, e.g. 5,2,6,4,1,3");
  timeline->add_option("--seed", cfg.rng_seed, "Random seed when --labeling is absent");
  timeline->add_option("--steps", cfg.steps, "Number of time steps (default n)");
  timeline->add_flag("--until-period", cfg.until_period, "Run one full period and report it");
  timeline->add_option("--render", cfg.render, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}));
  timeline->add_flag("--fence", cfg.fence, "Emit the Hasse fence and a transversal");

  auto* run = app.add_subcommand("run", "Run a saved config file");
  run->add_option("file", config_file, "Config in key=value form")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (run->parsed()) {
      std::ifstream in(config_file);
      std::stringstream ss;
      ss << in.rdbuf();
      cfg = RunConfig::parse(ss.str());
    } else {
      cfg.command = app.get_subcommands().front()->get_name();
      if (verify->parsed()) {
        auto [lo, hi] = parse_n_range(n_text);
        cfg.n = hi;
        if (lo != hi) cfg.n_min = lo;
      }
    }
    if (print_config) {
      std::cout << cfg.to_text();
      return kOk;
    }
    return dispatch(cfg);
  } catch (const BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const ArithmeticError& e) {
    std::cerr << "arithmetic error: " << e.what() << "\n";
    return kMismatch;
  }
}
