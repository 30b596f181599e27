// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toggledyn/census.hpp"
#include "toggledyn/fence.hpp"
#include "toggledyn/operators.hpp"
#include "toggledyn/stones.hpp"
#include "toggledyn/verify.hpp"

using namespace toggledyn;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

json fixture(const char* key) {
  std::ifstream in(TOGGLEDYN_FIXTURES "/examples.json");
  return json::parse(in)[key];
}

SuiteOptions range(int n_min, int n_max) {
  SuiteOptions o;
  o.n_min = n_min;
  o.n_max = n_max;
  return o;
}

std::string summary(const SuiteReport& r) {
  return r.suite + " " + std::to_string(r.checked - r.failed) + "/" + std::to_string(r.checked);
}

Outcome suites(std::initializer_list<std::pair<const char*, SuiteOptions>> runs) {
  Outcome out{true, ""};
  for (const auto& [name, opts] : runs) {
    auto r = run_suite(name, opts);
    out.pass = out.pass && r.ok();
    if (!out.detail.empty()) out.detail += ", ";
    out.detail += summary(r);
  }
  return out;
}

Outcome toric() { return suites({{"thm-toric", range(2, 7)}}); }

Outcome path7_order() {
  auto order = order_of(Graph::path(7), promotion_word(7));
  return {order == BigInt("3224590642072800"), "order " + order.str()};
}

Outcome main_theorem() { return suites({{"thm-main", range(2, 7)}}); }

Outcome divisibility() { return suites({{"prop-divisibility", range(2, 7)}}); }

Outcome broken() { return suites({{"thm-broken-1d", range(2, 7)}, {"thm-broken-R", range(2, 7)}}); }

Outcome homomesy() {
  SuiteOptions o = range(2, 6);
  o.seeds = 200;
  auto out = suites({{"prop-homomesy", o}});

  auto fx = fixture("homomesy_cyc_bro");
  Graph g = Graph::parse(fx["graph"].get<std::string>());
  auto w = cyc_broken_word(5, fx["B"].get<std::set<int>>());
  bool example = true;
  for (int v = 0; v < 5; ++v)
    for (int i : fx["labels"].get<std::vector<int>>())
      example = example && homomesy_check(g, w, Statistic::indicator(v, i), Rational(1, 5)).homomesic;
  out.pass = out.pass && example;
  out.detail += example ? ", example n=5 reproduced" : ", example n=5 FAILED";
  return out;
}

Outcome glob_example() {
  auto fx = fixture("glob_three_step");
  auto b = fx["B"].get<std::set<int>>();
  Labeling s = Labeling::parse(fx["sigma"].get<std::string>());
  Graph g = Graph::path(9);
  auto glob = glob_three_step(s, g, b);
  auto word = cyc_broken_word(9, b).apply(s, g);
  return {glob.to_text() == fx["result"].get<std::string>() && glob == word,
          "glob " + glob.to_text() + ", word " + word.to_text()};
}

Outcome tpro_bro() { return suites({{"prop-tpro-bro", range(2, 7)}}); }

Outcome identities() { return suites({{"phi-identities", range(2, 7)}}); }

Outcome stones() {
  auto fx = fixture("timeline_n6_d3");
  Timeline tl(Labeling::parse(fx["seed"].get<std::string>()), fx["d"].get<int>());
  std::vector<long long> times;
  for (long long t = 1; t <= tl.period(); ++t)
    for (const auto& st : tl.small_steps(t))
      for (const auto& c : st.collisions) times.push_back(c.time);
  bool example = tl.period() == fx["period"].get<long long>() &&
             times == fx["collision_times"].get<std::vector<long long>>();
  Outcome out{example, example ? "example period 18 and schedule ok" : "example MISMATCH"};
  for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 3}}) {
    SuiteOptions o = range(n, n);
    o.d = d;
    auto r = run_suite("fence-laws", o);
    out.pass = out.pass && r.ok();
    out.detail += ", (" + std::to_string(n) + "," + std::to_string(d) + ") " +
                  std::to_string(r.instances.at(0).value("seeds", 0)) + " seeds " + (r.ok() ? "ok" : "FAILED");
  }
  return out;
}

Outcome omega_counts() { return suites({{"omega-counts", range(2, 7)}}); }

Outcome rot_csp() { return suites({{"rot-csp", range(1, 10)}}); }

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "toric promotion orbit sizes on trees and 2-forests, n<=7", 60, toric},
      {2, "promotion order on Path_7", 10, path7_order},
      {3, "permutoric promotion order and CSP, n<=7", 300, main_theorem},
      {4, "permutoric orbit sizes divisible by lcm(d,n-d), n<=7", 0, divisibility},
      {5, "cyc Bro orders and CSPs for {1..d} and R, n<=7", 0, broken},
      {6, "label-indicator homomesy, 200 random instances", 0, homomesy},
      {7, "three-step glob worked example", 0, glob_example},
      {8, "TPro_beta^gamma as cyc and broken promotions, n<=7", 0, tpro_bro},
      {9, "operator word identities, n<=7", 0, identities},
      {10, "stones and coins fence laws", 600, stones},
      {11, "Omega orbit counting, n<=7", 0, omega_counts},
      {12, "rotation CSP on compositions, n<=10", 0, rot_csp},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = c.limit_s == 0 || secs < c.limit_s;
    if (!in_time) o.detail += ", over the " + std::to_string(static_cast<int>(c.limit_s)) + " s limit";
    bool pass = o.pass && in_time;
    failed += !pass;
    std::printf("%s %2d %s (%.1fs): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
