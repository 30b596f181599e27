#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "toggledyn/census.hpp"
#include "toggledyn/error.hpp"

using namespace toggledyn;

namespace {

std::map<std::uint64_t, std::uint64_t> reference_sizes(const Graph& g, const OperatorWord& w) {
  std::vector<int> tokens;
  for (const auto& x : w.gens())
    tokens.push_back(x.kind == Generator::Kind::Toggle ? x.index : x.kind == Generator::Kind::Cyc ? 0 : -1);
  auto edges = g.edges();
  return oracle::orbit_sizes(oracle::all_perms(g.size()),
                             [&](const oracle::Perm& p) { return oracle::apply(p, edges, tokens); });
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("census agrees with a set-based orbit walk") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_connected_graph(n, 0.4, rng);
    std::vector<Generator> gens;
    for (int k = 0; k < 6; ++k)
      gens.push_back(rng() % 4 ? Generator::toggle(1 + static_cast<int>(rng() % n)) : Generator::cyc());
    OperatorWord w(n, gens);
    auto c = full_census(g, w);
    CHECK(c.sizes.counts == reference_sizes(g, w));
    CHECK(c.total() == factorial(n));
    std::uint64_t reps = 0;
    for (auto [k, m] : c.sizes.counts) reps += m;
    CHECK(c.representatives.size() == reps);
  }
}

TEST_CASE("parallel census is identical to sequential") {
  Graph g = Graph::path(7);
  CensusOptions seq, par;
  par.threads = 4;
  for (const auto& w : {promotion_word(7), toric_word(7), OperatorWord::parse(7, "t3 t1 cyc t5")}) {
    auto a = full_census(g, w, seq), b = full_census(g, w, par);
    CHECK(a.sizes == b.sizes);
    CHECK(a.representatives == b.representatives);
  }
}

TEST_CASE("toric promotion on a small path") {
  auto c = full_census(Graph::path(4), toric_word(4));
  CHECK(c.sizes.counts == std::map<std::uint64_t, std::uint64_t>{{3, 8}});
}

TEST_CASE("promotion order on Path_7") {
  CHECK(order_of(Graph::path(7), promotion_word(7)) == BigInt("3224590642072800"));
}

TEST_CASE("orbit sizes bookkeeping") {
  OrbitSizes s;
  s.counts = {{2, 3}, {3, 2}};
  CHECK(s.orbit_count() == 5);
  CHECK(s.total() == 12);
  CHECK(s.order() == 6);
  CHECK(s.fixed_points(0) == 12);
  CHECK(s.fixed_points(2) == 6);
  CHECK(s.fixed_points(3) == 6);
  CHECK(s.fixed_points(1) == 0);
  CHECK(s.fixed_points(-2) == 6);
  CHECK(!s.all_divisible_by(2));
  CHECK(to_string(s) == "{2^3, 3^2}");
  auto r = orbit_sizes_of_set(std::vector<int>{0, 1, 2, 3, 4, 5}, [](int x) { return (x + 2) % 6; });
  CHECK(r.counts == std::map<std::uint64_t, std::uint64_t>{{3, 2}});
}

TEST_CASE("orbit_of returns the orbit in iteration order") {
  Graph g = Graph::path(4);
  Labeling s = Labeling::parse("1,2,3,4");
  auto orbit = orbit_of(s, toric_word(4), g);
  CHECK(orbit.size() == 3);
  CHECK(orbit.front() == s);
  CHECK(orbit[1] == toric_word(4).apply(s, g));
}

TEST_CASE("state-space bound") {
  CensusOptions opts;
  opts.max_n = 5;
  CHECK_THROWS_AS(full_census(Graph::path(6), toric_word(6), opts), BoundExceeded);
  opts.force = true;
  CHECK(full_census(Graph::path(6), toric_word(6), opts).total() == 720);
  CHECK_THROWS_AS(full_census(Graph::path(17), toric_word(17), opts), InvalidArgument);
  setenv("TOGGLEDYN_MAX_N", "11", 1);
  CHECK(default_max_n() == 11);
  unsetenv("TOGGLEDYN_MAX_N");
  CHECK(default_max_n() == 9);
}

TEST_CASE("sampled census only reports real orbits") {
  Graph g = Graph::path(6);
  auto full = full_census(g, promotion_word(6));
  auto sc = sampled_census(g, promotion_word(6), 200, 3);
  CHECK(sc.samples == 200);
  std::map<Labeling, std::uint64_t> reps(full.representatives.begin(), full.representatives.end());
  for (const auto& [rep, size] : sc.representatives) CHECK(reps.at(rep) == size);
  for (auto [size, count] : sc.sizes.counts) CHECK(count <= full.sizes.counts.at(size));
  CHECK(sc.sizes.order() <= full.order());
  auto big = sampled_census(Graph::path(12), toric_word(12), 5, 1);
  CHECK(big.sizes.counts == std::map<std::uint64_t, std::uint64_t>{{11, big.sizes.orbit_count()}});
  CHECK_THROWS_AS(sampled_census(Graph::path(6), promotion_word(6), 5, 1, 3), BoundExceeded);
  CHECK_THROWS_AS(sampled_census(Graph::path(17), toric_word(17), 1, 1), InvalidArgument);
}

TEST_CASE("map equality") {
  Graph g = Graph::path(5);
  CHECK(maps_equal(g, OperatorWord::parse(5, "t1 t3"), OperatorWord::parse(5, "t3 t1")));
  CHECK(!maps_equal(g, OperatorWord::parse(5, "t1 t2"), OperatorWord::parse(5, "t2 t1")));
  CHECK(first_difference(g, OperatorWord::parse(5, "t1 t2"), OperatorWord::parse(5, "t2 t1")).has_value());
  // cyc conjugates toggles: cyc tau_i = tau_{i+1} cyc
  CHECK(maps_equal(g, OperatorWord::parse(5, "t2 cyc"), OperatorWord::parse(5, "cyc t3")));
}

TEST_CASE("toric orbit sizes on forests") {
  for (int n = 2; n <= 6; ++n)
    for (int a = 1; a < n; ++a) {
      Graph g = disjoint_union(Graph::path(a), Graph::path(n - a));
      for_each_orbit(g, toric_word(n), [&](const std::vector<Labeling>& orbit) {
        for (const auto& s : orbit) {
          long long t = g.component_size_of(s.vertex_of(1));
          CHECK(static_cast<long long>(orbit.size()) == (n - 1) * t / std::gcd<long long>(t, n));
        }
      });
    }
}

TEST_CASE("homomesy of label indicators under cyc Bro") {
  std::ifstream in(TOGGLEDYN_FIXTURES "/examples.json");
  auto fx = nlohmann::json::parse(in)["homomesy_cyc_bro"];
  Graph g = Graph::parse(fx["graph"].get<std::string>());
  auto b = fx["B"].get<std::set<int>>();
  auto w = cyc_broken_word(5, b);
  std::size_t five = 0;
  for_each_orbit(g, w, [&](const std::vector<Labeling>& orbit) {
    if (orbit.size() != 5) return;
    ++five;
    for (int label : fx["labels"].get<std::vector<int>>())
      for (int v = 0; v < 5; ++v) {
        int hits = 0;
        for (const auto& s : orbit) hits += s.label_of(v) == label;
        CHECK(hits == 1);
      }
  });
  CHECK(five > 0);
  for (int v = 0; v < 5; ++v)
    for (int i : {1, 3}) CHECK(homomesy_check(g, w, Statistic::indicator(v, i), Rational(1, 5)).homomesic);
}

}
