#include <doctest.h>

#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "toggledyn/error.hpp"
#include "toggledyn/residue.hpp"
#include "toggledyn/toggles.hpp"
#include "toggledyn/word.hpp"

using namespace toggledyn;

namespace {

oracle::Edges edges_of(const Graph& g) { return g.edges(); }

std::vector<int> tokens_of(const OperatorWord& w) {
  std::vector<int> t;
  for (const auto& g : w.gens()) {
    if (g.kind == Generator::Kind::Toggle) t.push_back(g.index);
    else if (g.kind == Generator::Kind::Cyc) t.push_back(0);
    else t.push_back(-1);
  }
  return t;
}

OperatorWord random_word(int n, int len, std::mt19937_64& rng) {
  std::vector<Generator> gens;
  for (int k = 0; k < len; ++k) {
    int r = static_cast<int>(rng() % (n + 2));
    if (r < n) gens.push_back(Generator::toggle(r + 1));
    else if (r == n) gens.push_back(Generator::cyc());
    else gens.push_back(Generator::cyc_inverse());
  }
  return OperatorWord(n, gens);
}

}  // namespace

TEST_SUITE("words") {

TEST_CASE("toggle matches the reference on every labeling of small graphs") {
  for (const auto& g : {Graph::path(4), Graph::cycle(4), Graph::parse("5; 1-2,1-3,1-4,4-5")}) {
    int n = g.size();
    for (const auto& p : oracle::all_perms(n))
      for (int i = 1; i <= n; ++i)
        CHECK(toggle(Labeling(p), g, i).image() == oracle::toggle(p, edges_of(g), i));
  }
}

TEST_CASE("toggles are involutions and cyc has order n") {
  Graph g = Graph::path(5);
  Labeling s = Labeling::parse("2,5,1,4,3");
  for (int i = 1; i <= 5; ++i) CHECK(toggle(toggle(s, g, i), g, i) == s);
  CHECK(cyc_pow(s, 5) == s);
  CHECK(cyc_pow(s, -1) == Labeling(oracle::cyc_inverse(s.image())));
  CHECK(cyc(s).image() == oracle::cyc(s.image()));
}

TEST_CASE("word text form round-trips") {
  auto w = OperatorWord::parse(5, "t1 t2  cyc t5 cyc-");
  CHECK(w.to_text() == "t1 t2 cyc t5 cyc-");
  CHECK(OperatorWord::parse(5, w.to_text()) == w);
  CHECK(w.letter_counts() == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(!w.toggles_only());
  CHECK_THROWS_AS(OperatorWord::parse(5, "t6"), InvalidArgument);
  CHECK_THROWS_AS(OperatorWord::parse(5, "t0"), InvalidArgument);
  CHECK_THROWS_AS(OperatorWord::parse(5, "x"), InvalidArgument);
}

TEST_CASE("word evaluation, compiled evaluation and the reference agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    Graph g = random_connected_graph(n, 0.3, rng);
    OperatorWord w = random_word(n, 1 + static_cast<int>(rng() % 15), rng);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::shuffle(img.begin(), img.end(), rng);
    auto want = oracle::apply(img, edges_of(g), tokens_of(w));
    CHECK(w.apply(Labeling(img), g).image() == want);
    CHECK(CompiledWord(w, g).apply(Labeling(img)).image() == want);
  }
}

TEST_CASE("inverse, then, compose and power") {
  std::mt19937_64 rng(5);
  Graph g = Graph::path(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_word(6, 8, rng), b = random_word(6, 5, rng);
    Labeling s = Labeling::unrank(6, rng() % 720);
    CHECK(a.inverse().apply(a.apply(s, g), g) == s);
    CHECK(a.then(b).apply(s, g) == b.apply(a.apply(s, g), g));
    CHECK(compose(b, a).apply(s, g) == b.apply(a.apply(s, g), g));
    CHECK(a.power(3).apply(s, g) == a.apply(a.apply(a.apply(s, g), g), g));
    CHECK(a.power(-2).apply(a.power(2).apply(s, g), g) == s);
    CHECK(a.power(0).apply(s, g) == s);
  }
}

TEST_CASE("jeu de taquin on intervals") {
  Graph g = Graph::path(4);
  Labeling s = Labeling::parse("1,2,3,4");
  CHECK(jdt_interval(s, g, 2, 2) == s);
  // 1 sits next to 2, so they swap; then 1 (on v2) sits next to 3 and swaps again.
  CHECK(jdt_interval(s, g, 1, 3).to_text() == "2,3,1,4");
  CHECK_THROWS_AS(jdt_interval(s, g, 1, 6), InvalidArgument);
  CHECK_THROWS_AS(jdt_pair(s, g, 2, 2), InvalidArgument);
}

TEST_CASE("jdt glide example") {
  std::ifstream in(TOGGLEDYN_FIXTURES "/examples.json");
  auto fx = nlohmann::json::parse(in)["jdt_glide"];
  Graph g = Graph::parse(fx["graph"].get<std::string>());
  Labeling before = Labeling::parse(fx["before"].get<std::string>());
  auto iv = fx["interval"];
  Labeling after = jdt_interval(before, g, iv[0].get<int>(), iv[1].get<int>());
  CHECK(after.to_text() == fx["after"].get<std::string>());
  // The glided label passes exactly the listed labels: replay pair by pair.
  std::vector<int> passed;
  Labeling cur = before;
  int x = iv[0].get<int>();
  for (int k = x + 1; k <= iv[1].get<int>(); ++k) {
    int other = residue(k, g.size());
    Labeling next = jdt_pair(cur, g, x, other);
    if (!(next == cur)) passed.push_back(other);
    cur = next;
  }
  CHECK(passed == fx["glided_through"].get<std::vector<int>>());
}

}
