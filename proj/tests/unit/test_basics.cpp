#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "toggledyn/error.hpp"
#include "toggledyn/graph.hpp"
#include "toggledyn/labeling.hpp"
#include "toggledyn/residue.hpp"

using namespace toggledyn;

TEST_SUITE("basics") {

TEST_CASE("residues use 1..n") {
  CHECK(residue(0, 5) == 5);
  CHECK(residue(5, 5) == 5);
  CHECK(residue(6, 5) == 1);
  CHECK(residue(-1, 5) == 4);
  CHECK(residue(-10, 5) == 5);
}

TEST_CASE("cyclic interval multiplicities") {
  CyclicInterval iv(5, 9, 6);  // 5,6,1,2,3
  CHECK(iv.residues() == std::vector<int>{5, 6, 1, 2, 3});
  CHECK(iv.multiplicity(4) == 0);
  CHECK(iv.multiplicity(1) == 1);
  CyclicInterval wrap(1, 13, 6);
  CHECK(wrap.multiplicity(1) == 3);
  CHECK(wrap.multiplicity(2) == 2);
  CHECK(wrap.count_in({1, 2}) == 5);
  CHECK(cyclic_interval_intersect_count(wrap, {1, 2}) == 5);
  CHECK_THROWS_AS(CyclicInterval(4, 3, 6), InvalidArgument);
}

TEST_CASE("graph text forms") {
  Graph p = Graph::parse("path:4");
  CHECK(p.to_text() == "4; 1-2,2-3,3-4");
  CHECK(Graph::parse(p.to_text()) == p);
  Graph c = Graph::parse("cycle:5");
  CHECK(c.edge_count() == 5);
  CHECK(c.adjacent(0, 4));
  Graph g = Graph::parse("5; 1-2, 4-5");
  CHECK(!g.connected());
  CHECK(g.component_size_of(0) == 2);
  CHECK(g.component_size_of(2) == 1);
  CHECK_THROWS_AS(Graph::parse("3; 1-1"), InvalidArgument);
  CHECK_THROWS_AS(Graph::parse("3; 1-4"), InvalidArgument);
  CHECK_THROWS_AS(Graph::parse("bogus"), InvalidArgument);
}

TEST_CASE("tree enumeration counts") {
  // Cayley: n^(n-2) labeled trees.
  for (int n = 2; n <= 7; ++n) {
    long long want = 1;
    for (int k = 0; k < n - 2; ++k) want *= n;
    auto trees = labeled_trees(n);
    CHECK(static_cast<long long>(trees.size()) == want);
    for (const auto& t : trees) {
      CHECK(t.connected());
      CHECK(t.edge_count() == n - 1);
    }
  }
  // Unlabeled trees: 1, 1, 1, 2, 3, 6, 11, 23, 47.
  std::vector<std::size_t> want{1, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 1; n <= 9; ++n) CHECK(unlabeled_trees(n).size() == want[n - 1]);
}

TEST_CASE("tree canonical form is an isomorphism invariant") {
  std::mt19937_64 rng(7);
  for (const auto& t : unlabeled_trees(7)) {
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(tree_canonical_form(relabel(t, perm)) == tree_canonical_form(t));
  }
  auto classes = unlabeled_trees(6);
  std::set<std::string> forms;
  for (const auto& t : classes) forms.insert(tree_canonical_form(t));
  CHECK(forms.size() == classes.size());
}

TEST_CASE("random connected graphs are connected") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    int n = 2 + k % 6;
    CHECK(random_connected_graph(n, 0.3, rng).connected());
  }
}

TEST_CASE("labeling parse, rank and unrank agree with lexicographic order") {
  Labeling s = Labeling::parse("3,1,2");
  CHECK(s.label_of(0) == 3);
  CHECK(s.vertex_of(1) == 1);
  CHECK(s.to_text() == "3,1,2");
  CHECK_THROWS_AS(Labeling::parse("1,1,2"), InvalidArgument);
  CHECK_THROWS_AS(Labeling::parse("1,4,2"), InvalidArgument);
  for (int n = 1; n <= 6; ++n) {
    auto perms = oracle::all_perms(n);
    for (std::size_t r = 0; r < perms.size(); ++r) {
      Labeling l(perms[r]);
      CHECK(l.rank() == r);
      CHECK(Labeling::unrank(n, r) == l);
    }
  }
}

TEST_CASE("standardization") {
  // v3, v5, v1, v6 -> 2314
  CHECK(standardize({3, 5, 1, 6}) == std::vector<int>{2, 3, 1, 4});
  CHECK(standardize({}).empty());
  CHECK(standardize({10}) == std::vector<int>{1});
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(7) == 5040);
  CHECK(factorial(20) == 2432902008176640000ULL);
}

}
