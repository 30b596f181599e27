#pragma once

#include <set>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "toggledyn/graph.hpp"
#include "toggledyn/labeling.hpp"
#include "toggledyn/word.hpp"

namespace toggledyn {

using Rational = boost::rational<long long>;

// Acyclic orientation of Cycle_n. Edge i is {i, i+1}; it is counterclockwise
// (pointing i+1 -> i) exactly when i is in ccw().
class AcyclicOrientation {
 public:
  AcyclicOrientation(int n, std::set<int> ccw);

  // alpha_pi: edge i is counterclockwise iff pi^-1(i) > pi^-1(i+1).
  static AcyclicOrientation from_pi(const std::vector<int>& pi);
  // beta_S: sources S, sinks S-1.
  static AcyclicOrientation from_sources(int n, const std::vector<int>& sources);
  // Unique source d and unique sink n.
  static AcyclicOrientation source_d_sink_n(int n, int d);

  int modulus() const { return n_; }
  int d() const { return static_cast<int>(ccw_.size()); }
  const std::set<int>& ccw() const { return ccw_; }
  bool is_ccw(int edge) const { return ccw_.count(edge) > 0; }
  // (tail, head) of edge i.
  std::pair<int, int> arrow(int edge) const;
  std::vector<std::pair<int, int>> arrows() const;
  std::vector<int> sources() const;
  std::vector<int> sinks() const;
  // Turn source i into a sink.
  AcyclicOrientation flip_source(int i) const;
  // A bijection pi (pi[0] = pi(1)) with alpha_pi equal to this orientation.
  std::vector<int> linear_extension() const;

  friend bool operator==(const AcyclicOrientation&, const AcyclicOrientation&) = default;

 private:
  int n_;
  std::set<int> ccw_;
};

void validate_bijection(const std::vector<int>& pi);
std::vector<int> inverse_permutation(const std::vector<int>& pi);
// Number of i in Z/nZ with p(i) > p(i+1), indices cyclic.
int cyclic_descents(const std::vector<int>& p);

OperatorWord promotion_word(int n);
OperatorWord toric_word(int n);
OperatorWord permutoric_word(const std::vector<int>& pi);
OperatorWord permutoric_word(const AcyclicOrientation& beta);

// Maximal arcs of B on Cycle_n as (a, b) with a <= b < a + n, sorted by a.
std::vector<std::pair<int, int>> arcs_of(int n, const std::set<int>& b);
OperatorWord broken_word(int n, const std::set<int>& b);
OperatorWord cyc_broken_word(int n, const std::set<int>& b);

Labeling glob_three_step(const Labeling& sigma, const Graph& g, const std::set<int>& b);

// Sorted residues s_1 < ... < s_d, pairwise nonadjacent on Cycle_n.
struct IndependentSet {
  int n = 0;
  std::vector<int> s;

  // s_i for any integer i via s_{i+d} = s_i + n.
  long long at(long long i) const;
  std::set<int> minus_one() const;
  // R = (Z/nZ) \ (S - 1).
  std::set<int> complement_of_minus_one() const;
  void validate() const;
};

Labeling glob_two_step(const Labeling& sigma, const Graph& g, const IndependentSet& s);

long long rounded_nearest(const Rational& x);
IndependentSet canonical_S(int n, int d);

// Phi_{n,d}: for i = 1..n-d apply tau_{i+d-1}, ..., tau_i, then cyc^d.
OperatorWord phi_word(int n, int d);
// prod_{i=n}^{1} (tau_i ... tau_{i+d-1}), the word for TPro_beta^d with beta = source_d_sink_n.
OperatorWord tpro_beta_power_d_word(int n, int d);
// (cyc^-1 Bro_{1..d}^-1)^n.
OperatorWord inverse_cyc_bro_power_word(int n, int d);

struct TproBroDecomposition {
  long long gamma = 0;
  long long q = 0;
  long long r = 0;
  std::set<int> j;
  std::set<int> r_set;
  OperatorWord word;  // cyc^-q Bro_J (cyc Bro_R)^q
};
TproBroDecomposition tpro_bro_decomposition(const IndependentSet& s, long long gamma);

// Every letter appears k times and every suffix X of Y (in composition order)
// has X<a> - X<b> in {0, 1} for every arrow a -> b.
bool verify_suffix_lemma(const OperatorWord& y, const AcyclicOrientation& beta, int k);

}  // namespace toggledyn
