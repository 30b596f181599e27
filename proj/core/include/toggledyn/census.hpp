#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "toggledyn/graph.hpp"
#include "toggledyn/labeling.hpp"
#include "toggledyn/operators.hpp"
#include "toggledyn/word.hpp"

namespace toggledyn {

using BigInt = boost::multiprecision::cpp_int;

// Multiset of orbit sizes: size -> number of orbits of that size.
struct OrbitSizes {
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t orbit_count() const;
  std::uint64_t total() const;
  BigInt order() const;
  // Number of points fixed by f^k.
  std::uint64_t fixed_points(long long k) const;
  bool all_divisible_by(std::uint64_t m) const;
  friend bool operator==(const OrbitSizes&, const OrbitSizes&) = default;
};

std::string to_string(const OrbitSizes& sizes);

struct OrbitCensus {
  int n = 0;
  std::string word;
  OrbitSizes sizes;
  // Lexicographically smallest labeling of each orbit, sorted, with that orbit's size.
  std::vector<std::pair<Labeling, std::uint64_t>> representatives;

  std::uint64_t total() const { return sizes.total(); }
  BigInt order() const { return sizes.order(); }
};

struct CensusOptions {
  int max_n = 9;         // state-space bound; overridden by force
  bool force = false;
  unsigned threads = 1;  // 1 = sequential deterministic mode
  bool keep_representatives = true;
};

// Bound from TOGGLEDYN_MAX_N if set, else 9.
int default_max_n();

std::vector<Labeling> orbit_of(const Labeling& sigma, const OperatorWord& w, const Graph& g);
OrbitCensus full_census(const Graph& g, const OperatorWord& w, const CensusOptions& opts = {});
BigInt order_of(const Graph& g, const OperatorWord& w, const CensusOptions& opts = {});
bool divisibility_check(const OrbitCensus& census, std::uint64_t m);

// Orbits through random starting labelings, each counted once. Makes no claim about
// orbits it did not reach; intended for n beyond the census bound (n <= 16).
struct SampledCensus {
  int n = 0;
  std::uint64_t samples = 0;
  OrbitSizes sizes;  // distinct orbits reached
  std::vector<std::pair<Labeling, std::uint64_t>> representatives;
};
SampledCensus sampled_census(const Graph& g, const OperatorWord& w, std::uint64_t samples,
                             std::uint64_t rng_seed, std::uint64_t max_orbit = std::uint64_t(1) << 26);

// Visit every orbit in rank order of its smallest member. The orbit starts at that member.
void for_each_orbit(const Graph& g, const OperatorWord& w,
                    const std::function<void(const std::vector<Labeling>&)>& visit,
                    const CensusOptions& opts = {});

// Map equality over all n! labelings.
bool maps_equal(const Graph& g, const OperatorWord& a, const OperatorWord& b);
// First labeling where the maps differ, if any.
std::optional<Labeling> first_difference(const Graph& g, const OperatorWord& a, const OperatorWord& b);

// Orbit sizes of an arbitrary permutation of a finite ordered set.
template <class T, class F>
OrbitSizes orbit_sizes_of_set(const std::vector<T>& elements, F f) {
  std::map<T, bool> seen;
  for (const auto& e : elements) seen[e] = false;
  OrbitSizes out;
  for (const auto& e : elements) {
    if (seen[e]) continue;
    std::uint64_t len = 0;
    T x = e;
    do {
      seen.at(x) = true;
      x = f(x);
      ++len;
    } while (!(x == e));
    ++out.counts[len];
  }
  return out;
}

struct Statistic {
  std::string name;
  std::function<Rational(const Labeling&)> eval;

  // 1 if sigma(v) == i (v is 0-based).
  static Statistic indicator(int v, int i);
};

struct HomomesyReport {
  std::vector<Rational> averages;  // one per orbit, in census order
  bool homomesic = false;          // all equal to expected
  Rational expected;
};

HomomesyReport homomesy_check(const Graph& g, const OperatorWord& w, const Statistic& stat,
                              const Rational& expected);

}  // namespace toggledyn
