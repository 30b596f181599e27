// Slow reference implementations used to cross-check the library.
#pragma once

#include <algorithm>
#include <complex>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // perm[v] = label in 1..n
using Edges = std::vector<std::pair<int, int>>;  // 0-based

inline bool adjacent(const Edges& e, int u, int v) {
  for (auto [a, b] : e)
    if ((a == u && b == v) || (a == v && b == u)) return true;
  return false;
}

inline int where(const Perm& p, int label) {
  return static_cast<int>(std::find(p.begin(), p.end(), label) - p.begin());
}

inline Perm toggle(Perm p, const Edges& e, int i) {
  int n = static_cast<int>(p.size());
  int j = i % n + 1;
  int u = where(p, i), v = where(p, j);
  if (!adjacent(e, u, v)) std::swap(p[u], p[v]);
  return p;
}

inline Perm cyc(Perm p) {
  int n = static_cast<int>(p.size());
  for (int& x : p) x = x % n + 1;
  return p;
}

inline Perm cyc_inverse(Perm p) {
  int n = static_cast<int>(p.size());
  for (int& x : p) x = (x + n - 2) % n + 1;
  return p;
}

// Tokens: positive i = tau_i, 0 = cyc, -1 = cyc^-1; applied left to right.
inline Perm apply(Perm p, const Edges& e, const std::vector<int>& tokens) {
  for (int t : tokens) {
    if (t > 0) p = toggle(p, e, t);
    else if (t == 0) p = cyc(p);
    else p = cyc_inverse(p);
  }
  return p;
}

inline Edges path(int n) {
  Edges e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return e;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// size -> count, by walking every orbit with a std::set of visited points.
template <class F>
std::map<std::uint64_t, std::uint64_t> orbit_sizes(const std::vector<Perm>& points, F f) {
  std::set<Perm> seen;
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& p : points) {
    if (seen.count(p)) continue;
    std::uint64_t len = 0;
    Perm x = p;
    do {
      seen.insert(x);
      x = f(x);
      ++len;
    } while (x != p);
    ++out[len];
  }
  return out;
}

// Gaussian binomial by the q-Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
inline std::vector<long long> gauss(int n, int k) {
  if (k < 0 || k > n) return {};
  if (k == 0 || k == n) return {1};
  auto a = gauss(n - 1, k - 1);
  auto b = gauss(n - 1, k);
  std::vector<long long> out(std::max(a.size(), b.size() + k), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i + k] += b[i];
  return out;
}

inline std::complex<double> eval(const std::vector<long long>& c, long long k, long long omega) {
  std::complex<double> z = std::polar(1.0, 2 * M_PI * static_cast<double>(k) / static_cast<double>(omega));
  std::complex<double> acc = 0, pw = 1;
  for (long long x : c) {
    acc += static_cast<double>(x) * pw;
    pw *= z;
  }
  return acc;
}

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
