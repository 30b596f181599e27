#include "toggledyn/toggles.hpp"

#include <utility>

#include "toggledyn/error.hpp"
#include "toggledyn/residue.hpp"

namespace toggledyn {

namespace {

Labeling swap_labels(const Labeling& sigma, int a, int b) {
  std::vector<int> img = sigma.image();
  std::swap(img[sigma.vertex_of(a)], img[sigma.vertex_of(b)]);
  return Labeling(std::move(img));
}

}  // namespace

Labeling toggle(const Labeling& sigma, const Graph& g, int i) {
  int n = sigma.size();
  require(g.size() == n, "graph and labeling sizes differ");
  require(i >= 1 && i <= n, "toggle index out of range 1..n");
  int j = residue(i + 1, n);
  if (g.adjacent(sigma.vertex_of(i), sigma.vertex_of(j))) return sigma;
  return swap_labels(sigma, i, j);
}

Labeling cyc(const Labeling& sigma) { return cyc_pow(sigma, 1); }

Labeling cyc_pow(const Labeling& sigma, long long k) {
  int n = sigma.size();
  return sigma.with_labels_mapped([&](int a) { return residue(a + k, n); });
}

Labeling jdt_pair(const Labeling& sigma, const Graph& g, int i1, int i2) {
  int n = sigma.size();
  require(g.size() == n, "graph and labeling sizes differ");
  require(i1 >= 1 && i1 <= n && i2 >= 1 && i2 <= n, "jdt label out of range");
  require(i1 != i2, "jdt_pair needs two distinct labels");
  if (!g.adjacent(sigma.vertex_of(i1), sigma.vertex_of(i2))) return sigma;
  return swap_labels(sigma, i1, i2);
}

Labeling jdt_interval(const Labeling& sigma, const Graph& g, long long x, long long y) {
  int n = sigma.size();
  require(x <= y, "jdt interval needs x <= y");
  require(y - x + 1 <= n, "jdt interval longer than n repeats residues");
  Labeling out = sigma;
  int glider = residue(x, n);
  for (long long k = x + 1; k <= y; ++k) out = jdt_pair(out, g, glider, residue(k, n));
  return out;
}

}  // namespace toggledyn
