#include "toggledyn/operators.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "toggledyn/error.hpp"
#include "toggledyn/residue.hpp"
#include "toggledyn/toggles.hpp"

namespace toggledyn {

AcyclicOrientation::AcyclicOrientation(int n, std::set<int> ccw) : n_(n), ccw_(std::move(ccw)) {
  require(n >= 2, "orientation needs n >= 2");
  for (int i : ccw_) require(i >= 1 && i <= n, "edge index out of range 1..n");
  require(!ccw_.empty() && static_cast<int>(ccw_.size()) < n,
          "orientation of the cycle must have edges in both directions");
}

void validate_bijection(const std::vector<int>& pi) {
  int n = static_cast<int>(pi.size());
  require(n >= 1, "empty bijection");
  std::vector<bool> seen(n, false);
  for (int a : pi) {
    require(a >= 1 && a <= n, "bijection value out of range");
    require(!seen[a - 1], "bijection values must be distinct");
    seen[a - 1] = true;
  }
}

std::vector<int> inverse_permutation(const std::vector<int>& pi) {
  validate_bijection(pi);
  std::vector<int> inv(pi.size());
  for (std::size_t k = 0; k < pi.size(); ++k) inv[pi[k] - 1] = static_cast<int>(k) + 1;
  return inv;
}

int cyclic_descents(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  int count = 0;
  for (int i = 0; i < n; ++i)
    if (p[i] > p[(i + 1) % n]) ++count;
  return count;
}

AcyclicOrientation AcyclicOrientation::from_pi(const std::vector<int>& pi) {
  auto inv = inverse_permutation(pi);
  int n = static_cast<int>(pi.size());
  std::set<int> ccw;
  for (int i = 1; i <= n; ++i)
    if (inv[i - 1] > inv[i % n]) ccw.insert(i);
  return AcyclicOrientation(n, std::move(ccw));
}

AcyclicOrientation AcyclicOrientation::from_sources(int n, const std::vector<int>& sources) {
  std::set<int> s;
  for (int x : sources) s.insert(residue(x, n));
  require(!s.empty(), "need at least one source");
  std::set<int> ccw;
  for (int x : s) {
    require(!s.count(residue(x + 1, n)), "sources must be pairwise nonadjacent");
    ccw.insert(residue(x - 1, n));
  }
  return AcyclicOrientation(n, std::move(ccw));
}

AcyclicOrientation AcyclicOrientation::source_d_sink_n(int n, int d) {
  require(d >= 1 && d <= n - 1, "need 1 <= d <= n-1");
  std::set<int> ccw{n};
  for (int i = 1; i < d; ++i) ccw.insert(i);
  return AcyclicOrientation(n, std::move(ccw));
}

std::pair<int, int> AcyclicOrientation::arrow(int edge) const {
  int a = residue(edge, n_);
  int b = residue(edge + 1, n_);
  return is_ccw(a) ? std::make_pair(b, a) : std::make_pair(a, b);
}

std::vector<std::pair<int, int>> AcyclicOrientation::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i) out.push_back(arrow(i));
  return out;
}

std::vector<int> AcyclicOrientation::sources() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (!is_ccw(i) && is_ccw(residue(i - 1, n_))) out.push_back(i);
  return out;
}

std::vector<int> AcyclicOrientation::sinks() const {
  std::vector<int> out;
  for (int i = 1; i <= n_; ++i)
    if (is_ccw(i) && !is_ccw(residue(i - 1, n_))) out.push_back(i);
  return out;
}

AcyclicOrientation AcyclicOrientation::flip_source(int i) const {
  i = residue(i, n_);
  auto src = sources();
  require(std::find(src.begin(), src.end(), i) != src.end(), "flip needs a source");
  std::set<int> ccw = ccw_;
  for (int e : {residue(i - 1, n_), i}) {
    if (ccw.count(e))
      ccw.erase(e);
    else
      ccw.insert(e);
  }
  return AcyclicOrientation(n_, std::move(ccw));
}

std::vector<int> AcyclicOrientation::linear_extension() const {
  std::vector<int> indeg(n_ + 1, 0);
  std::vector<std::vector<int>> out(n_ + 1);
  for (auto [a, b] : arrows()) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= n_; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> pi;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    pi.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  require(static_cast<int>(pi.size()) == n_, "orientation has a directed cycle");
  return pi;
}

OperatorWord promotion_word(int n) {
  require(n >= 2, "promotion needs n >= 2");
  std::vector<int> idx(n - 1);
  std::iota(idx.begin(), idx.end(), 1);
  return OperatorWord::toggles(n, idx);
}

OperatorWord toric_word(int n) {
  require(n >= 2, "toric promotion needs n >= 2");
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 1);
  return OperatorWord::toggles(n, idx);
}

OperatorWord permutoric_word(const std::vector<int>& pi) {
  validate_bijection(pi);
  return OperatorWord::toggles(static_cast<int>(pi.size()), pi);
}

OperatorWord permutoric_word(const AcyclicOrientation& beta) {
  return permutoric_word(beta.linear_extension());
}

std::vector<std::pair<int, int>> arcs_of(int n, const std::set<int>& b) {
  std::set<int> norm;
  for (int x : b) norm.insert(residue(x, n));
  require(static_cast<int>(norm.size()) < n, "B must be a proper subset of Z/nZ");
  std::vector<std::pair<int, int>> arcs;
  for (int a : norm) {
    if (norm.count(residue(a - 1, n))) continue;
    int end = a;
    while (norm.count(residue(end + 1, n))) ++end;
    arcs.emplace_back(a, end);
  }
  return arcs;
}

OperatorWord broken_word(int n, const std::set<int>& b) {
  std::vector<int> idx;
  for (auto [a, e] : arcs_of(n, b))
    for (int i = a; i <= e; ++i) idx.push_back(i);
  return OperatorWord::toggles(n, idx);
}

OperatorWord cyc_broken_word(int n, const std::set<int>& b) {
  return broken_word(n, b).then(OperatorWord(n, {Generator::cyc()}));
}

Labeling glob_three_step(const Labeling& sigma, const Graph& g, const std::set<int>& b) {
  int n = sigma.size();
  auto arcs = arcs_of(n, b);
  Labeling glided = sigma;
  std::vector<int> glob_vertex;
  std::vector<bool> in_interval(n + 1, false);
  for (auto [x, last] : arcs) {
    int y = last + 1;
    glided = jdt_interval(glided, g, x, y);
    glob_vertex.push_back(glided.vertex_of(residue(x, n)));
    for (int k = x; k <= y; ++k) in_interval[residue(k, n)] = true;
  }
  std::vector<int> img = glided.image();
  for (int v = 0; v < n; ++v)
    if (!in_interval[img[v]]) img[v] = residue(img[v] + 1, n);
  for (std::size_t i = 0; i < arcs.size(); ++i) img[glob_vertex[i]] = residue(arcs[i].second + 2, n);
  return Labeling(std::move(img));
}

long long IndependentSet::at(long long i) const {
  long long d = static_cast<long long>(s.size());
  long long k = i - 1;
  long long q = k >= 0 ? k / d : -((-k + d - 1) / d);
  long long r = k - q * d;
  return s[static_cast<std::size_t>(r)] + q * n;
}

std::set<int> IndependentSet::minus_one() const {
  std::set<int> out;
  for (int x : s) out.insert(residue(x - 1, n));
  return out;
}

std::set<int> IndependentSet::complement_of_minus_one() const {
  auto m = minus_one();
  std::set<int> out;
  for (int i = 1; i <= n; ++i)
    if (!m.count(i)) out.insert(i);
  return out;
}

void IndependentSet::validate() const {
  require(n >= 2 && !s.empty(), "independent set needs n >= 2 and d >= 1");
  require(std::is_sorted(s.begin(), s.end()), "independent set must be sorted");
  for (int x : s) require(x >= 1 && x <= n, "independent set element out of range");
  int d = static_cast<int>(s.size());
  for (int i = 1; i <= d; ++i)
    require(at(i + 1) >= at(i) + 2, "independent set elements must be pairwise nonadjacent");
}

Labeling glob_two_step(const Labeling& sigma, const Graph& g, const IndependentSet& s) {
  s.validate();
  int n = sigma.size();
  require(s.n == n, "independent set modulus differs from labeling size");
  int d = static_cast<int>(s.s.size());
  Labeling glided = sigma;
  std::vector<int> glob_vertex;
  for (int i = 1; i <= d; ++i) {
    glided = jdt_interval(glided, g, s.at(i), s.at(i + 1) - 1);
    glob_vertex.push_back(glided.vertex_of(residue(s.at(i), n)));
  }
  std::vector<int> img = glided.image();
  for (int i = 1; i <= d; ++i) img[glob_vertex[i - 1]] = residue(s.at(i + 1), n);
  return Labeling(std::move(img));
}

long long rounded_nearest(const Rational& x) {
  // [[x]] = ceil(x - 1/2): exact halves go down.
  Rational y = x - Rational(1, 2);
  long long num = y.numerator();
  long long den = y.denominator();
  long long fl = num >= 0 ? num / den : -((-num + den - 1) / den);
  return fl * den == num ? fl : fl + 1;
}

IndependentSet canonical_S(int n, int d) {
  require(d >= 1 && 2 * d <= n, "canonical S needs 1 <= d <= n/2");
  IndependentSet out{n, {}};
  for (int i = 1; i <= d; ++i)
    out.s.push_back(residue(rounded_nearest(Rational(static_cast<long long>(i) * n, d)), n));
  std::sort(out.s.begin(), out.s.end());
  out.validate();
  return out;
}

OperatorWord phi_word(int n, int d) {
  require(d >= 1 && d <= n - 1, "Phi needs 1 <= d <= n-1");
  std::vector<Generator> g;
  for (int i = 1; i <= n - d; ++i)
    for (int j = i + d - 1; j >= i; --j) g.push_back(Generator::toggle(j));
  for (int k = 0; k < d; ++k) g.push_back(Generator::cyc());
  return OperatorWord(n, std::move(g));
}

OperatorWord tpro_beta_power_d_word(int n, int d) {
  require(d >= 1 && d <= n - 1, "need 1 <= d <= n-1");
  std::vector<int> idx;
  for (int i = 1; i <= n; ++i)
    for (int j = i + d - 1; j >= i; --j) idx.push_back(j);
  return OperatorWord::toggles(n, idx);
}

OperatorWord inverse_cyc_bro_power_word(int n, int d) {
  require(d >= 1 && d <= n - 1, "need 1 <= d <= n-1");
  std::set<int> first_d;
  for (int i = 1; i <= d; ++i) first_d.insert(i);
  OperatorWord factor = broken_word(n, first_d).inverse().then(OperatorWord(n, {Generator::cyc_inverse()}));
  return factor.power(n);
}

TproBroDecomposition tpro_bro_decomposition(const IndependentSet& s, long long gamma) {
  s.validate();
  require(gamma >= 0, "gamma must be nonnegative");
  int n = s.n;
  int d = static_cast<int>(s.s.size());
  TproBroDecomposition out;
  out.gamma = gamma;
  out.q = gamma * n / (n - d);
  out.r = gamma * n - out.q * (n - d);
  out.r_set = s.complement_of_minus_one();
  auto sm1 = s.minus_one();
  for (int j = 1; j <= n; ++j) {
    long long count = out.q == 0 ? 0 : CyclicInterval(j - out.q, j - 1, n).count_in(sm1);
    if (out.q - gamma + 1 <= count) out.j.insert(j);
  }
  if (static_cast<int>(out.j.size()) < n) {
    OperatorWord step = cyc_broken_word(n, out.r_set);
    OperatorWord back(n, std::vector<Generator>(static_cast<std::size_t>(out.q), Generator::cyc_inverse()));
    out.word = step.power(out.q).then(broken_word(n, out.j)).then(back);
  }
  return out;
}

bool verify_suffix_lemma(const OperatorWord& y, const AcyclicOrientation& beta, int k) {
  require(y.toggles_only(), "suffix lemma applies to toggle-only words");
  require(y.modulus() == beta.modulus(), "word and orientation moduli differ");
  for (int c : y.letter_counts())
    if (c != k) return false;
  int n = y.modulus();
  auto arrows = beta.arrows();
  std::vector<int> counts(n + 1, 0);
  auto check = [&] {
    for (auto [a, b] : arrows) {
      int diff = counts[a] - counts[b];
      if (diff != 0 && diff != 1) return false;
    }
    return true;
  };
  // A suffix in composition order is a prefix in application order.
  if (!check()) return false;
  for (const auto& g : y.gens()) {
    ++counts[g.index];
    if (!check()) return false;
  }
  return true;
}

}  // namespace toggledyn
