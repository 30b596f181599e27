#include "toggledyn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "toggledyn/error.hpp"

namespace toggledyn {

namespace {

int parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && p == s.data() + s.size() && !s.empty(),
          "expected an integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges, GraphKind kind)
    : n_(n), kind_(kind), adj_(n, 0) {
  require(n >= 1 && n <= kMaxVertices, "graph size must be in 1..32");
  for (auto [u, v] : edges) {
    require(u >= 0 && u < n && v >= 0 && v < n, "edge endpoint out of range");
    require(u != v, "self-loops are not allowed");
    adj_[u] |= 1u << v;
    adj_[v] |= 1u << u;
  }
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int j = 0; j + 1 < n; ++j) e.emplace_back(j, j + 1);
  return Graph(n, e, GraphKind::Path);
}

Graph Graph::cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int j = 0; j + 1 < n; ++j) e.emplace_back(j, j + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return Graph(n, e, GraphKind::Cycle);
}

Graph Graph::parse(std::string_view text) {
  if (text.rfind("path:", 0) == 0) return path(parse_int(text.substr(5)));
  if (text.rfind("cycle:", 0) == 0) return cycle(parse_int(text.substr(6)));
  auto semi = text.find(';');
  require(semi != std::string_view::npos, "graph must be path:N, cycle:N or 'n; a-b,...'");
  int n = parse_int(text.substr(0, semi));
  std::vector<std::pair<int, int>> edges;
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    bool blank = std::all_of(tok.begin(), tok.end(), [](char c) { return c == ' '; });
    if (blank) continue;
    auto dash = tok.find('-');
    require(dash != std::string_view::npos, "edge must look like a-b");
    int a = parse_int(tok.substr(0, dash));
    int b = parse_int(tok.substr(dash + 1));
    require(a >= 1 && a <= n && b >= 1 && b <= n, "edge endpoint out of range");
    edges.emplace_back(a - 1, b - 1);
  }
  return Graph(n, edges);
}

std::string Graph::to_text() const {
  std::ostringstream os;
  os << n_ << ";";
  bool first = true;
  for (auto [u, v] : edges()) {
    os << (first ? " " : ",") << u + 1 << "-" << v + 1;
    first = false;
  }
  return os.str();
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (auto m : adj_) total += __builtin_popcount(m);
  return total / 2;
}

std::vector<int> Graph::components() const {
  std::vector<int> comp(n_, -1);
  int next = 0;
  for (int s = 0; s < n_; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n_; ++v)
        if (adjacent(u, v) && comp[v] < 0) {
          comp[v] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  return comp;
}

bool Graph::connected() const {
  auto c = components();
  return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; });
}

int Graph::component_size_of(int v) const {
  auto c = components();
  return static_cast<int>(std::count(c.begin(), c.end(), c[v]));
}

std::vector<Graph> labeled_trees(int n) {
  require(n >= 1, "tree size must be positive");
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};
  std::vector<Graph> out;
  std::vector<int> code(n - 2, 0);
  while (true) {
    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    std::vector<std::pair<int, int>> edges;
    for (int c : code) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, c);
      --degree[leaf];
      --degree[c];
    }
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.emplace_back(u, v);
          break;
        }
      }
    out.emplace_back(n, edges);
    int pos = n - 3;
    while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
  return out;
}

std::string tree_canonical_form(const Graph& tree) {
  int n = tree.size();
  // Canonical string rooted at each center (AHU encoding), minimum over centers.
  std::vector<int> degree(n);
  for (int v = 0; v < n; ++v) degree[v] = __builtin_popcount(tree.neighbors(v));
  std::vector<int> layer;
  std::vector<bool> removed(n, false);
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int u = 0; u < n; ++u)
        if (tree.adjacent(u, v) && !removed[u] && --degree[u] == 1) next.push_back(u);
    }
    layer = next;
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);

  std::function<std::string(int, int)> encode = [&](int v, int parent) {
    std::vector<std::string> kids;
    for (int u = 0; u < n; ++u)
      if (u != parent && tree.adjacent(u, v)) kids.push_back(encode(u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (int c : centers) {
    auto s = encode(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

std::vector<Graph> unlabeled_trees(int n) {
  std::map<std::string, Graph> seen;
  for (auto& t : labeled_trees(n)) seen.emplace(tree_canonical_form(t), t);
  std::vector<Graph> out;
  for (auto& [k, g] : seen) out.push_back(g);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.size(), v + a.size());
  return Graph(a.size() + b.size(), e);
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.size(), e);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> e;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int k = 1; k < n; ++k) {
    std::uniform_int_distribution<int> pick(0, k - 1);
    e.emplace_back(order[pick(rng)], order[k]);
  }
  std::bernoulli_distribution coin(p);
  std::set<std::pair<int, int>> have;
  for (auto [u, v] : e) have.emplace(std::min(u, v), std::max(u, v));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!have.count({u, v}) && coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace toggledyn
