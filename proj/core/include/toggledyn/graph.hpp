#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace toggledyn {

enum class GraphKind { Path, Cycle, General };

// Simple undirected graph on vertices 0..n-1 (vertex j is v_{j+1} in text forms).
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges, GraphKind kind = GraphKind::General);

  static Graph path(int n);
  static Graph cycle(int n);

  // Accepts "path:N", "cycle:N" or the edge-list form "n; a-b,c-d" with 1-based vertices.
  static Graph parse(std::string_view text);
  std::string to_text() const;

  int size() const { return n_; }
  GraphKind kind() const { return kind_; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  std::uint32_t neighbors(int v) const { return adj_[v]; }
  const std::vector<std::uint32_t>& adjacency() const { return adj_; }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  bool connected() const;
  // component[v] = index of v's connected component, numbered by smallest vertex.
  std::vector<int> components() const;
  int component_size_of(int v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  GraphKind kind_ = GraphKind::General;
  std::vector<std::uint32_t> adj_;
};

// All labeled trees on n vertices (Pruefer codes), n >= 1.
std::vector<Graph> labeled_trees(int n);
// One representative per isomorphism class of unlabeled trees on n vertices.
std::vector<Graph> unlabeled_trees(int n);
// Canonical string of a rooted-free tree, equal for isomorphic trees.
std::string tree_canonical_form(const Graph& tree);
// Disjoint union of a and b, with b's vertices shifted by a.size().
Graph disjoint_union(const Graph& a, const Graph& b);
// Same graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);
// Random connected graph: a random labeled tree plus each remaining edge with probability p.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);

}  // namespace toggledyn
