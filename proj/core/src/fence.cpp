#include "toggledyn/fence.hpp"

#include <algorithm>
#include <set>

#include "toggledyn/error.hpp"

namespace toggledyn {

namespace {

bool uses_coin(const Collision& k, int coin) {
  auto cs = k.coins();
  return std::find(cs.begin(), cs.end(), coin) != cs.end();
}

}  // namespace

HasseFence::HasseFence(const Timeline& timeline, long long t_begin, long long t_end)
    : n_(timeline.n()), d_(timeline.d()), t_begin_(t_begin), t_end_(t_end) {
  require(t_end > t_begin, "fence window must be nonempty");
  state_period_ = timeline.period();
  history_.push_back(timeline.coins_at(t_begin).coin_vertex);
  for (long long t = t_begin + 1; t <= t_end; ++t) {
    for (auto& st : timeline.small_steps(t)) {
      history_.push_back(st.after.coin_vertex);
      for (auto& c : st.collisions) nodes_.push_back(c);
    }
  }
  std::stable_sort(nodes_.begin(), nodes_.end(), collision_before);

  const int m = static_cast<int>(nodes_.size());
  up_.assign(m, {});
  down_.assign(m, {});
  phi_.assign(m, std::nullopt);

  // Candidate arrows: next collision of each coin.
  std::vector<std::vector<std::pair<int, int>>> next(m);  // (target, coin)
  for (int a = 0; a < m; ++a) {
    for (int c : nodes_[a].coins()) {
      for (int b = a + 1; b < m; ++b) {
        if (uses_coin(nodes_[b], c)) {
          bool dup = false;
          for (auto& e : next[a]) dup = dup || e.first == b;
          if (!dup) next[a].emplace_back(b, c);
          break;
        }
      }
    }
    for (int b = a + 1; b < m; ++b) {
      if (nodes_[b].coin_mask() == nodes_[a].coin_mask()) {
        phi_[a] = b;
        break;
      }
    }
  }

  // Transitive reduction: drop an arrow a->b when b is reachable another way.
  auto reachable_avoiding = [&](int a, int b) {
    std::vector<int> stack;
    std::vector<bool> seen(m, false);
    for (auto& e : next[a])
      if (e.first != b) stack.push_back(e.first);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      if (x == b) return true;
      if (x > b || seen[x]) continue;
      seen[x] = true;
      for (auto& e : next[x]) stack.push_back(e.first);
    }
    return false;
  };
  for (int a = 0; a < m; ++a) {
    for (auto& [b, c] : next[a]) {
      if (reachable_avoiding(a, b)) continue;
      FenceEdge e{a, b, c, energy(a, b, c)};
      up_[a].push_back(static_cast<int>(edges_.size()));
      down_[b].push_back(static_cast<int>(edges_.size()));
      edges_.push_back(e);
    }
  }
}

int HasseFence::coin_vertex_after(long long global_step, int coin) const {
  return history_.at(static_cast<std::size_t>(global_step))[coin];
}

int HasseFence::energy(int lower, int upper, int coin) const {
  long long base = t_begin_ * d_;
  long long ga = nodes_[lower].global_step(d_) - base;
  long long gb = nodes_[upper].global_step(d_) - base;
  std::set<int> seen;
  for (long long g = ga; g <= gb; ++g) seen.insert(coin_vertex_after(g, coin));
  return static_cast<int>(seen.size());
}

std::optional<int> HasseFence::edge_between(int lower, int upper) const {
  for (int e : up_[lower])
    if (edges_[e].upper == upper) return e;
  return std::nullopt;
}

std::vector<int> HasseFence::upper_covers(int node) const {
  std::vector<int> out;
  for (int e : up_[node]) out.push_back(edges_[e].upper);
  return out;
}

std::vector<int> HasseFence::lower_covers(int node) const {
  std::vector<int> out;
  for (int e : down_[node]) out.push_back(edges_[e].lower);
  return out;
}

std::vector<Diamond> HasseFence::diamonds() const {
  std::vector<Diamond> out;
  for (int b = 0; b < static_cast<int>(nodes_.size()); ++b) {
    if (nodes_[b].kind != CollisionKind::TwoCoins || !phi_[b]) continue;
    int top = *phi_[b];
    std::optional<int> left, right;
    for (int e : up_[b]) {
      if (edges_[e].coin == nodes_[b].left_coin) left = edges_[e].upper;
      if (edges_[e].coin == nodes_[b].left_coin + 1) right = edges_[e].upper;
    }
    if (!left || !right || *left == *right) continue;
    if (edge_between(*left, top) && edge_between(*right, top))
      out.push_back({b, *left, *right, top});
  }
  return out;
}

std::vector<HalfDiamond> HasseFence::half_diamonds() const {
  std::vector<HalfDiamond> out;
  for (int b = 0; b < static_cast<int>(nodes_.size()); ++b) {
    if (nodes_[b].kind == CollisionKind::TwoCoins || !phi_[b]) continue;
    int top = *phi_[b];
    for (int mid : upper_covers(b))
      if (edge_between(mid, top)) out.push_back({b, mid, top});
  }
  return out;
}

std::optional<Transversal> transversal_from(const HasseFence& fence, int left_wall_node) {
  const auto& nodes = fence.nodes();
  const int d = fence.d();
  if (nodes.at(left_wall_node).kind != CollisionKind::LeftWall) return std::nullopt;
  Transversal tr;
  tr.nodes.push_back(left_wall_node);
  for (int i = 1; i <= d; ++i) {
    int prev = tr.nodes.back();
    int coin = i - 1;
    std::optional<int> found;
    for (int b = prev + 1; b < static_cast<int>(nodes.size()); ++b) {
      if (uses_coin(nodes[b], coin)) {
        found = b;
        break;
      }
    }
    if (!found) return std::nullopt;
    const Collision& k = nodes[*found];
    bool ok = i < d ? (k.kind == CollisionKind::TwoCoins && k.left_coin == coin)
                    : (k.kind == CollisionKind::RightWall);
    if (!ok) return std::nullopt;
    auto e = fence.edge_between(prev, *found);
    if (!e) return std::nullopt;
    tr.nodes.push_back(*found);
    tr.energies.parts.push_back(fence.edges()[*e].energy);
  }
  return tr;
}

std::optional<Transversal> first_transversal(const HasseFence& fence) {
  for (int a = 0; a < static_cast<int>(fence.nodes().size()); ++a) {
    if (fence.nodes()[a].kind != CollisionKind::LeftWall) continue;
    if (auto tr = transversal_from(fence, a)) return tr;
  }
  return std::nullopt;
}

std::optional<Transversal> phi_of(const HasseFence& fence, const Transversal& tr) {
  Transversal out;
  for (int k : tr.nodes) {
    auto p = fence.phi()[k];
    if (!p) return std::nullopt;
    out.nodes.push_back(*p);
  }
  for (std::size_t i = 1; i < out.nodes.size(); ++i) {
    auto e = fence.edge_between(out.nodes[i - 1], out.nodes[i]);
    if (!e) return std::nullopt;
    out.energies.parts.push_back(fence.edges()[*e].energy);
  }
  return out;
}

bool FenceLawReport::ok() const {
  return diamond_violations == 0 && half_diamond_violations == 0 && timing_violations == 0 &&
         rot_violations == 0 && regularity_violations == 0 && transversals > 0 &&
         period_matches_rot_orbit;
}

FenceLawReport check_fence_laws(const HasseFence& fence) {
  FenceLawReport rep;
  const auto& nodes = fence.nodes();
  const auto& edges = fence.edges();
  const int n = fence.n();
  const int d = fence.d();
  auto energy_of = [&](int a, int b) { return edges[*fence.edge_between(a, b)].energy; };

  std::vector<int> covered(edges.size(), 0);
  auto mark = [&](int a, int b) { covered[*fence.edge_between(a, b)] = 1; };

  for (const auto& dm : fence.diamonds()) {
    ++rep.diamonds;
    if (energy_of(dm.bottom, dm.left) != energy_of(dm.right, dm.top) ||
        energy_of(dm.bottom, dm.right) != energy_of(dm.left, dm.top))
      ++rep.diamond_violations;
    mark(dm.bottom, dm.left);
    mark(dm.bottom, dm.right);
    mark(dm.left, dm.top);
    mark(dm.right, dm.top);
  }
  for (const auto& h : fence.half_diamonds()) {
    ++rep.half_diamonds;
    int m = energy_of(h.bottom, h.middle);
    if (m != energy_of(h.middle, h.top)) ++rep.half_diamond_violations;
    if (nodes[h.top].time - nodes[h.bottom].time != static_cast<long long>(m) * (n - d))
      ++rep.timing_violations;
    mark(h.bottom, h.middle);
    mark(h.middle, h.top);
  }

  // Regularity is judged away from the window edges, where every shape is complete.
  long long p = fence.state_period();
  long long lo = fence.t_begin() + p;
  long long hi = fence.t_end() - p;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    long long t = nodes[edges[e].lower].time;
    if (t > lo && t <= hi && !covered[e]) ++rep.regularity_violations;
  }
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    long long t = nodes[a].time;
    if (t > lo && t <= hi && nodes[a].kind == CollisionKind::TwoCoins && !fence.phi()[a])
      ++rep.regularity_violations;
  }

  std::optional<Transversal> first;
  for (int a = 0; a < static_cast<int>(nodes.size()); ++a) {
    if (nodes[a].kind != CollisionKind::LeftWall) continue;
    auto tr = transversal_from(fence, a);
    if (!tr) continue;
    ++rep.transversals;
    if (!first) first = tr;
    if (tr->energies.total() != n) ++rep.rot_violations;
    if (auto ph = phi_of(fence, *tr); ph && ph->energies.parts.size() == tr->energies.parts.size())
      if (!(ph->energies == rot(tr->energies))) ++rep.rot_violations;
  }
  if (first) {
    long long orbit = rot_orbit_size(first->energies);
    rep.period_matches_rot_orbit = orbit * n * (n - d) / d == p;
  }
  return rep;
}

HasseFence build_fence(const Timeline& timeline, long long periods) {
  require(periods >= 1, "fence needs at least one period");
  long long p = timeline.period();
  for (long long k = periods;; ++k) {
    HasseFence fence(timeline, 0, k * p);
    if (first_transversal(fence) || k >= periods + 4) return fence;
  }
}

OmegaResult omega(const Labeling& sigma, int d) {
  Timeline tl(sigma, d);
  HasseFence fence = build_fence(tl, 2);
  auto tr = first_transversal(fence);
  if (!tr) throw BoundExceeded("no transversal found in the simulated window");
  OmegaResult r;
  r.energies = tr->energies;
  r.canonical = canonical_rotation(tr->energies);
  r.orbit_size = rot_orbit_size(tr->energies);
  r.stand = tl.stand();
  r.standbar = tl.standbar();
  r.period = fence.state_period();
  return r;
}

}  // namespace toggledyn
