#include "toggledyn/stones.hpp"

#include <algorithm>
#include <set>

#include "toggledyn/error.hpp"
#include "toggledyn/residue.hpp"
#include "toggledyn/toggles.hpp"

namespace toggledyn {

const char* to_string(Direction d) { return d == Direction::Left ? "left" : "right"; }

const char* to_string(CollisionKind k) {
  switch (k) {
    case CollisionKind::LeftWall: return "left-wall";
    case CollisionKind::TwoCoins: return "two-coins";
    default: return "right-wall";
  }
}

std::vector<int> Collision::coins() const {
  if (kind == CollisionKind::TwoCoins) return {left_coin, left_coin + 1};
  return {left_coin};
}

std::uint32_t Collision::coin_mask() const {
  std::uint32_t m = 0;
  for (int c : coins()) m |= 1u << c;
  // Wall kinds are kept apart from a two-coins collision on the same coin.
  if (kind == CollisionKind::LeftWall) m |= 1u << 30;
  if (kind == CollisionKind::RightWall) m |= 1u << 31;
  return m;
}

bool collision_before(const Collision& a, const Collision& b) {
  if (a.time != b.time) return a.time < b.time;
  if (a.small_step != b.small_step) return a.small_step < b.small_step;
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.left_coin < b.left_coin;
}

namespace {

// Traffic jam [r, s] containing vertex j, given occupied-vertex flags.
std::pair<int, int> jam_of(const std::vector<bool>& occupied, int j) {
  int r = j, s = j;
  int n = static_cast<int>(occupied.size());
  while (r > 0 && occupied[r - 1]) --r;
  while (s + 1 < n && occupied[s + 1]) ++s;
  return {r, s};
}

std::vector<bool> occupancy(int n, const std::vector<int>& coin_vertices) {
  std::vector<bool> occ(n, false);
  for (int v : coin_vertices) occ[v] = true;
  return occ;
}

}  // namespace

Direction expected_direction(const Labeling& sigma, const std::vector<int>& coin_vertices,
                             int coin_vertex, int stone_position) {
  int n = sigma.size();
  auto [r, s] = jam_of(occupancy(n, coin_vertices), coin_vertex);
  if (r == 0) return Direction::Right;
  if (s == n - 1) return Direction::Left;
  for (int step = 1; step < n; ++step) {
    int v = sigma.vertex_of(residue(stone_position + step, n));
    if (v == r - 1) return Direction::Left;
    if (v == s + 1) return Direction::Right;
  }
  throw std::logic_error("expected_direction: neighbour replicas not found");
}

CoinsView coins_view(const Labeling& sigma, const std::vector<int>& stone_positions) {
  int d = static_cast<int>(stone_positions.size());
  std::vector<std::pair<int, int>> by_vertex;  // (vertex, stone)
  for (int st = 0; st < d; ++st) by_vertex.emplace_back(sigma.vertex_of(stone_positions[st]), st);
  std::sort(by_vertex.begin(), by_vertex.end());
  CoinsView view;
  view.coin_vertex.resize(d);
  view.stone_of_coin.resize(d);
  view.coin_of_stone.resize(d);
  view.direction.resize(d);
  for (int c = 0; c < d; ++c) {
    view.coin_vertex[c] = by_vertex[c].first;
    view.stone_of_coin[c] = by_vertex[c].second;
    view.coin_of_stone[by_vertex[c].second] = c;
  }
  for (int c = 0; c < d; ++c)
    view.direction[c] = expected_direction(sigma, view.coin_vertex, view.coin_vertex[c],
                                           stone_positions[view.stone_of_coin[c]]);
  return view;
}

Timeline::Timeline(const Labeling& seed, int d) : n_(seed.size()), d_(d) {
  require(n_ >= 2, "timelines need n >= 2");
  require(d >= 1 && d <= n_ - 1, "timelines need 1 <= d <= n-1");
  forward_.push_back(seed);
}

int Timeline::toggle_index(long long t, int i) const { return residue(t + d_ - i, n_); }

int Timeline::stone_position(long long t, int s) const { return residue(t + d_ - s, n_); }

OperatorWord Timeline::nu_word(long long t) const {
  std::vector<int> idx;
  for (int i = 1; i <= d_; ++i) idx.push_back(toggle_index(t, i));
  return OperatorWord::toggles(n_, idx);
}

const Labeling& Timeline::at(long long t) const {
  Graph path = Graph::path(n_);
  if (t >= 0) {
    while (static_cast<long long>(forward_.size()) <= t) {
      long long next = static_cast<long long>(forward_.size());
      Labeling x = forward_.back();
      for (int i = 1; i <= d_; ++i) x = toggle(x, path, toggle_index(next, i));
      forward_.push_back(std::move(x));
    }
    return forward_[static_cast<std::size_t>(t)];
  }
  while (static_cast<long long>(backward_.size()) < -t) {
    long long known = -static_cast<long long>(backward_.size());  // sigma_known is available
    Labeling x = known == 0 ? forward_.front() : backward_.back();
    for (int i = d_; i >= 1; --i) x = toggle(x, path, toggle_index(known, i));
    backward_.push_back(std::move(x));
  }
  return backward_[static_cast<std::size_t>(-t - 1)];
}

CoinsView Timeline::coins_at(long long t) const {
  std::vector<int> pos(d_);
  for (int s = 0; s < d_; ++s) pos[s] = stone_position(t, s);
  return coins_view(at(t), pos);
}

std::vector<SmallStep> Timeline::small_steps(long long t) const {
  const int n = n_;
  const int d = d_;
  Graph path = Graph::path(n);
  Labeling sigma = at(t - 1);
  std::vector<int> pos(d);
  for (int s = 0; s < d; ++s) pos[s] = stone_position(t - 1, s);
  CoinsView view = coins_view(sigma, pos);

  std::vector<SmallStep> steps;
  for (int i = 1; i <= d; ++i) {
    SmallStep st;
    st.time = t;
    st.index = i;
    st.stone = i - 1;
    st.from_position = pos[i - 1];
    st.to_position = residue(pos[i - 1] + 1, n);
    st.toggle = toggle_index(t, i);
    st.before = view;

    int p = st.from_position;
    int here = sigma.vertex_of(p);
    int ahead = sigma.vertex_of(st.to_position);
    Labeling next = toggle(sigma, path, p);
    st.carried = !(next == sigma);
    st.replica_passed = ahead;
    int coin = view.coin_of_stone[st.stone];
    if (st.carried) {
      st.replica_carried = here;
    } else {
      st.moved_coin = coin;
      st.coin_from = here;
      st.coin_to = ahead;
    }

    pos[i - 1] = st.to_position;
    sigma = next;
    view = coins_view(sigma, pos);
    st.after = view;

    std::vector<Collision> found;
    auto add = [&](CollisionKind kind, int left_coin, bool flicker) {
      Collision c;
      c.kind = kind;
      c.time = t;
      c.small_step = i;
      c.left_coin = left_coin;
      c.vertex = view.coin_vertex[left_coin];
      c.flicker = flicker;
      for (const auto& e : found)
        if (e.kind == c.kind && e.left_coin == c.left_coin) return;
      found.push_back(c);
    };

    auto occ_after = occupancy(n, view.coin_vertex);
    bool moved_into_wall_jam = false;
    if (st.moved_coin) {
      int c = *st.moved_coin;
      auto [r, s] = jam_of(occ_after, st.coin_to);
      if (r == 0 || s == n - 1) {
        moved_into_wall_jam = true;
        if (st.coin_to == 0) {
          add(CollisionKind::LeftWall, c, false);
        } else if (st.coin_to == n - 1) {
          add(CollisionKind::RightWall, c, false);
        } else if (st.coin_to < st.coin_from) {
          add(CollisionKind::TwoCoins, c - 1, false);
        } else {
          add(CollisionKind::TwoCoins, c, false);
        }
      }
    }
    (void)moved_into_wall_jam;

    for (int k = 0; k + 1 < d; ++k) {
      auto butting = [&](const CoinsView& v) {
        return v.coin_vertex[k] + 1 == v.coin_vertex[k + 1] && v.direction[k] == Direction::Right &&
               v.direction[k + 1] == Direction::Left;
      };
      if (!butting(st.before) && butting(view)) add(CollisionKind::TwoCoins, k, false);
    }

    if (st.carried) {
      int j = view.coin_vertex[coin];
      auto [r, s] = jam_of(occ_after, j);
      if (r == 0 && j < s && ahead == s + 1) {
        if (coin == 0)
          add(CollisionKind::LeftWall, 0, true);
        else
          add(CollisionKind::TwoCoins, coin - 1, true);
      }
      if (s == n - 1 && j > r && ahead == r - 1) {
        if (coin == d - 1)
          add(CollisionKind::RightWall, d - 1, true);
        else
          add(CollisionKind::TwoCoins, coin, true);
      }
    }

    std::sort(found.begin(), found.end(), collision_before);
    st.collisions = std::move(found);
    steps.push_back(std::move(st));
  }
  return steps;
}

long long Timeline::default_cap() const {
  return 4LL * n_ * n_ * d_ * (n_ - d_);
}

long long Timeline::period(long long cap_steps) const {
  if (cap_steps < 0) cap_steps = default_cap();
  for (long long p = n_; p <= cap_steps; p += n_)
    if (at(p) == at(0)) return p;
  throw BoundExceeded("timeline did not recur within " + std::to_string(cap_steps) + " steps");
}

std::vector<int> Timeline::stand_at(long long t) const {
  const Labeling& s = at(t);
  std::vector<int> seq;
  for (int k = d_; k >= 1; --k) seq.push_back(s.vertex_of(residue(t + k, n_)));
  return standardize(seq);
}

std::vector<int> Timeline::standbar_at(long long t) const {
  require(t >= 0 && t <= n_ - d_, "standbar is defined literally for 0 <= t <= n-d");
  const Labeling& s = at(t);
  std::vector<int> seq;
  for (long long a = 1; a <= t; ++a) seq.push_back(s.vertex_of(static_cast<int>(a)));
  for (long long a = t + d_ + 1; a <= n_; ++a) seq.push_back(s.vertex_of(static_cast<int>(a)));
  return standardize(seq);
}

}  // namespace toggledyn
