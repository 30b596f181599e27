#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toggledyn/labeling.hpp"
#include "toggledyn/word.hpp"

namespace toggledyn {

enum class Direction : std::uint8_t { Left, Right };
enum class CollisionKind : std::uint8_t { LeftWall, TwoCoins, RightWall };

const char* to_string(Direction d);
const char* to_string(CollisionKind k);

// Path vertices are 0-based (vertex j is v_{j+1}); coin names and stone indices are
// 0-based (coin c is c_{c+1}, stone s is s_{s+1}).
struct Collision {
  CollisionKind kind = CollisionKind::TwoCoins;
  long long time = 0;     // the collision happens between times time-1 and time
  int small_step = 1;     // 1..d
  int left_coin = 0;      // two-coins: coins left_coin and left_coin+1; wall: the coin
  int vertex = 0;         // vertex of left_coin when the collision happens
  bool flicker = false;   // produced by the flicker-of-confusion rule

  long long global_step(int d) const { return (time - 1) * d + small_step; }
  std::vector<int> coins() const;
  // Coin set as a bitmask, used to match a collision with its next occurrence.
  std::uint32_t coin_mask() const;
  friend bool operator==(const Collision&, const Collision&) = default;
};

// Deterministic order inside one small step: left-wall, two-coins by i, right-wall.
bool collision_before(const Collision& a, const Collision& b);

struct CoinsView {
  std::vector<int> coin_vertex;        // by coin name, increasing
  std::vector<int> stone_of_coin;      // stone with the coin's color
  std::vector<int> coin_of_stone;
  std::vector<Direction> direction;    // by coin name
};

struct SmallStep {
  long long time = 0;   // step from time-1 to time
  int index = 1;        // 1..d; stone index-1 moves
  int stone = 0;
  int from_position = 0;  // cycle positions in 1..n
  int to_position = 0;
  int toggle = 0;         // tau index applied
  bool carried = false;   // labels swapped: the stone carries its replica
  int replica_carried = -1;  // path vertex whose replica moves with the stone; -1 if none
  int replica_passed = -1;   // path vertex whose replica the stone slides through or under
  std::optional<int> moved_coin;  // coin name
  int coin_from = -1;
  int coin_to = -1;
  CoinsView before;
  CoinsView after;
  std::vector<Collision> collisions;
};

// Bi-infinite timeline sigma_t = nu_t(sigma_{t-1}) on Path_n, memoized in both directions.
// Not internally synchronized. References returned by at() stay valid.
class Timeline {
 public:
  Timeline(const Labeling& seed, int d);

  int n() const { return n_; }
  int d() const { return d_; }
  const Labeling& seed() const { return at(0); }
  const Labeling& at(long long t) const;

  // Toggle index of the i-th small step (1..d) from time t-1 to t.
  int toggle_index(long long t, int i) const;
  // Cycle position of stone s (0-based) at time t.
  int stone_position(long long t, int s) const;
  // nu_t as an operator word.
  OperatorWord nu_word(long long t) const;

  CoinsView coins_at(long long t) const;
  std::vector<SmallStep> small_steps(long long t) const;

  // Smallest P > 0 with P = 0 (mod n) and sigma_P = sigma_0; bounded by cap_steps.
  long long period(long long cap_steps = -1) const;
  long long default_cap() const;

  // Standardization of sigma_t^-1(t+d), ..., sigma_t^-1(t+1).
  std::vector<int> stand_at(long long t) const;
  // Standardization of sigma_t^-1(1..t), sigma_t^-1(t+d+1..n); literal for 0 <= t <= n-d.
  std::vector<int> standbar_at(long long t) const;
  std::vector<int> stand() const { return stand_at(0); }
  std::vector<int> standbar() const { return standbar_at(0); }

 private:
  int n_;
  int d_;
  mutable std::deque<Labeling> forward_;   // t = 0, 1, 2, ...
  mutable std::deque<Labeling> backward_;  // t = -1, -2, ...
};

CoinsView coins_view(const Labeling& sigma, const std::vector<int>& stone_positions);
Direction expected_direction(const Labeling& sigma, const std::vector<int>& coin_vertices,
                             int coin_vertex, int stone_position);

}  // namespace toggledyn
