#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toggledyn/sieving.hpp"
#include "toggledyn/stones.hpp"

namespace toggledyn {

struct FenceEdge {
  int lower = 0;
  int upper = 0;
  int coin = 0;    // shared coin used for the energy
  int energy = 0;
};

struct Diamond {
  int bottom, left, right, top;
};

struct HalfDiamond {
  int bottom, middle, top;
};

// Hasse diagram of collisions over the time window [t_begin+1, t_end].
class HasseFence {
 public:
  HasseFence(const Timeline& timeline, long long t_begin, long long t_end);

  int n() const { return n_; }
  int d() const { return d_; }
  long long t_begin() const { return t_begin_; }
  long long t_end() const { return t_end_; }
  // Smallest P = 0 (mod n) with sigma_P = sigma_0.
  long long state_period() const { return state_period_; }
  const std::vector<Collision>& nodes() const { return nodes_; }
  const std::vector<FenceEdge>& edges() const { return edges_; }
  // Next collision with the same coin set, when inside the window.
  const std::vector<std::optional<int>>& phi() const { return phi_; }
  std::optional<int> edge_between(int lower, int upper) const;
  std::vector<int> upper_covers(int node) const;
  std::vector<int> lower_covers(int node) const;

  std::vector<Diamond> diamonds() const;
  std::vector<HalfDiamond> half_diamonds() const;

  // Position of coin c after global step g (g relative to the window start; g = 0 is t_begin).
  int coin_vertex_after(long long global_step, int coin) const;

 private:
  int energy(int lower, int upper, int coin) const;
  int n_;
  int d_;
  long long t_begin_;
  long long t_end_;
  long long state_period_;
  std::vector<Collision> nodes_;
  std::vector<FenceEdge> edges_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<std::optional<int>> phi_;
  std::vector<std::vector<int>> history_;  // history_[g][coin]
};

struct Transversal {
  std::vector<int> nodes;  // kappa_0..kappa_d
  Composition energies;
};

// Transversal starting at the given left-wall node, if it completes in the window.
std::optional<Transversal> transversal_from(const HasseFence& fence, int left_wall_node);
std::optional<Transversal> first_transversal(const HasseFence& fence);
std::optional<Transversal> phi_of(const HasseFence& fence, const Transversal& tr);

struct FenceLawReport {
  std::size_t diamonds = 0;
  std::size_t half_diamonds = 0;
  std::size_t diamond_violations = 0;
  std::size_t half_diamond_violations = 0;
  std::size_t timing_violations = 0;
  std::size_t rot_violations = 0;          // E(phi(tr)) != Rot(E(tr))
  std::size_t transversals = 0;
  std::size_t regularity_violations = 0;   // covers that fit no diamond or half-diamond
  bool period_matches_rot_orbit = false;
  bool ok() const;
};

FenceLawReport check_fence_laws(const HasseFence& fence);

// Fence covering a few periods of the timeline, extended until transversals are available.
HasseFence build_fence(const Timeline& timeline, long long periods = 3);

struct OmegaResult {
  Composition energies;      // energy composition of the first transversal
  Composition canonical;     // lexicographically least rotation
  int orbit_size = 0;        // Rot orbit size
  std::vector<int> stand;
  std::vector<int> standbar;
  long long period = 0;      // timeline period
};

OmegaResult omega(const Labeling& sigma, int d);

}  // namespace toggledyn
