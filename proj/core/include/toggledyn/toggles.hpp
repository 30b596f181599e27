#pragma once

#include "toggledyn/graph.hpp"
#include "toggledyn/labeling.hpp"

namespace toggledyn {

// tau_i: swap labels i and i+1 (i+1 wraps to 1) when their vertices are not adjacent.
Labeling toggle(const Labeling& sigma, const Graph& g, int i);

Labeling cyc(const Labeling& sigma);
Labeling cyc_pow(const Labeling& sigma, long long k);

// Swap labels i1 and i2 when their vertices ARE adjacent.
Labeling jdt_pair(const Labeling& sigma, const Graph& g, int i1, int i2);

// Glide label x through x+1, ..., y (all mod n). x == y is the identity.
Labeling jdt_interval(const Labeling& sigma, const Graph& g, long long x, long long y);

}  // namespace toggledyn
