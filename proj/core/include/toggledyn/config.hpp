#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toggledyn/graph.hpp"
#include "toggledyn/word.hpp"

namespace toggledyn {

// Everything a CLI run depends on. The text form is one `key=value` per line,
// defaults omitted, keys in a fixed order.
struct RunConfig {
  std::string command;           // census | verify | timeline
  std::string suite;             // verify
  std::string graph = "";        // graph text form; empty means path:n
  std::string op;                // pro, tpro, tpro-pi, tpro-beta, bro, cyc-bro, phi, or empty with word
  std::string word;
  std::string pi;                // comma-separated bijection for tpro-pi
  std::string b;                 // comma-separated subset, or "R" for the canonical set
  std::optional<int> n;
  std::optional<int> n_min;
  std::optional<int> d;
  std::string seed_labeling;     // timeline seed
  std::string seeds = "all";     // verify: "all" or a count
  std::uint64_t rng_seed = 1;
  std::string format = "json";   // json | table | ascii | svg
  int max_n = 9;
  bool force = false;
  unsigned threads = 1;
  bool order_only = false;
  long long sample = 0;          // census: sampled-orbit mode with this many starts

  bool until_period = false;
  long long steps = 0;
  std::string render;            // "", ascii, svg
  bool fence = false;

  std::string to_text() const;
  static RunConfig parse(const std::string& text);
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Graph named by the config (defaults to Path_n).
Graph config_graph(const RunConfig& cfg);
// Normalize a named operator (or explicit word) to an OperatorWord.
OperatorWord config_word(const RunConfig& cfg, int n);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace toggledyn
