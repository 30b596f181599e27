#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "toggledyn/graph.hpp"
#include "toggledyn/labeling.hpp"

namespace toggledyn {

struct Generator {
  enum class Kind : std::uint8_t { Toggle, Cyc, CycInverse };
  Kind kind = Kind::Toggle;
  int index = 0;  // toggle index in 1..n; unused for cyc

  static Generator toggle(int i) { return {Kind::Toggle, i}; }
  static Generator cyc() { return {Kind::Cyc, 0}; }
  static Generator cyc_inverse() { return {Kind::CycInverse, 0}; }
  Generator inverse() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

// A word over {tau_1..tau_n, cyc, cyc^-1}, stored in application order:
// gens()[0] acts first. Text form lists tokens in the same order.
class OperatorWord {
 public:
  OperatorWord() = default;
  OperatorWord(int n, std::vector<Generator> gens);

  static OperatorWord identity(int n) { return OperatorWord(n, {}); }
  static OperatorWord toggles(int n, const std::vector<int>& indices);
  // Whitespace-separated tokens t<i>, cyc, cyc-.
  static OperatorWord parse(int n, std::string_view text);
  std::string to_text() const;

  int modulus() const { return n_; }
  const std::vector<Generator>& gens() const { return gens_; }
  std::size_t length() const { return gens_.size(); }
  bool toggles_only() const;
  // counts[i-1] = occurrences of tau_i.
  std::vector<int> letter_counts() const;

  OperatorWord inverse() const;
  // Apply *this, then next.
  OperatorWord then(const OperatorWord& next) const;
  OperatorWord power(long long k) const;

  Labeling apply(const Labeling& sigma, const Graph& g) const;

  friend bool operator==(const OperatorWord&, const OperatorWord&) = default;

 private:
  int n_ = 0;
  std::vector<Generator> gens_;
};

// compose(f, g) = f o g, i.e. g acts first.
OperatorWord compose(const OperatorWord& f, const OperatorWord& g);

// Word compiled against a graph for repeated evaluation on raw permutation buffers.
// Every cyc is commuted to the end, so evaluation is a toggle sweep plus one shift.
class CompiledWord {
 public:
  static constexpr int kMaxN = 16;
  using Buffer = std::array<std::uint8_t, kMaxN>;  // 0-based labels

  CompiledWord(const OperatorWord& w, const Graph& g);

  int size() const { return n_; }
  // img[v] is the 0-based label of vertex v; inv is its inverse. Both updated in place.
  void apply(Buffer& img, Buffer& inv) const;
  Labeling apply(const Labeling& sigma) const;

 private:
  int n_;
  int shift_;
  std::vector<std::uint8_t> toggles_;  // 0-based label a: toggle a with a+1 mod n
  std::array<std::uint32_t, kMaxN> adj_{};
};

void load_buffers(const Labeling& sigma, CompiledWord::Buffer& img, CompiledWord::Buffer& inv);
Labeling from_buffer(const CompiledWord::Buffer& img, int n);

}  // namespace toggledyn
