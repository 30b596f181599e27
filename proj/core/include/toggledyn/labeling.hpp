#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace toggledyn {

// Bijection from vertices 0..n-1 to labels 1..n. Equality and ordering use the image only.
class Labeling {
 public:
  static constexpr int kMaxN = 20;

  Labeling() = default;
  explicit Labeling(std::vector<int> image);

  static Labeling identity(int n);
  // Comma-separated labels "sigma(v_1),...,sigma(v_n)".
  static Labeling parse(std::string_view text);
  std::string to_text() const;

  int size() const { return static_cast<int>(image_.size()); }
  int label_of(int vertex) const { return image_[vertex]; }
  int vertex_of(int label) const { return inverse_[label - 1]; }
  const std::vector<int>& image() const { return image_; }
  const std::vector<int>& inverse() const { return inverse_; }

  // Lexicographic rank of the image among all permutations of 1..n (0-based).
  std::uint64_t rank() const;
  static Labeling unrank(int n, std::uint64_t rank);

  // Relabel so that label a becomes f(a).
  Labeling with_labels_mapped(const std::function<int(int)>& f) const;

  friend bool operator==(const Labeling& a, const Labeling& b) { return a.image_ == b.image_; }
  friend auto operator<=>(const Labeling& a, const Labeling& b) { return a.image_ <=> b.image_; }

 private:
  std::vector<int> image_;
  std::vector<int> inverse_;  // inverse_[label-1] = vertex
};

std::uint64_t factorial(int n);
std::uint64_t permutation_rank(const int* labels, int n);        // labels in 1..n
void permutation_unrank(std::uint64_t rank, int n, int* labels);  // writes 1..n

struct LabelingHash {
  std::size_t operator()(const Labeling& l) const;
};

// Standardization of a sequence of distinct integers, as a permutation in one-line notation.
std::vector<int> standardize(const std::vector<int>& seq);

}  // namespace toggledyn
