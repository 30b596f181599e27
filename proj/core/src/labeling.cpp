#include "toggledyn/labeling.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "toggledyn/error.hpp"

namespace toggledyn {

std::uint64_t factorial(int n) {
  require(n >= 0 && n <= 20, "factorial argument out of range");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t permutation_rank(const int* labels, int n) {
  // Lehmer code: for each position count smaller labels to its right.
  std::uint64_t rank = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int a = labels[i] - 1;
    int smaller_unused = a - __builtin_popcount(used & ((1u << a) - 1));
    rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller_unused);
    used |= 1u << a;
  }
  return rank;
}

void permutation_unrank(std::uint64_t rank, int n, int* labels) {
  int digits[Labeling::kMaxN];
  for (int i = n - 1; i >= 0; --i) {
    auto base = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(rank % base);
    rank /= base;
  }
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    int k = digits[i];
    int a = 0;
    for (;; ++a) {
      if (used & (1u << a)) continue;
      if (k-- == 0) break;
    }
    used |= 1u << a;
    labels[i] = a + 1;
  }
}

Labeling::Labeling(std::vector<int> image) : image_(std::move(image)) {
  int n = size();
  require(n >= 1 && n <= kMaxN, "labeling size must be in 1..20");
  inverse_.assign(n, -1);
  for (int v = 0; v < n; ++v) {
    int a = image_[v];
    require(a >= 1 && a <= n, "label out of range 1..n");
    require(inverse_[a - 1] < 0, "labels must be distinct");
    inverse_[a - 1] = v;
  }
}

Labeling Labeling::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Labeling(std::move(img));
}

Labeling Labeling::parse(std::string_view text) {
  std::vector<int> img;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    require(ec == std::errc() && p == tok.data() + tok.size() && !tok.empty(),
            "labeling must be a comma-separated list of integers");
    img.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Labeling(std::move(img));
}

std::string Labeling::to_text() const {
  std::ostringstream os;
  for (int v = 0; v < size(); ++v) os << (v ? "," : "") << image_[v];
  return os.str();
}

std::uint64_t Labeling::rank() const { return permutation_rank(image_.data(), size()); }

Labeling Labeling::unrank(int n, std::uint64_t rank) {
  require(n >= 1 && n <= kMaxN && rank < factorial(n), "rank out of range");
  std::vector<int> img(n);
  permutation_unrank(rank, n, img.data());
  return Labeling(std::move(img));
}

Labeling Labeling::with_labels_mapped(const std::function<int(int)>& f) const {
  std::vector<int> img(image_.size());
  std::transform(image_.begin(), image_.end(), img.begin(), f);
  return Labeling(std::move(img));
}

std::size_t LabelingHash::operator()(const Labeling& l) const {
  std::size_t h = 1469598103934665603ull;
  for (int a : l.image()) h = (h ^ static_cast<std::size_t>(a)) * 1099511628211ull;
  return h;
}

std::vector<int> standardize(const std::vector<int>& seq) {
  std::vector<int> idx(seq.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> out(seq.size());
  for (std::size_t r = 0; r < idx.size(); ++r) out[idx[r]] = static_cast<int>(r) + 1;
  return out;
}

}  // namespace toggledyn
