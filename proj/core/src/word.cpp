#include "toggledyn/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "toggledyn/error.hpp"
#include "toggledyn/residue.hpp"
#include "toggledyn/toggles.hpp"

namespace toggledyn {

Generator Generator::inverse() const {
  switch (kind) {
    case Kind::Cyc: return cyc_inverse();
    case Kind::CycInverse: return cyc();
    default: return *this;
  }
}

OperatorWord::OperatorWord(int n, std::vector<Generator> gens) : n_(n), gens_(std::move(gens)) {
  require(n >= 1, "word modulus must be positive");
  for (const auto& g : gens_)
    if (g.kind == Generator::Kind::Toggle)
      require(g.index >= 1 && g.index <= n, "toggle index out of range 1..n");
}

OperatorWord OperatorWord::toggles(int n, const std::vector<int>& indices) {
  std::vector<Generator> g;
  g.reserve(indices.size());
  for (int i : indices) g.push_back(Generator::toggle(residue(i, n)));
  return OperatorWord(n, std::move(g));
}

OperatorWord OperatorWord::parse(int n, std::string_view text) {
  std::vector<Generator> gens;
  std::istringstream is{std::string(text)};
  std::string tok;
  while (is >> tok) {
    if (tok == "cyc") {
      gens.push_back(Generator::cyc());
    } else if (tok == "cyc-") {
      gens.push_back(Generator::cyc_inverse());
    } else if (tok.size() >= 2 && tok[0] == 't') {
      int i = 0;
      auto [p, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), i);
      require(ec == std::errc() && p == tok.data() + tok.size(), "bad token '" + tok + "'");
      gens.push_back(Generator::toggle(i));
    } else {
      fail("bad word token '" + tok + "'");
    }
  }
  return OperatorWord(n, std::move(gens));
}

std::string OperatorWord::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& g : gens_) {
    if (!first) os << ' ';
    first = false;
    switch (g.kind) {
      case Generator::Kind::Toggle: os << 't' << g.index; break;
      case Generator::Kind::Cyc: os << "cyc"; break;
      case Generator::Kind::CycInverse: os << "cyc-"; break;
    }
  }
  return os.str();
}

bool OperatorWord::toggles_only() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Generator& g) { return g.kind == Generator::Kind::Toggle; });
}

std::vector<int> OperatorWord::letter_counts() const {
  std::vector<int> counts(n_, 0);
  for (const auto& g : gens_)
    if (g.kind == Generator::Kind::Toggle) ++counts[g.index - 1];
  return counts;
}

OperatorWord OperatorWord::inverse() const {
  std::vector<Generator> g;
  g.reserve(gens_.size());
  for (auto it = gens_.rbegin(); it != gens_.rend(); ++it) g.push_back(it->inverse());
  return OperatorWord(n_, std::move(g));
}

OperatorWord OperatorWord::then(const OperatorWord& next) const {
  require(n_ == next.n_, "cannot concatenate words over different moduli");
  auto g = gens_;
  g.insert(g.end(), next.gens_.begin(), next.gens_.end());
  return OperatorWord(n_, std::move(g));
}

OperatorWord OperatorWord::power(long long k) const {
  if (k < 0) return inverse().power(-k);
  std::vector<Generator> g;
  g.reserve(gens_.size() * static_cast<std::size_t>(k));
  for (long long r = 0; r < k; ++r) g.insert(g.end(), gens_.begin(), gens_.end());
  return OperatorWord(n_, std::move(g));
}

Labeling OperatorWord::apply(const Labeling& sigma, const Graph& g) const {
  require(sigma.size() == n_, "labeling size differs from word modulus");
  Labeling out = sigma;
  for (const auto& gen : gens_) {
    switch (gen.kind) {
      case Generator::Kind::Toggle: out = toggle(out, g, gen.index); break;
      case Generator::Kind::Cyc: out = cyc_pow(out, 1); break;
      case Generator::Kind::CycInverse: out = cyc_pow(out, -1); break;
    }
  }
  return out;
}

OperatorWord compose(const OperatorWord& f, const OperatorWord& g) { return g.then(f); }

CompiledWord::CompiledWord(const OperatorWord& w, const Graph& g) : n_(w.modulus()), shift_(0) {
  require(n_ <= kMaxN, "compiled words support n <= 16");
  require(g.size() == n_, "graph and word sizes differ");
  for (int v = 0; v < n_; ++v) adj_[v] = g.neighbors(v);
  // cyc tau_i = tau_{i+1} cyc, so every toggle can be moved before all shifts.
  long long s = 0;
  for (const auto& gen : w.gens()) {
    switch (gen.kind) {
      case Generator::Kind::Toggle:
        toggles_.push_back(static_cast<std::uint8_t>(residue(gen.index - s, n_) - 1));
        break;
      case Generator::Kind::Cyc: ++s; break;
      case Generator::Kind::CycInverse: --s; break;
    }
  }
  shift_ = residue(s, n_) % n_;
}

void CompiledWord::apply(Buffer& img, Buffer& inv) const {
  const int n = n_;
  for (std::uint8_t a : toggles_) {
    int b = a + 1 == n ? 0 : a + 1;
    int p = inv[a];
    int q = inv[b];
    if ((adj_[p] >> q) & 1u) continue;
    img[p] = static_cast<std::uint8_t>(b);
    img[q] = a;
    inv[a] = static_cast<std::uint8_t>(q);
    inv[b] = static_cast<std::uint8_t>(p);
  }
  if (shift_ != 0) {
    for (int v = 0; v < n; ++v) {
      int a = img[v] + shift_;
      if (a >= n) a -= n;
      img[v] = static_cast<std::uint8_t>(a);
      inv[a] = static_cast<std::uint8_t>(v);
    }
  }
}

void load_buffers(const Labeling& sigma, CompiledWord::Buffer& img, CompiledWord::Buffer& inv) {
  for (int v = 0; v < sigma.size(); ++v) {
    img[v] = static_cast<std::uint8_t>(sigma.label_of(v) - 1);
    inv[sigma.label_of(v) - 1] = static_cast<std::uint8_t>(v);
  }
}

Labeling from_buffer(const CompiledWord::Buffer& img, int n) {
  std::vector<int> image(n);
  for (int v = 0; v < n; ++v) image[v] = img[v] + 1;
  return Labeling(std::move(image));
}

Labeling CompiledWord::apply(const Labeling& sigma) const {
  require(sigma.size() == n_, "labeling size differs from word modulus");
  Buffer img{}, inv{};
  load_buffers(sigma, img, inv);
  apply(img, inv);
  return from_buffer(img, n_);
}

}  // namespace toggledyn
