#include "toggledyn/residue.hpp"

#include "toggledyn/error.hpp"

namespace toggledyn {

CyclicInterval::CyclicInterval(long long x, long long y, int n) : x_(x), y_(y), n_(n) {
  require(n >= 1, "cyclic interval modulus must be positive");
  require(x <= y, "cyclic interval needs x <= y");
}

long long CyclicInterval::multiplicity(int r) const {
  // Count k in [x, y] with k = r (mod n): floor division on both ends.
  auto below = [&](long long v) {  // #{k <= v : k = r mod n}
    long long shifted = v - r;
    return shifted >= 0 ? shifted / n_ : -((-shifted + n_ - 1) / n_);
  };
  return below(y_) - below(x_ - 1);
}

long long CyclicInterval::count_in(const std::set<int>& residues) const {
  long long total = 0;
  for (int r : residues) total += multiplicity(residue(r, n_));
  return total;
}

std::vector<int> CyclicInterval::residues() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (long long k = x_; k <= y_; ++k) out.push_back(residue(k, n_));
  return out;
}

long long cyclic_interval_intersect_count(const CyclicInterval& iv, const std::set<int>& s) {
  return iv.count_in(s);
}

}  // namespace toggledyn
