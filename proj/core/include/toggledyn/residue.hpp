#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace toggledyn {

// Residues of Z/nZ are represented by 1..n; n stands for the class of 0.
inline int residue(long long x, int n) {
  long long r = x % n;
  if (r <= 0) r += n;
  return static_cast<int>(r);
}

// The multiset [x, y]_n obtained by reducing x, x+1, ..., y modulo n.
class CyclicInterval {
 public:
  CyclicInterval(long long x, long long y, int n);

  long long x() const { return x_; }
  long long y() const { return y_; }
  int modulus() const { return n_; }
  long long length() const { return y_ - x_ + 1; }

  // Number of k in [x, y] with k = r (mod n).
  long long multiplicity(int r) const;

  // Sum of multiplicities over a set of residues.
  long long count_in(const std::set<int>& residues) const;

  // Residues in order x, x+1, ..., y (with repetition).
  std::vector<int> residues() const;

 private:
  long long x_;
  long long y_;
  int n_;
};

long long cyclic_interval_intersect_count(const CyclicInterval& iv, const std::set<int>& s);

}  // namespace toggledyn
