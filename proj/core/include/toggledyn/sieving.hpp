#pragma once

#include <cstdint>
#include <vector>

#include "toggledyn/census.hpp"
#include "toggledyn/qpoly.hpp"

namespace toggledyn {

// Exact value of P(e^{2 pi i k / omega}): reduce modulo the cyclotomic polynomial of
// the root's order. Throws ArithmeticError when the value is not a rational integer.
std::int64_t eval_at_root(const QPolynomial& p, long long k, long long omega);
// Floating evaluation, real part; used as a cross-check only.
long double eval_at_root_float(const QPolynomial& p, long long k, long long omega);

struct CspRow {
  long long k = 0;
  std::uint64_t fixed_from_census = 0;
  std::int64_t poly_value = 0;
  bool integral = true;
  bool match = false;
};

struct CspReport {
  std::uint64_t omega = 0;
  std::vector<CspRow> rows;
  std::size_t mismatches = 0;
  // (1/omega) * sum_k P(zeta^k) equals the number of orbits.
  bool burnside_ok = false;
  bool float_agrees = false;

  bool passed() const { return mismatches == 0 && burnside_ok && float_agrees; }
};

CspReport csp_verify(const OrbitSizes& sizes, const QPolynomial& p);

struct Composition {
  std::vector<int> parts;
  int total() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

void validate(const Composition& c, int n, int d);
Composition rot(const Composition& c);
Composition reversed(const Composition& c);
// Lexicographically smallest rotation; identifies the Rot orbit.
Composition canonical_rotation(const Composition& c);
int rot_orbit_size(const Composition& c);
// All compositions of n into d parts, in lexicographic order.
std::vector<Composition> compositions(int n, int d);
OrbitSizes rot_census(int n, int d);

struct ComposedPrediction {
  OrbitSizes sizes;
  QPolynomial poly;
};

// Given f's orbit sizes {k_i^{m_i}} and sieving polynomial F, predict the orbits
// {(N k_i)^{chi m_i}} of g and its polynomial chi [N]_{q^omega} F, omega = ord(f).
ComposedPrediction csp_compose(const OrbitSizes& f_sizes, const QPolynomial& f_poly, int big_n,
                               const Rational& chi);

// n (d-1)! (n-d-1)! [n-d]_{q^d} C(n-1, d-1)_q
QPolynomial main_sieving_polynomial(int n, int d);
// (d-1)! (n-d-1)! [n]_{q^{n-d}} [n-d]_{q^d} C(n-1, d-1)_q
QPolynomial broken_initial_polynomial(int n, int d);
// (d-1)! (n-d-1)! [n]_{q^d} [n-d]_{q^d} C(n-1, d-1)_q
QPolynomial broken_r_polynomial(int n, int d);

}  // namespace toggledyn
