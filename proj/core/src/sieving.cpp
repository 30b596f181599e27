#include "toggledyn/sieving.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numeric>

#include "toggledyn/error.hpp"

namespace toggledyn {

std::int64_t eval_at_root(const QPolynomial& p, long long k, long long omega) {
  require(omega >= 1, "root order must be positive");
  long long kk = ((k % omega) + omega) % omega;
  long long g = omega / std::gcd(kk, omega);  // exact order of the root
  std::vector<std::int64_t> folded(static_cast<std::size_t>(g), 0);
  for (int i = 0; i <= p.degree(); ++i) {
    // zeta^(k i) depends on k i mod omega; as a power of a primitive g-th root
    // it is (k/gcd) * i mod g, a bijective relabeling of exponent classes.
    long long e = (static_cast<long long>(i) * (kk / (omega / g))) % g;
    folded[static_cast<std::size_t>(e)] = checked_add(folded[static_cast<std::size_t>(e)], p.coeff(i));
  }
  auto [q, r] = divmod(QPolynomial(folded), cyclotomic(static_cast<int>(g)));
  if (r.degree() > 0)
    throw ArithmeticError("value at the root of unity is not a rational integer: remainder " + r.to_string());
  return r.coeff(0);
}

long double eval_at_root_float(const QPolynomial& p, long long k, long long omega) {
  const long double two_pi = 2.0L * std::acos(-1.0L);
  long double re = 0;
  for (int i = 0; i <= p.degree(); ++i) {
    long long e = (static_cast<long long>(i) * (k % omega)) % omega;
    re += static_cast<long double>(p.coeff(i)) * std::cos(two_pi * e / omega);
  }
  return re;
}

namespace {

long double eval_at_root_float_imag(const QPolynomial& p, long long k, long long omega) {
  const long double two_pi = 2.0L * std::acos(-1.0L);
  long double im = 0;
  for (int i = 0; i <= p.degree(); ++i) {
    long long e = (static_cast<long long>(i) * (k % omega)) % omega;
    im += static_cast<long double>(p.coeff(i)) * std::sin(two_pi * e / omega);
  }
  return im;
}

}  // namespace

CspReport csp_verify(const OrbitSizes& sizes, const QPolynomial& p) {
  CspReport rep;
  BigInt ord = sizes.order();
  require(ord <= BigInt(std::numeric_limits<std::int64_t>::max() / 2), "order too large for CSP check");
  rep.omega = static_cast<std::uint64_t>(ord);
  long long omega = static_cast<long long>(rep.omega);
  std::int64_t sum = 0;
  bool all_integral = true;
  rep.float_agrees = true;
  for (long long k = 0; k < omega; ++k) {
    CspRow row;
    row.k = k;
    row.fixed_from_census = sizes.fixed_points(k);
    try {
      row.poly_value = eval_at_root(p, k, omega);
      row.integral = true;
      sum = checked_add(sum, row.poly_value);
      long double fre = eval_at_root_float(p, k, omega);
      long double fim = eval_at_root_float_imag(p, k, omega);
      if (std::fabs(static_cast<double>(fre - row.poly_value)) > 1e-6 || std::fabs(static_cast<double>(fim)) > 1e-6)
        rep.float_agrees = false;
    } catch (const ArithmeticError&) {
      row.integral = false;
      all_integral = false;
    }
    row.match = row.integral && row.poly_value >= 0 &&
                static_cast<std::uint64_t>(row.poly_value) == row.fixed_from_census;
    if (!row.match) ++rep.mismatches;
    rep.rows.push_back(row);
  }
  rep.burnside_ok = all_integral && sum % omega == 0 &&
                    static_cast<std::uint64_t>(sum / omega) == sizes.orbit_count();
  return rep;
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

void validate(const Composition& c, int n, int d) {
  require(static_cast<int>(c.parts.size()) == d, "composition has the wrong number of parts");
  for (int a : c.parts) require(a >= 1, "composition parts must be positive");
  require(c.total() == n, "composition parts must sum to n");
}

Composition rot(const Composition& c) {
  Composition out = c;
  if (!out.parts.empty()) std::rotate(out.parts.begin(), out.parts.begin() + 1, out.parts.end());
  return out;
}

Composition reversed(const Composition& c) {
  Composition out = c;
  std::reverse(out.parts.begin(), out.parts.end());
  return out;
}

Composition canonical_rotation(const Composition& c) {
  Composition best = c;
  Composition x = c;
  for (std::size_t i = 1; i < c.parts.size(); ++i) {
    x = rot(x);
    if (x < best) best = x;
  }
  return best;
}

int rot_orbit_size(const Composition& c) {
  Composition x = rot(c);
  int k = 1;
  while (!(x == c)) {
    x = rot(x);
    ++k;
  }
  return k;
}

std::vector<Composition> compositions(int n, int d) {
  require(d >= 1 && d <= n, "compositions need 1 <= d <= n");
  std::vector<Composition> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int slots) {
    if (slots == 1) {
      parts.push_back(remaining);
      out.push_back({parts});
      parts.pop_back();
      return;
    }
    for (int a = 1; a <= remaining - (slots - 1); ++a) {
      parts.push_back(a);
      rec(remaining - a, slots - 1);
      parts.pop_back();
    }
  };
  rec(n, d);
  return out;
}

OrbitSizes rot_census(int n, int d) { return orbit_sizes_of_set(compositions(n, d), rot); }

ComposedPrediction csp_compose(const OrbitSizes& f_sizes, const QPolynomial& f_poly, int big_n,
                               const Rational& chi) {
  require(big_n >= 1, "N must be positive");
  require(chi > 0, "chi must be positive");
  ComposedPrediction out;
  for (auto [k, m] : f_sizes.counts) {
    Rational mult = chi * Rational(static_cast<long long>(m));
    require(mult.denominator() == 1, "chi * m is not an integer");
    out.sizes.counts[k * static_cast<std::uint64_t>(big_n)] += static_cast<std::uint64_t>(mult.numerator());
  }
  int omega = static_cast<int>(f_sizes.order());
  QPolynomial scaled = chi.numerator() * (q_int(big_n).substitute_power(omega) * f_poly);
  std::vector<std::int64_t> c = scaled.coefficients();
  for (auto& x : c) {
    require(x % chi.denominator() == 0, "chi [N]_{q^omega} F(q) has non-integer coefficients");
    x /= chi.denominator();
  }
  out.poly = QPolynomial(std::move(c));
  return out;
}

QPolynomial main_sieving_polynomial(int n, int d) {
  require(d >= 1 && d <= n - 1, "need 1 <= d <= n-1");
  std::int64_t scalar = checked_mul(n, checked_mul(factorial_i64(d - 1), factorial_i64(n - d - 1)));
  return scalar * (q_int(n - d).substitute_power(d) * q_binomial(n - 1, d - 1));
}

QPolynomial broken_initial_polynomial(int n, int d) {
  require(d >= 1 && d <= n - 1, "need 1 <= d <= n-1");
  std::int64_t scalar = checked_mul(factorial_i64(d - 1), factorial_i64(n - d - 1));
  return scalar * (q_int(n).substitute_power(n - d) * q_int(n - d).substitute_power(d) * q_binomial(n - 1, d - 1));
}

QPolynomial broken_r_polynomial(int n, int d) {
  require(d >= 1 && 2 * d <= n, "need 1 <= d <= n/2");
  std::int64_t scalar = checked_mul(factorial_i64(d - 1), factorial_i64(n - d - 1));
  return scalar * (q_int(n).substitute_power(d) * q_int(n - d).substitute_power(d) * q_binomial(n - 1, d - 1));
}

}  // namespace toggledyn
