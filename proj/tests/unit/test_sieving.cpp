#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "toggledyn/census.hpp"
#include "toggledyn/error.hpp"
#include "toggledyn/sieving.hpp"

using namespace toggledyn;

TEST_SUITE("sieving") {

TEST_CASE("q-binomials match q-Pascal") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) {
      auto expect = oracle::gauss(n, k);
      CHECK(q_binomial(n, k).coefficients() == std::vector<std::int64_t>(expect.begin(), expect.end()));
      CHECK(q_binomial(n, k).at_one() == oracle::binom(n, k));
    }
  CHECK_THROWS_AS(q_binomial(3, 5), InvalidArgument);
}

TEST_CASE("polynomial arithmetic") {
  QPolynomial a({1, 1}), b({1, -1});
  CHECK((a * b) == QPolynomial({1, 0, -1}));
  CHECK((a + b) == QPolynomial::constant(2));
  CHECK((a - a).is_zero());
  CHECK(q_int(4) == QPolynomial({1, 1, 1, 1}));
  CHECK(q_int(3).substitute_power(2) == QPolynomial({1, 0, 1, 0, 1}));
  CHECK(exact_div(q_factorial(5), q_factorial(3)) == q_int(4) * q_int(5));
  CHECK_THROWS_AS(exact_div(q_int(3), q_int(2)), ArithmeticError);
  CHECK_THROWS_AS(checked_mul(std::int64_t(1) << 40, std::int64_t(1) << 40), ArithmeticError);
  CHECK(factorial_i64(10) == 3628800);
}

TEST_CASE("cyclotomic polynomials multiply to q^m - 1") {
  for (int m = 1; m <= 30; ++m) {
    QPolynomial prod = QPolynomial::constant(1);
    for (int e = 1; e <= m; ++e)
      if (m % e == 0) prod = prod * cyclotomic(e);
    CHECK(prod == QPolynomial::monomial(m) - QPolynomial::constant(1));
  }
  CHECK(cyclotomic(6) == QPolynomial({1, -1, 1}));
}

TEST_CASE("exact root evaluation agrees with complex arithmetic") {
  std::mt19937_64 rng(9);
  for (int n = 2; n <= 9; ++n)
    for (int k = 0; k <= n; ++k) {
      auto p = q_binomial(n, k);
      auto c = oracle::gauss(n, k);
      for (long long omega : {n, n - 1, 2 * n}) {
        if (omega <= 0) continue;
        for (long long j = 0; j < omega; ++j) {
          auto z = oracle::eval(c, j, omega);
          if (std::abs(z.imag()) > 1e-6 || std::abs(z.real() - std::round(z.real())) > 1e-6) {
            CHECK_THROWS_AS(eval_at_root(p, j, omega), ArithmeticError);
          } else {
            CHECK(eval_at_root(p, j, omega) == std::llround(z.real()));
          }
        }
      }
    }
}

TEST_CASE("q-binomial with rotation is a CSP triple") {
  for (int n = 2; n <= 9; ++n)
    for (int d = 1; d < n; ++d) {
      auto rep = csp_verify(rot_census(n, d), q_binomial(n - 1, d - 1));
      CHECK(rep.passed());
      CHECK(rep.omega == static_cast<std::uint64_t>(d));
    }
}

TEST_CASE("a wrong polynomial is rejected") {
  auto rep = csp_verify(rot_census(6, 3), QPolynomial::constant(10));
  CHECK(!rep.passed());
}

TEST_CASE("compositions") {
  for (int n = 1; n <= 10; ++n)
    for (int d = 1; d <= n; ++d) {
      auto all = compositions(n, d);
      CHECK(static_cast<long long>(all.size()) == oracle::binom(n - 1, d - 1));
      CHECK(std::is_sorted(all.begin(), all.end()));
      for (const auto& c : all) {
        CHECK(c.total() == n);
        Composition x = c;
        for (int i = 0; i < d; ++i) x = rot(x);
        CHECK(x == c);
        int size = 1;
        for (x = rot(c); !(x == c); x = rot(x)) {
          CHECK(canonical_rotation(x) == canonical_rotation(c));
          ++size;
        }
        CHECK(size == rot_orbit_size(c));
        CHECK(canonical_rotation(c) <= c);
        CHECK(reversed(reversed(c)) == c);
      }
    }
  CHECK(rot(Composition{{2, 1, 3}}) == Composition{{1, 3, 2}});
  CHECK_THROWS_AS(validate(Composition{{2, 0, 3}}, 5, 3), InvalidArgument);
  CHECK_THROWS_AS(validate(Composition{{2, 2}}, 5, 2), InvalidArgument);
}

TEST_CASE("Burnside count of Rot orbits") {
  for (int n = 2; n <= 10; ++n)
    for (int d = 1; d <= n; ++d) {
      auto s = rot_census(n, d);
      long long sum = 0;
      for (int k = 0; k < d; ++k) sum += static_cast<long long>(s.fixed_points(k));
      CHECK(sum % d == 0);
      CHECK(static_cast<std::uint64_t>(sum / d) == s.orbit_count());
    }
}

TEST_CASE("composed CSP prediction") {
  OrbitSizes f;
  f.counts = {{1, 2}, {3, 1}};
  auto pred = csp_compose(f, QPolynomial({2, 0, 0, 1}) + QPolynomial({0, 1, 1}), 4, Rational(2));
  CHECK(pred.sizes.counts == std::map<std::uint64_t, std::uint64_t>{{4, 4}, {12, 2}});
  CHECK(pred.poly.at_one() == 2 * 4 * 5);
}

TEST_CASE("sieving polynomials count all labelings") {
  for (int n = 2; n <= 10; ++n)
    for (int d = 1; d < n; ++d) {
      auto nf = factorial_i64(n);
      CHECK(main_sieving_polynomial(n, d).at_one() == nf);
      CHECK(broken_initial_polynomial(n, d).at_one() == nf);
      if (2 * d <= n) CHECK(broken_r_polynomial(n, d).at_one() == nf);
    }
}

}
