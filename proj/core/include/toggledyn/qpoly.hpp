#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace toggledyn {

// Polynomial in q with int64 coefficients; every operation checks for overflow.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<std::int64_t> coeffs);

  static QPolynomial constant(std::int64_t c);
  static QPolynomial monomial(int degree, std::int64_t c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  std::int64_t coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  std::int64_t at_one() const;
  // q -> q^m
  QPolynomial substitute_power(int m) const;
  std::string to_string() const;

  friend QPolynomial operator+(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator-(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(std::int64_t s, const QPolynomial& a);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void normalize();
  std::vector<std::int64_t> c_;
};

// Quotient and remainder; the divisor's leading coefficient must divide every
// leading term encountered (always true for monic divisors).
std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b);
// Throws ArithmeticError on a nonzero remainder.
QPolynomial exact_div(const QPolynomial& a, const QPolynomial& b);

QPolynomial q_int(int k);
QPolynomial q_factorial(int k);
QPolynomial q_binomial(int k, int r);
QPolynomial cyclotomic(int m);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t factorial_i64(int n);

}  // namespace toggledyn
