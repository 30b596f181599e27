#include "toggledyn/qpoly.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "toggledyn/error.hpp"

namespace toggledyn {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("int64 overflow in multiplication");
  return r;
}

std::int64_t factorial_i64(int n) {
  require(n >= 0, "factorial of a negative number");
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f = checked_mul(f, k);
  return f;
}

QPolynomial::QPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { normalize(); }

void QPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::constant(std::int64_t c) { return QPolynomial({c}); }

QPolynomial QPolynomial::monomial(int degree, std::int64_t c) {
  require(degree >= 0, "negative monomial degree");
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return QPolynomial(std::move(v));
}

std::int64_t QPolynomial::at_one() const {
  std::int64_t s = 0;
  for (auto c : c_) s = checked_add(s, c);
  return s;
}

QPolynomial QPolynomial::substitute_power(int m) const {
  require(m >= 1, "substitution power must be positive");
  if (c_.empty()) return {};
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree()) * m + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * m] = c_[i];
  return QPolynomial(std::move(v));
}

std::string QPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::int64_t c = c_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    std::int64_t a = c < 0 ? -c : c;
    if (i == 0 || a != 1) os << a;
    if (i >= 1) os << "q";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

QPolynomial operator+(const QPolynomial& a, const QPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_add(a.coeff(int(i)), b.coeff(int(i)));
  return QPolynomial(std::move(v));
}

QPolynomial operator-(const QPolynomial& a, const QPolynomial& b) { return a + (-1) * b; }

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      v[i + j] = checked_add(v[i + j], checked_mul(a.c_[i], b.c_[j]));
  return QPolynomial(std::move(v));
}

QPolynomial operator*(std::int64_t s, const QPolynomial& a) {
  std::vector<std::int64_t> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = checked_mul(s, a.c_[i]);
  return QPolynomial(std::move(v));
}

std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a, const QPolynomial& b) {
  require(!b.is_zero(), "division by the zero polynomial");
  std::vector<std::int64_t> rem = a.coefficients();
  int db = b.degree();
  std::int64_t lead = b.coeff(db);
  if (a.degree() < db) return {QPolynomial{}, a};
  std::vector<std::int64_t> quot(a.degree() - db + 1, 0);
  for (int i = a.degree(); i >= db; --i) {
    std::int64_t c = rem[i];
    if (c == 0) continue;
    if (c % lead != 0) throw ArithmeticError("polynomial division leaves a non-integer quotient");
    std::int64_t f = c / lead;
    quot[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = checked_add(rem[i - db + j], -checked_mul(f, b.coeff(j)));
  }
  return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial exact_div(const QPolynomial& a, const QPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw ArithmeticError("inexact polynomial division: remainder " + r.to_string());
  return q;
}

QPolynomial q_int(int k) {
  require(k >= 0, "q-integer of a negative number");
  return QPolynomial(std::vector<std::int64_t>(k, 1));
}

QPolynomial q_factorial(int k) {
  require(k >= 0, "q-factorial of a negative number");
  QPolynomial p = QPolynomial::constant(1);
  for (int j = 2; j <= k; ++j) p = p * q_int(j);
  return p;
}

QPolynomial q_binomial(int k, int r) {
  require(k >= 0 && r >= 0 && r <= k, "q-binomial needs 0 <= r <= k");
  return exact_div(q_factorial(k), q_factorial(r) * q_factorial(k - r));
}

QPolynomial cyclotomic(int m) {
  require(m >= 1, "cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<int, QPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  // q^m - 1 divided by every cyclotomic factor of a proper divisor.
  QPolynomial p = QPolynomial::monomial(m) - QPolynomial::constant(1);
  for (int e = 1; e < m; ++e)
    if (m % e == 0) p = exact_div(p, cyclotomic(e));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(m, p);
  return p;
}

}  // namespace toggledyn
