#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mz {

// Dense univariate polynomial, coefficients in ascending degree order.
template <class C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<C> c) : c_(std::move(c)) { trim(); }

  static Polynomial monomial(const C& a, size_t d) {
    std::vector<C> c(d + 1);
    c[d] = a;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& leading() const { return c_.back(); }

  Polynomial derivative() const {
    std::vector<C> d;
    for (size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * C(static_cast<long>(i)));
    return Polynomial(std::move(d));
  }

  // Horner in any type that C converts into through `conv`
  template <class T, class Conv>
  T eval(const T& x, Conv conv) const {
    T acc = T(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + conv(c_[i]);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<C> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<C> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const C& s, const Polynomial& a) {
    std::vector<C> c = a.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<C> c_;
};

using IntPolynomial = Polynomial<mpz_class>;
using RatPolynomial = Polynomial<mpq_class>;

RatPolynomial to_rational(const IntPolynomial& p);
// scales by the positive lcm of denominators, then removes the content
IntPolynomial primitive_integer(const RatPolynomial& p);

mpz_class content(const IntPolynomial& p);
// primitive part with positive leading coefficient
IntPolynomial primitive_part(const IntPolynomial& p);
// remainder of |lc(b)|^e * a by b; same sign as the remainder over Q
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);
// primitive gcd with positive leading coefficient
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
// a / b over Q, returned primitive; b must divide a
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial square_free_part(const IntPolynomial& p);
// Yun decomposition: factors[i] is the product of the roots of multiplicity i+1
std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& p);

// sign of p at the rational point x (exact)
int sign_at(const IntPolynomial& p, const mpq_class& x);

// "t^3 - 2136t^2 + 931860t - 24903328"
std::string to_string(const IntPolynomial& p, const std::string& var = "t");

}  // namespace mz
