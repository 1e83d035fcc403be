#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <limits>
#include <numbers>

namespace mz {

// working precision: x87 extended (64-bit mantissa) for grid sweeps,
// MPFR for forms of large weight
using Extended = long double;
using Multi = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

// Sets the MPFR default precision for the lifetime of the object.
// Values created while it is alive (including from doubles) get that precision.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned bits) : saved_(Multi::default_precision()) {
    Multi::default_precision(digits10_for(bits));
  }
  ~WorkingPrecision() { Multi::default_precision(saved_); }
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  static unsigned digits10_for(unsigned bits) { return static_cast<unsigned>(std::ceil(bits * 0.30103)) + 1; }
  static unsigned current_bits() { return static_cast<unsigned>(std::ceil(Multi::default_precision() / 0.30103)); }

 private:
  unsigned saved_;
};

template <class T>
T eps() {
  return std::numeric_limits<T>::epsilon();
}
template <>
inline Multi eps<Multi>() {
  Multi r = 1;
  mpfr_mul_2si(r.backend().data(), r.backend().data(), -static_cast<long>(mpfr_get_prec(r.backend().data())) + 1, MPFR_RNDU);
  return r;
}

template <class T>
T pi() {
  return std::numbers::pi_v<T>;
}
template <>
inline Multi pi<Multi>() {
  Multi r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

template <class T>
T from_mpz(const mpz_class& z);
template <class T>
T from_mpq(const mpq_class& q);

template <>
inline Multi from_mpz<Multi>(const mpz_class& z) {
  Multi r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}
template <>
inline Multi from_mpq<Multi>(const mpq_class& q) {
  Multi r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}
template <>
inline long double from_mpz<long double>(const mpz_class& z) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_z(t, z.get_mpz_t(), MPFR_RNDN);
  long double r = mpfr_get_ld(t, MPFR_RNDN);
  mpfr_clear(t);
  return r;
}
template <>
inline long double from_mpq<long double>(const mpq_class& q) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
  long double r = mpfr_get_ld(t, MPFR_RNDN);
  mpfr_clear(t);
  return r;
}
template <>
inline double from_mpz<double>(const mpz_class& z) {
  return from_mpz<long double>(z);
}
template <>
inline double from_mpq<double>(const mpq_class& q) {
  return static_cast<double>(from_mpq<long double>(q));
}

// exact rational value of a binary float
inline mpq_class to_mpq(long double x) {
  mpfr_t t;
  mpfr_init2(t, 64);
  mpfr_set_ld(t, x, MPFR_RNDN);
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), t);
  mpfr_clear(t);
  return q;
}
inline mpq_class to_mpq(const Multi& x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.backend().data());
  return q;
}

inline long double to_ld(long double x) { return x; }
inline long double to_ld(const Multi& x) { return mpfr_get_ld(x.backend().data(), MPFR_RNDN); }
inline double to_double(long double x) { return static_cast<double>(x); }
inline double to_double(const Multi& x) { return mpfr_get_d(x.backend().data(), MPFR_RNDN); }

// smallest long double >= x, and largest <= x (outward rounding of reported bounds)
inline long double ld_up(const Multi& x) {
  return mpfr_get_ld(x.backend().data(), MPFR_RNDU);
}
inline long double ld_down(const Multi& x) {
  return mpfr_get_ld(x.backend().data(), MPFR_RNDD);
}
inline long double ld_up(long double x) { return x; }
inline long double ld_down(long double x) { return x; }

template <class T>
struct Complex {
  T re{0}, im{0};

  Complex() = default;
  Complex(T r) : re(std::move(r)), im(0) {}
  Complex(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const T& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    T d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex conj() const { return {re, -im}; }
  T norm() const { return re * re + im * im; }
  T abs() const {
    using std::sqrt;
    return sqrt(re * re + im * im);
  }
};

// e^{i x}
template <class T>
Complex<T> expi(const T& x) {
  using std::cos;
  using std::sin;
  return {cos(x), sin(x)};
}

}  // namespace mz
