#pragma once

#include <string>

#include "millerzeros/errors.hpp"
#include "millerzeros/scalar.hpp"

namespace mz {

// Midpoint-radius values. Every operation adds the radius it inherits plus a
// few ulps of the midpoint magnitude for its own rounding.
template <class T>
struct CertReal {
  T value{0};
  T err{0};

  T lo() const { return value - err; }
  T hi() const { return value + err; }
  bool certainly_positive() const { return value > err; }
  bool certainly_negative() const { return value < -err; }
  int sign() const { return certainly_positive() ? 1 : certainly_negative() ? -1 : 0; }
};

template <class T>
struct CertValue {
  Complex<T> value{};
  T err{0};

  CertValue() = default;
  CertValue(Complex<T> v, T e = T(0)) : value(std::move(v)), err(std::move(e)) {}

  T mag() const { return value.abs(); }
  T upper() const { return value.abs() + err + 4 * eps<T>() * value.abs(); }
  T lower() const { return value.abs() - err - 4 * eps<T>() * value.abs(); }

  // the true value is real: the imaginary part must lie inside the radius
  CertReal<T> real_checked(const char* what) const {
    using std::abs;
    if (abs(value.im) > err)
      throw Error(ErrorCode::NotReal, std::string(what) + ": imaginary part exceeds error radius");
    return {value.re, err};
  }
  CertReal<T> real_part() const { return {value.re, err}; }
};

template <class T>
T round_pad(const T& m) {
  return 4 * eps<T>() * m;
}

template <class T>
CertValue<T> operator+(const CertValue<T>& a, const CertValue<T>& b) {
  CertValue<T> r(a.value + b.value);
  r.err = a.err + b.err + round_pad(a.mag() + b.mag());
  return r;
}
template <class T>
CertValue<T> operator-(const CertValue<T>& a, const CertValue<T>& b) {
  CertValue<T> r(a.value - b.value);
  r.err = a.err + b.err + round_pad(a.mag() + b.mag());
  return r;
}
template <class T>
CertValue<T> operator*(const CertValue<T>& a, const CertValue<T>& b) {
  T ma = a.mag(), mb = b.mag();
  CertValue<T> r(a.value * b.value);
  r.err = (ma * b.err + mb * a.err + a.err * b.err) * (1 + 4 * eps<T>()) + round_pad(ma * mb);
  return r;
}
template <class T>
CertValue<T> operator/(const CertValue<T>& a, const CertValue<T>& b) {
  T ma = a.mag(), mb = b.mag();
  if (mb <= b.err) throw Error(ErrorCode::DomainError, "division by a ball containing zero");
  CertValue<T> r(a.value / b.value);
  r.err = (ma * b.err + mb * a.err) / (mb * (mb - b.err)) * (1 + 8 * eps<T>()) + 2 * round_pad(ma / mb);
  return r;
}
template <class T>
CertValue<T> scale(const CertValue<T>& a, const T& s) {
  using std::abs;
  CertValue<T> r(s * a.value);
  r.err = abs(s) * a.err * (1 + 4 * eps<T>()) + round_pad(abs(s) * a.mag());
  return r;
}
template <class T>
CertValue<T> pow(const CertValue<T>& a, unsigned long e) {
  CertValue<T> r(Complex<T>(T(1)));
  CertValue<T> b = a;
  bool first = true;
  while (e) {
    if (e & 1) {
      r = first ? b : r * b;
      first = false;
    }
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

template <class T>
CertReal<T> operator+(const CertReal<T>& a, const CertReal<T>& b) {
  using std::abs;
  return {a.value + b.value, a.err + b.err + round_pad(abs(a.value) + abs(b.value))};
}
template <class T>
CertReal<T> operator-(const CertReal<T>& a, const CertReal<T>& b) {
  using std::abs;
  return {a.value - b.value, a.err + b.err + round_pad(abs(a.value) + abs(b.value))};
}
template <class T>
CertReal<T> operator*(const CertReal<T>& a, const CertReal<T>& b) {
  using std::abs;
  T ma = abs(a.value), mb = abs(b.value);
  return {a.value * b.value, (ma * b.err + mb * a.err + a.err * b.err) * (1 + 4 * eps<T>()) + round_pad(ma * mb)};
}
template <class T>
CertReal<T> operator/(const CertReal<T>& a, const CertReal<T>& b) {
  using std::abs;
  T ma = abs(a.value), mb = abs(b.value);
  if (mb <= b.err) throw Error(ErrorCode::DomainError, "division by a ball containing zero");
  return {a.value / b.value, (ma * b.err + mb * a.err) / (mb * (mb - b.err)) * (1 + 8 * eps<T>()) + 2 * round_pad(ma / mb)};
}

// |z| as a real ball
template <class T>
CertReal<T> abs(const CertValue<T>& z) {
  T m = z.mag();
  return {m, z.err + round_pad(m)};
}

// e^{i x} for an exactly representable x; covers the rounding of cos, sin
template <class T>
CertValue<T> expi_ball(const T& x) {
  using std::abs;
  return CertValue<T>(expi(x), (8 + 2 * abs(x)) * eps<T>());
}

}  // namespace mz
