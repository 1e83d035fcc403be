#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "millerzeros/ball.hpp"
#include "millerzeros/miller.hpp"
#include "millerzeros/qseries.hpp"

namespace mz {

constexpr double kMinHeight = 0.4;

// Bound on the coefficients a_n (n > N) of a series, used to cap
// sum_{n>N} n^p |a_n| r^n.
struct TailBound {
  enum class Kind { Geometric, EisensteinCoeff, JCoeff, EtaProduct, Unbounded };
  Kind kind = Kind::Unbounded;
  double scale = 0;  // Geometric: |a_n| <= scale * ratio^n; Eisenstein: |gamma_k|
  double ratio = 0;
  long weight = 0;  // Eisenstein: |a_n| <= |gamma_k| n^k
  long power = 1;   // EtaProduct: a_n dominated by q^L prod (1-q^n)^{-24L}

  static TailBound exact() { return {Kind::Geometric, 0, 0, 0, 0}; }
  static TailBound geometric(double c, double ratio) { return {Kind::Geometric, c, ratio, 0, 0}; }
  static TailBound eisenstein(long k);
  static TailBound jcoeff() { return {Kind::JCoeff, 0, 0, 0, 0}; }
  static TailBound eta_product(long L) { return {Kind::EtaProduct, 0, 0, 0, L}; }
  static TailBound unbounded() { return {}; }

  std::string name() const;

  template <class T>
  T sum(long N, const T& r, int p = 0) const;
};

// upper bound for e^{-2 pi y}
template <class T>
T nome_upper(const T& y) {
  using std::exp;
  T r = exp(-2 * pi<T>() * y);
  return r * (1 + 8 * eps<T>() * (1 + y * 8));
}

template <class T>
T TailBound::sum(long N, const T& r, int p) const {
  using std::exp;
  using std::log;
  using std::pow;
  using std::sqrt;
  const T one = 1;
  switch (kind) {
    case Kind::Unbounded:
      throw Error(ErrorCode::TailUnbounded, "no tail bound applies");
    case Kind::Geometric: {
      if (scale == 0) return T(0);
      T rho = T(ratio) * r;
      if (!(rho < one)) throw Error(ErrorCode::TailUnbounded, "geometric tail with ratio*|q| >= 1");
      // n^p rho^n, ratio ((n+1)/n)^p rho
      long n = N + 1;
      T acc = 0;
      for (int it = 0; it < 100000; ++it, ++n) {
        T term = T(scale) * pow(T(n), p) * pow(rho, n);
        T R = pow(T(n + 1) / T(n), p) * rho;
        if (R < T(0.5)) return (acc + term / (one - R)) * (1 + 16 * eps<T>());
        acc += term;
      }
      throw Error(ErrorCode::TailUnbounded, "geometric tail does not settle");
    }
    case Kind::EisensteinCoeff:
    case Kind::JCoeff: {
      if (!(r < one)) throw Error(ErrorCode::TailUnbounded, "|q| >= 1");
      T lr = log(r);
      long n = std::max(N + 1, 1L);
      T acc = 0;
      for (int it = 0; it < 1000000; ++it, ++n) {
        T tn = T(n);
        T term, R;
        if (kind == Kind::EisensteinCoeff) {
          term = T(scale) * exp(T(weight + p) * log(tn) + tn * lr);
          R = pow((tn + 1) / tn, weight + p) * r;
        } else {
          term = exp(4 * pi<T>() * sqrt(tn) - log(T(2)) / 2 - T(0.75) * log(tn) + T(p) * log(tn) + tn * lr);
          R = pow((tn + 1) / tn, p) * exp(2 * pi<T>() / sqrt(tn)) * r;
        }
        if (R < T(0.5)) return (acc + term / (one - R)) * (1 + 64 * eps<T>());
        acc += term;
      }
      throw Error(ErrorCode::TailUnbounded, "tail terms never become geometric");
    }
    case Kind::EtaProduct: {
      // a_n <= b_n, sum b_n x^n = x^L prod (1-x^n)^{-24L} =: M(x); compare at x = r0 > r
      T r0 = sqrt(r);
      if (r0 > T(0.5)) r0 = T(0.5);
      if (!(r < r0)) throw Error(ErrorCode::TailUnbounded, "eta tail needs |q| < 1/2");
      const long K = 64;
      T logP = 0;
      T x = r0;
      for (long n = 1; n <= K; ++n, x *= r0) logP -= log(one - x);
      logP += x / ((one - r0) * (one - x));  // x = r0^{K+1}
      T logM = T(power) * log(r0) + T(24 * power) * logP;
      T rho = r / r0;
      // max_{n>N} n^p rho^n: decreasing once n >= p/log(1/rho)
      long n = N + 1;
      T lrho = log(rho);
      while (p > 0 && T(n) < T(p) / -lrho) ++n;
      T best = T(N + 1);
      T lbest = T(p) * log(best) + best * lrho;
      T ln = T(p) * log(T(n)) + T(n) * lrho;
      if (ln > lbest) lbest = ln;
      return exp(lbest + logM) * (1 + 64 * eps<T>());
    }
  }
  return T(0);
}

// A series prepared for repeated evaluation at working type T.
template <class T>
class SeriesEvaluator {
 public:
  SeriesEvaluator() = default;
  SeriesEvaluator(const RationalSeries& s, TailBound tail) : tail_(tail) { load(s); }
  SeriesEvaluator(const IntegerSeries& s, TailBound tail) : tail_(tail) { load(to_rational_series(s)); }

  long lead() const { return lead_; }
  long trunc() const { return trunc_; }
  const TailBound& tail() const { return tail_; }

  CertValue<T> operator()(const Complex<T>& tau, const T& tau_err = T(0)) const;

  // bound on |d/dx f(x + i y)| for real x
  T lipschitz_x(const T& y) const;

  // sum |a_n| r^n including the tail (majorant on the circle |q| = r)
  T majorant(const T& y) const;

 private:
  void load(const RationalSeries& s) {
    lead_ = s.lead();
    trunc_ = s.trunc();
    c_.clear();
    for (long n = s.lead(); n <= s.trunc(); ++n) c_.push_back(from_mpq<T>(s.coeff(n)));
  }
  T abs_coeff(size_t i) const {
    using std::abs;
    return abs(c_[i]);
  }

  long lead_ = 0;
  long trunc_ = -1;
  std::vector<T> c_;
  TailBound tail_;
};

template <class T>
void check_height(const Complex<T>& tau) {
  if (tau.im < T(kMinHeight) * (1 - 1e-12))
    throw Error(ErrorCode::DomainError, "evaluation point below height 0.4");
}

// q = e^{2 pi i tau} as a ball, with tau known to within tau_err
template <class T>
CertValue<T> nome(const Complex<T>& tau, const T& tau_err = T(0)) {
  using std::abs;
  using std::exp;
  T tp = 2 * pi<T>();
  T r = exp(-tp * tau.im);
  T ang = tp * tau.re;
  CertValue<T> q(r * expi(ang));
  // rounding of r, of the angle, and of cos/sin
  T rel = (16 + 4 * abs(ang) + 4 * tp * abs(tau.im)) * eps<T>();
  if (tau_err > 0) rel += exp(tp * tau_err) - 1;
  q.err = r * rel;
  return q;
}

template <class T>
CertValue<T> SeriesEvaluator<T>::operator()(const Complex<T>& tau, const T& tau_err) const {
  using std::abs;
  check_height(tau);
  CertValue<T> q = nome(tau, tau_err);
  T r = nome_upper(tau.im - tau_err);
  // nonnegative powers by Horner in ball arithmetic
  CertValue<T> acc(Complex<T>(T(0)));
  T conv = 0;  // conversion error of the coefficients
  long top = trunc_;
  for (long n = top; n >= 0; --n) {
    acc = acc * q;
    if (n >= lead_) {
      acc.value.re += c_[static_cast<size_t>(n - lead_)];
      acc.err += round_pad(acc.mag());
    }
  }
  for (long n = std::max(0L, lead_); n <= top; ++n) {
    using std::pow;
    conv += abs_coeff(static_cast<size_t>(n - lead_)) * pow(r, n);
  }
  // negative powers, at most a few
  if (lead_ < 0) {
    CertValue<T> qi = CertValue<T>(Complex<T>(T(1))) / q;
    CertValue<T> p = qi;
    for (long n = -1; n >= lead_; --n) {
      const T& c = c_[static_cast<size_t>(n - lead_)];
      acc = acc + scale(p, c);
      conv += abs_coeff(static_cast<size_t>(n - lead_)) * p.upper();
      p = p * qi;
    }
  }
  acc.err += conv * 2 * eps<T>() + tail_.sum<T>(trunc_, r, 0);
  return acc;
}

template <class T>
T SeriesEvaluator<T>::lipschitz_x(const T& y) const {
  using std::pow;
  T r = nome_upper(y);
  T s = 0;
  for (long n = lead_; n <= trunc_; ++n) {
    if (n == 0) continue;
    T an = abs_coeff(static_cast<size_t>(n - lead_));
    s += an * T(n < 0 ? -n : n) * pow(r, n);
  }
  s += tail_.sum<T>(trunc_, r, 1);
  return 2 * pi<T>() * s * (1 + 64 * eps<T>());
}

template <class T>
T SeriesEvaluator<T>::majorant(const T& y) const {
  using std::pow;
  T r = nome_upper(y);
  T s = 0;
  for (long n = lead_; n <= trunc_; ++n) s += abs_coeff(static_cast<size_t>(n - lead_)) * pow(r, n);
  return (s + tail_.sum<T>(trunc_, r, 0)) * (1 + 64 * eps<T>());
}

// pentagonal sum; tail over k > K bounded by 2 r^{(K+1)(3K+2)/2} / (1 - r^{3K+4})
template <class T>
CertValue<T> eval_eta_sum(const Complex<T>& tau, int K, const T& tau_err = T(0)) {
  using std::pow;
  check_height(tau);
  CertValue<T> q = nome(tau, tau_err);
  T r = nome_upper(tau.im - tau_err);
  CertValue<T> acc(Complex<T>(T(1)));
  for (long k = 1; k <= K; ++k) {
    CertValue<T> a = pow(q, static_cast<unsigned long>(k * (3 * k - 1) / 2));
    CertValue<T> b = pow(q, static_cast<unsigned long>(k * (3 * k + 1) / 2));
    CertValue<T> s = a + b;
    acc = (k % 2) ? acc - s : acc + s;
  }
  long e = (K + 1) * (3 * K + 2) / 2;
  acc.err += 2 * pow(r, e) / (1 - pow(r, 3 * K + 4)) * (1 + 16 * eps<T>());
  return acc;
}

template <class T>
int eta_terms_for(const T& y) {
  using std::pow;
  T r = nome_upper(y);
  T target = eps<T>() / 16;
  for (int K = 1; K < 10000; ++K) {
    long e = (K + 1) * (3 * K + 2) / 2;
    if (2 * pow(r, e) < target) return K;
  }
  return 10000;
}

// Delta = q (pentagonal sum)^24
template <class T>
CertValue<T> eval_delta_eta(const Complex<T>& tau, int terms, const T& tau_err = T(0)) {
  CertValue<T> p = eval_eta_sum(tau, terms, tau_err);
  return nome(tau, tau_err) * pow(p, 24);
}
template <class T>
CertValue<T> eval_delta_eta(const Complex<T>& tau) {
  return eval_delta_eta(tau, eta_terms_for(tau.im));
}

template <class T>
CertValue<T> eval_series(const RationalSeries& s, const Complex<T>& tau, const TailBound& tail) {
  return SeriesEvaluator<T>(s, tail)(tau);
}

// Standard forms at working type T, for points of height >= min_height.
// Truncations are chosen so the tail is below the working epsilon.
template <class T>
class FormEvaluator {
 public:
  explicit FormEvaluator(double min_height = kMinHeight);

  double min_height() const { return min_height_; }
  unsigned bits() const { return bits_; }
  long trunc() const { return N_; }

  CertValue<T> e2(const Complex<T>& tau, const T& tau_err = T(0)) const { return e2_(tau, tau_err); }
  CertValue<T> e4(const Complex<T>& tau, const T& tau_err = T(0)) const { return e4_(tau, tau_err); }
  CertValue<T> e6(const Complex<T>& tau, const T& tau_err = T(0)) const { return e6_(tau, tau_err); }
  CertValue<T> j(const Complex<T>& tau, const T& tau_err = T(0)) const { return j_(tau, tau_err); }
  CertValue<T> delta(const Complex<T>& tau, const T& tau_err = T(0)) const {
    return eval_delta_eta(tau, eta_terms_, tau_err);
  }
  CertValue<T> eisenstein(long kprime, const Complex<T>& tau, const T& tau_err = T(0)) const;

  const SeriesEvaluator<T>& series_e4() const { return e4_; }
  const SeriesEvaluator<T>& series_e6() const { return e6_; }
  const SeriesEvaluator<T>& series_j() const { return j_; }
  const SeriesEvaluator<T>& series_delta() const { return d_; }

 private:
  double min_height_;
  unsigned bits_;
  long N_;
  int eta_terms_;
  SeriesEvaluator<T> e2_, e4_, e6_, j_, d_;
};

template <class T>
unsigned precision_bits() {
  if constexpr (std::is_same_v<T, Multi>) return static_cast<unsigned>(mpfr_get_prec(Multi(0).backend().data()));
  else return std::numeric_limits<T>::digits;
}

template <class T>
FormEvaluator<T>::FormEvaluator(double min_height) : min_height_(min_height), bits_(precision_bits<T>()) {
  T r = nome_upper(T(min_height));
  T target = eps<T>() / 64;
  // one truncation serves all series; the j tail decides it
  long N = 8;
  while (TailBound::jcoeff().sum<T>(N, r, 0) > target || TailBound::eisenstein(14).sum<T>(N, r, 0) > target) N += 8;
  N_ = N;
  eta_terms_ = eta_terms_for(T(min_height));
  e2_ = SeriesEvaluator<T>(mz::eisenstein(2, N), TailBound::eisenstein(2));
  e4_ = SeriesEvaluator<T>(mz::eisenstein(4, N), TailBound::eisenstein(4));
  e6_ = SeriesEvaluator<T>(mz::eisenstein(6, N), TailBound::eisenstein(6));
  j_ = SeriesEvaluator<T>(jfunction_z(N), TailBound::jcoeff());
  d_ = SeriesEvaluator<T>(delta_z(N), TailBound::eta_product(1));
}

template <class T>
CertValue<T> FormEvaluator<T>::eisenstein(long kprime, const Complex<T>& tau, const T& tau_err) const {
  switch (kprime) {
    case 0: return CertValue<T>(Complex<T>(T(1)));
    case 4: return e4(tau, tau_err);
    case 6: return e6(tau, tau_err);
    case 8: {
      auto a = e4(tau, tau_err);
      return a * a;
    }
    case 10: return e4(tau, tau_err) * e6(tau, tau_err);
    case 14: {
      auto a = e4(tau, tau_err);
      return a * a * e6(tau, tau_err);
    }
  }
  throw Error(ErrorCode::UnsupportedWeight, "k' must be one of 0,4,6,8,10,14");
}

// F(z) for an integer polynomial at a ball, Horner with converted coefficients
template <class T>
CertValue<T> eval_poly(const IntPolynomial& F, const CertValue<T>& z) {
  using std::abs;
  if (F.is_zero()) return CertValue<T>(Complex<T>(T(0)));
  CertValue<T> acc(Complex<T>(T(0)));
  T zm = z.upper();
  T conv = 0, zp = 1;
  for (long i = F.degree(); i >= 0; --i) {
    T c = from_mpz<T>(F.coeffs()[i]);
    acc = acc * z;
    acc.value.re += c;
    acc.err += round_pad(acc.mag());
  }
  for (long i = 0; i <= F.degree(); ++i) {
    conv += abs(from_mpz<T>(F.coeffs()[i])) * zp;
    zp *= zm;
  }
  acc.err += conv * 2 * eps<T>();
  return acc;
}

// g = Delta^ell E_{k'} F(j)
template <class T>
CertValue<T> eval_form(const MillerForm& f, const Complex<T>& tau, const FormEvaluator<T>& ev, const T& tau_err = T(0)) {
  CertValue<T> d = ev.delta(tau, tau_err);
  CertValue<T> e = ev.eisenstein(f.id.kprime, tau, tau_err);
  CertValue<T> jv = ev.j(tau, tau_err);
  return pow(d, static_cast<unsigned long>(f.id.ell)) * e * eval_poly(f.faber, jv);
}

// arc point e^{i theta}, pi/2 <= theta <= 2 pi / 3
template <class T>
struct ArcPoint {
  T theta;

  explicit ArcPoint(T t) : theta(std::move(t)) {
    T lo = pi<T>() / 2, hi = 2 * pi<T>() / 3;
    T slack = 64 * eps<T>();
    if (theta < lo - slack || theta > hi + slack)
      throw Error(ErrorCode::DomainError, "angle outside [pi/2, 2pi/3]");
  }
  Complex<T> tau() const { return expi(theta); }
  T tau_err() const { return 8 * eps<T>(); }
};

template <class T>
struct ArcValues {
  CertReal<T> e2, e4, e6, delta;
};

template <class T>
ArcValues<T> arc_functions(const ArcPoint<T>& p, const FormEvaluator<T>& ev) {
  Complex<T> tau = p.tau();
  T te = p.tau_err();
  ArcValues<T> out;
  CertValue<T> u1 = expi_ball(p.theta);
  CertValue<T> u2 = expi_ball(T(2) * p.theta);
  CertValue<T> u3 = expi_ball(T(3) * p.theta);
  CertValue<T> u6 = expi_ball(T(6) * p.theta);
  CertValue<T> shift(Complex<T>(T(0), -3 / pi<T>()), 4 * eps<T>());
  out.e2 = (u1 * ev.e2(tau, te) + shift).real_checked("e2");
  out.e4 = (u2 * ev.e4(tau, te)).real_checked("e4");
  out.e6 = (u3 * ev.e6(tau, te)).real_checked("e6");
  out.delta = (u6 * ev.delta(tau, te)).real_checked("delta");
  return out;
}

template <class T>
CertReal<T> arc_form(const MillerForm& f, const ArcPoint<T>& p, const FormEvaluator<T>& ev) {
  CertValue<T> v = eval_form(f, p.tau(), ev, p.tau_err());
  CertValue<T> rot = expi_ball(T(f.id.k) * p.theta / 2);
  return (rot * v).real_checked("arc form");
}

// bits for evaluating f on the arc: the terms of F(j) reach sum |c_i| 1728^i while
// Delta^ell shrinks them by at least |Delta(rho)|^ell ~ 2^{-7.7 ell}
unsigned arc_precision_bits(const MillerForm& f, unsigned min_bits = 0);

struct LemniscateConstants {
  CertReal<long double> varpi;
  CertReal<long double> varpi_prime;
};

LemniscateConstants lemniscate_constants();

// plot data: theta,value,err rows for an arc function
struct ArcSample {
  long double theta;
  long double value;
  long double err;
};
std::vector<ArcSample> sample_arc(const std::string& fn, long double step, const MillerForm* form = nullptr);
std::string arc_csv(const std::vector<ArcSample>& rows);

}  // namespace mz
