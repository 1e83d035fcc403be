#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "millerzeros/errors.hpp"

namespace mz {

inline void addmul(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void addmul(mpq_class& acc, const mpq_class& a, const mpq_class& b) { acc += a * b; }

inline mpz_class exact_quotient(const mpz_class& a, const mpz_class& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw Error(ErrorCode::NotInSpace, "inexact integer division in series arithmetic");
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}
inline mpq_class exact_quotient(const mpq_class& a, const mpq_class& b) { return a / b; }

// Truncated q-expansion sum_{n=lead}^{trunc} c_n q^n + O(q^{trunc+1}).
// A series that is zero up to its truncation has lead = trunc + 1 and no
// stored coefficients, so the multiplication rule below stays correct.
template <class C>
class QSeries {
 public:
  QSeries() = default;

  QSeries(long lead, std::vector<C> coeffs) : lead_(lead), c_(std::move(coeffs)) {
    trunc_ = lead_ + static_cast<long>(c_.size()) - 1;
    normalize();
  }
  QSeries(long lead, std::vector<C> coeffs, long trunc) : lead_(lead), c_(std::move(coeffs)), trunc_(trunc) {
    c_.resize(static_cast<size_t>(std::max(0L, trunc_ - lead_ + 1)));
    normalize();
  }

  static QSeries zero(long trunc) { return QSeries(trunc + 1, {}, trunc); }
  static QSeries constant(const C& c, long trunc) { return monomial(c, 0, trunc); }
  static QSeries monomial(const C& c, long e, long trunc) {
    if (e > trunc) return zero(trunc);
    return QSeries(e, {c}, trunc);
  }

  long lead() const { return lead_; }
  long trunc() const { return trunc_; }
  const std::vector<C>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  // coefficient of q^n; anything below the lead is zero, above trunc unknown
  C coeff(long n) const {
    if (n > trunc_) throw Error(ErrorCode::BadIndex, "coefficient beyond truncation: " + std::to_string(n));
    if (n < lead_) return C(0);
    return c_[static_cast<size_t>(n - lead_)];
  }
  const C& leading() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroLeading, "zero series has no leading coefficient");
    return c_.front();
  }

  bool operator==(const QSeries& o) const { return lead_ == o.lead_ && trunc_ == o.trunc_ && c_ == o.c_; }

 private:
  void normalize() {
    size_t z = 0;
    while (z < c_.size() && c_[z] == 0) ++z;
    if (z) {
      c_.erase(c_.begin(), c_.begin() + static_cast<long>(z));
      lead_ += static_cast<long>(z);
    }
    if (c_.empty()) lead_ = trunc_ + 1;
  }

  long lead_ = 0;
  std::vector<C> c_;
  long trunc_ = -1;
};

using RationalSeries = QSeries<mpq_class>;
using IntegerSeries = QSeries<mpz_class>;

template <class C>
QSeries<C> series_truncate(const QSeries<C>& a, long N) {
  if (N >= a.trunc()) return a;
  std::vector<C> c;
  for (long n = a.lead(); n <= N; ++n) c.push_back(a.coeff(n));
  return QSeries<C>(a.lead(), std::move(c), N);
}

template <class C>
QSeries<C> series_add(const QSeries<C>& a, const QSeries<C>& b) {
  long N = std::min(a.trunc(), b.trunc());
  long lo = std::min(a.lead(), b.lead());
  if (lo > N) return QSeries<C>::zero(N);
  std::vector<C> c(static_cast<size_t>(N - lo + 1));
  for (long n = lo; n <= N; ++n) {
    if (n >= a.lead()) c[n - lo] += a.coeffs()[n - a.lead()];
    if (n >= b.lead()) c[n - lo] += b.coeffs()[n - b.lead()];
  }
  return QSeries<C>(lo, std::move(c), N);
}

template <class C>
QSeries<C> series_scale(const QSeries<C>& a, const C& s) {
  std::vector<C> c = a.coeffs();
  for (auto& x : c) x *= s;
  return QSeries<C>(a.lead(), std::move(c), a.trunc());
}

template <class C>
QSeries<C> series_neg(const QSeries<C>& a) {
  return series_scale(a, C(-1));
}

template <class C>
QSeries<C> series_sub(const QSeries<C>& a, const QSeries<C>& b) {
  return series_add(a, series_neg(b));
}

// multiply by q^k
template <class C>
QSeries<C> series_shift(const QSeries<C>& a, long k) {
  return QSeries<C>(a.lead() + k, a.coeffs(), a.trunc() + k);
}

template <class C>
QSeries<C> series_mul(const QSeries<C>& a, const QSeries<C>& b) {
  long N = std::min(a.trunc() + b.lead(), b.trunc() + a.lead());
  long lo = a.lead() + b.lead();
  if (a.is_zero() || b.is_zero() || lo > N) return QSeries<C>::zero(N);
  size_t len = static_cast<size_t>(N - lo + 1);
  std::vector<C> c(len);
  const auto& A = a.coeffs();
  const auto& B = b.coeffs();
  for (size_t i = 0; i < A.size() && i < len; ++i) {
    if (A[i] == 0) continue;
    size_t lim = std::min(B.size(), len - i);
    for (size_t j = 0; j < lim; ++j) addmul(c[i + j], A[i], B[j]);
  }
  return QSeries<C>(lo, std::move(c), N);
}

template <class C>
QSeries<C> series_pow(const QSeries<C>& a, unsigned long e) {
  QSeries<C> result = QSeries<C>::constant(C(1), a.trunc() - a.lead());
  if (e == 0) return result;
  QSeries<C> base = a;
  bool first = true;
  while (e) {
    if (e & 1) {
      result = first ? base : series_mul(result, base);
      first = false;
    }
    e >>= 1;
    if (e) base = series_mul(base, base);
  }
  return result;
}

template <class C>
QSeries<C> series_recip(const QSeries<C>& a) {
  if (a.is_zero() || a.leading() == 0) throw Error(ErrorCode::ZeroLeading, "series_recip of a series with zero leading term");
  long n0 = a.lead();
  long rel = a.trunc() - n0;  // known relative order
  const auto& A = a.coeffs();
  std::vector<C> b(static_cast<size_t>(rel + 1));
  const C& c0 = A[0];
  b[0] = exact_quotient(C(1), c0);
  for (long n = 1; n <= rel; ++n) {
    C s = 0;
    for (long i = 1; i <= n && i < static_cast<long>(A.size()); ++i) addmul(s, A[i], b[n - i]);
    b[n] = exact_quotient(C(-s), c0);
  }
  return QSeries<C>(-n0, std::move(b), -n0 + rel);
}

// q d/dq
template <class C>
QSeries<C> series_qderiv(const QSeries<C>& a) {
  std::vector<C> c = a.coeffs();
  for (size_t i = 0; i < c.size(); ++i) c[i] *= C(a.lead() + static_cast<long>(i));
  return QSeries<C>(a.lead(), std::move(c), a.trunc());
}

IntegerSeries to_integer_series(const RationalSeries& s);
RationalSeries to_rational_series(const IntegerSeries& s);

// exact Bernoulli number B_n (B_1 = +1/2 convention; only even n used)
mpq_class bernoulli(unsigned n);

RationalSeries eisenstein(long k, long N);
RationalSeries delta(long N);
RationalSeries jfunction(long N);

// integer-coefficient versions used by the basis construction
IntegerSeries eisenstein_z(long k, long N);
IntegerSeries delta_z(long N);
IntegerSeries jfunction_z(long N);

struct RamanujanReport {
  RationalSeries e2_residual;
  RationalSeries e4_residual;
  RationalSeries delta_residual;
  bool all_zero() const { return e2_residual.is_zero() && e4_residual.is_zero() && delta_residual.is_zero(); }
};

RamanujanReport ramanujan_derivative_check(long N);

std::string to_text(const RationalSeries& s);

// weight decomposition k = 12*ell + kprime with kprime in {0,4,6,8,10,14}
struct FormId {
  long k = 0;
  long ell = 0;
  long kprime = 0;
  long m = 0;

  static FormId from_weight(long k, long m);
};

}  // namespace mz
