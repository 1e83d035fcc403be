#include "millerzeros/qseries.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace mz {

const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ZeroLeading: return "ZeroLeading";
    case ErrorCode::UnsupportedWeight: return "UnsupportedWeight";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::NotInSpace: return "NotInSpace";
    case ErrorCode::TailUnbounded: return "TailUnbounded";
    case ErrorCode::NotReal: return "NotReal";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::InconclusiveSign: return "InconclusiveSign";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::Usage: return "Usage";
  }
  return "Error";
}

IntegerSeries to_integer_series(const RationalSeries& s) {
  std::vector<mpz_class> c;
  c.reserve(s.coeffs().size());
  for (const auto& x : s.coeffs()) {
    if (x.get_den() != 1) throw Error(ErrorCode::NotInSpace, "series has non-integer coefficient " + x.get_str());
    c.push_back(x.get_num());
  }
  return IntegerSeries(s.lead(), std::move(c), s.trunc());
}

RationalSeries to_rational_series(const IntegerSeries& s) {
  std::vector<mpq_class> c(s.coeffs().begin(), s.coeffs().end());
  return RationalSeries(s.lead(), std::move(c), s.trunc());
}

mpq_class bernoulli(unsigned n) {
  static std::mutex mu;
  static std::vector<mpq_class> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (n < cache.size()) return cache[n];
  // Akiyama-Tanigawa, recomputed for the whole prefix
  unsigned top = std::max<unsigned>(n, 2 * static_cast<unsigned>(cache.size()) + 2);
  std::vector<mpq_class> out(top + 1);
  std::vector<mpq_class> a(top + 1);
  for (unsigned m = 0; m <= top; ++m) {
    a[m] = mpq_class(1, m + 1);
    for (unsigned j = m; j >= 1; --j) {
      a[j - 1] = j * (a[j - 1] - a[j]);
      a[j - 1].canonicalize();
    }
    out[m] = a[0];
  }
  cache = std::move(out);
  return cache[n];
}

namespace {

// sigma_{k-1}(n) for 1 <= n <= N
std::vector<mpz_class> divisor_sums(long k, long N) {
  std::vector<mpz_class> s(static_cast<size_t>(N + 1));
  for (long d = 1; d <= N; ++d) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
    for (long n = d; n <= N; n += d) s[n] += p;
  }
  return s;
}

IntegerSeries pentagonal(long N) {
  std::vector<mpz_class> c(static_cast<size_t>(N + 1));
  c[0] = 1;
  for (long k = 1;; ++k) {
    long e1 = k * (3 * k - 1) / 2;
    long e2 = k * (3 * k + 1) / 2;
    if (e1 > N) break;
    int sg = (k % 2) ? -1 : 1;
    c[e1] += sg;
    if (e2 <= N) c[e2] += sg;
  }
  return IntegerSeries(0, std::move(c), N);
}

}  // namespace

RationalSeries eisenstein(long k, long N) {
  if (k < 0 || k % 2 != 0) throw Error(ErrorCode::UnsupportedWeight, "weight must be even and non-negative, got " + std::to_string(k));
  if (k == 0) return RationalSeries::constant(1, N);
  mpq_class gamma = mpq_class(2 * k) / bernoulli(static_cast<unsigned>(k));
  auto sig = divisor_sums(k, N);
  std::vector<mpq_class> c(static_cast<size_t>(N + 1));
  c[0] = 1;
  for (long n = 1; n <= N; ++n) c[n] = -gamma * sig[n];
  return RationalSeries(0, std::move(c), N);
}

IntegerSeries eisenstein_z(long k, long N) {
  switch (k) {
    case 0: return IntegerSeries::constant(1, N);
    case 4:
    case 6: return to_integer_series(eisenstein(k, N));
    case 8: {
      auto e4 = eisenstein_z(4, N);
      return series_mul(e4, e4);
    }
    case 10: return series_mul(eisenstein_z(4, N), eisenstein_z(6, N));
    case 14: {
      auto e4 = eisenstein_z(4, N);
      return series_mul(series_mul(e4, e4), eisenstein_z(6, N));
    }
    default: return to_integer_series(eisenstein(k, N));
  }
}

IntegerSeries delta_z(long N) {
  if (N < 1) throw Error(ErrorCode::BadIndex, "delta needs N >= 1");
  auto p = pentagonal(N - 1);
  return series_shift(series_pow(p, 24), 1);
}

RationalSeries delta(long N) { return to_rational_series(delta_z(N)); }

IntegerSeries jfunction_z(long N) {
  if (N < 1) throw Error(ErrorCode::BadIndex, "jfunction needs N >= 1");
  auto e4 = eisenstein_z(4, N + 1);
  auto e4c = series_mul(series_mul(e4, e4), e4);
  return series_truncate(series_mul(e4c, series_recip(delta_z(N + 2))), N);
}

RationalSeries jfunction(long N) { return to_rational_series(jfunction_z(N)); }

RamanujanReport ramanujan_derivative_check(long N) {
  auto e2 = eisenstein(2, N);
  auto e4 = eisenstein(4, N);
  auto e6 = eisenstein(6, N);
  auto d = delta(N + 1);
  RamanujanReport r;
  r.e2_residual = series_sub(series_qderiv(e2), series_scale(series_sub(series_mul(e2, e2), e4), mpq_class(1, 12)));
  r.e4_residual = series_sub(series_qderiv(e4), series_scale(series_sub(series_mul(e2, e4), e6), mpq_class(1, 3)));
  r.delta_residual = series_truncate(series_sub(series_qderiv(d), series_mul(e2, d)), N);
  return r;
}

std::string to_text(const RationalSeries& s) {
  if (s.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long n = s.lead(); n <= s.trunc(); ++n) {
    mpq_class c = s.coeff(n);
    if (c == 0) continue;
    bool neg = c < 0;
    mpq_class a = abs(c);
    if (neg) os << '-';
    else if (!first) os << '+';
    first = false;
    if (n == 0 || a != 1) os << a.get_str();
    if (n == 1) os << 'q';
    else if (n != 0) os << "q^" << n;
  }
  return os.str();
}

FormId FormId::from_weight(long k, long m) {
  if (k < 0 || k % 2 != 0 || k == 2)
    throw Error(ErrorCode::UnsupportedWeight, "no modular forms of weight " + std::to_string(k));
  FormId id;
  id.k = k;
  long r = k % 12;
  id.kprime = (r == 2) ? 14 : r;
  id.ell = (k - id.kprime) / 12;
  id.m = m;
  if (m < 0 || m > id.ell)
    throw Error(ErrorCode::BadIndex, "m=" + std::to_string(m) + " outside 0.." + std::to_string(id.ell));
  return id;
}

}  // namespace mz
