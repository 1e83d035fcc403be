#include "millerzeros/miller.hpp"

#include <type_traits>

namespace mz {

long default_trunc(const FormId& id) { return id.ell + id.m + 8; }

RawBasis::RawBasis(long k, long N) {
  FormId id = FormId::from_weight(k, 0);
  k_ = k;
  ell_ = id.ell;
  kprime_ = id.kprime;
  N_ = std::max(N, ell_ + 1);
  // Delta^ell E_{k'} must be known to N + ell since each factor of j lowers it by one
  IntegerSeries d = series_pow(delta_z(N_ + 1), static_cast<unsigned long>(ell_));
  IntegerSeries s = series_mul(d, eisenstein_z(kprime_, N_ + ell_));
  IntegerSeries j = jfunction_z(N_ + 1);
  e_.resize(static_cast<size_t>(ell_ + 1));
  e_[ell_] = s;
  for (long n = ell_ - 1; n >= 0; --n) e_[n] = series_mul(e_[n + 1], j);
  for (auto& x : e_) x = series_truncate(x, N_);
}

const IntegerSeries& RawBasis::e(long n) const {
  if (n < 0 || n > ell_) throw Error(ErrorCode::BadIndex, "e_{k,n} with n=" + std::to_string(n));
  return e_[n];
}

IntegerSeries raw_basis(const FormId& id, long N) {
  if (id.m < 0 || id.m > id.ell) throw Error(ErrorCode::BadIndex, "m outside 0..ell");
  return RawBasis(id.k, N).e(id.m);
}

namespace {

template <class C>
std::vector<C> cancel_against(QSeries<C>& r, const RawBasis& basis, long from) {
  long ell = basis.ell();
  std::vector<C> F(static_cast<size_t>(ell + 1));
  for (long n = from; n <= ell; ++n) {
    C c = r.coeff(n);
    if (c == 0) continue;
    QSeries<C> en;
    if constexpr (std::is_same_v<C, mpz_class>) en = basis.e(n);
    else en = to_rational_series(basis.e(n));
    r = series_sub(r, series_scale(en, c));
    F[ell - n] += c;
  }
  return F;
}

}  // namespace

MillerForm miller_form(long k, long m, long N) {
  FormId id = FormId::from_weight(k, m);
  RawBasis basis(k, N);
  IntegerSeries g = basis.e(m);
  std::vector<mpz_class> F = cancel_against(g, basis, m + 1);
  for (auto& c : F) c = -c;
  F[id.ell - m] = 1;
  return MillerForm{id, g, IntPolynomial(std::move(F))};
}

MillerForm miller_form(long k, long m) {
  FormId id = FormId::from_weight(k, m);
  return miller_form(k, m, default_trunc(id));
}

std::vector<MillerForm> miller_basis(long k, long N, bool include_gap) {
  FormId id0 = FormId::from_weight(k, 0);
  long ell = id0.ell;
  RawBasis basis(k, N);
  std::vector<IntegerSeries> g(static_cast<size_t>(ell + 1));
  std::vector<RatPolynomial> F(static_cast<size_t>(ell + 1));
  long lowest = include_gap ? 0 : 1;
  for (long m = ell; m >= lowest; --m) {
    RationalSeries gm = to_rational_series(basis.e(m));
    RatPolynomial fm = RatPolynomial::monomial(1, static_cast<size_t>(ell - m));
    for (long n = m + 1; n <= ell; ++n) {
      mpq_class c = gm.coeff(n);
      if (c == 0) continue;
      gm = series_sub(gm, series_scale(to_rational_series(g[n]), c));
      fm = fm - c * F[n];
    }
    // the elimination is over Q; integrality is checked, not assumed
    g[m] = to_integer_series(gm);
    F[m] = fm;
  }
  std::vector<MillerForm> out;
  for (long m = lowest; m <= ell; ++m) {
    std::vector<mpz_class> z;
    for (const auto& c : F[m].coeffs()) {
      if (c.get_den() != 1) throw Error(ErrorCode::NotInSpace, "non-integral Faber coefficient " + c.get_str());
      z.push_back(c.get_num());
    }
    out.push_back(MillerForm{FormId::from_weight(k, m), g[m], IntPolynomial(std::move(z))});
  }
  return out;
}

namespace {

template <class C>
std::vector<C> faber_core(const QSeries<C>& f, const FormId& id) {
  if (f.trunc() < id.ell + 1)
    throw Error(ErrorCode::NotInSpace, "series truncation too short to identify a weight-" + std::to_string(id.k) + " form");
  RawBasis basis(id.k, f.trunc());
  QSeries<C> r = series_truncate(f, basis.trunc());
  if (!r.is_zero() && r.lead() < 0) throw Error(ErrorCode::NotInSpace, "form has a pole at infinity");
  std::vector<C> F = cancel_against(r, basis, 0);
  if (!r.is_zero())
    throw Error(ErrorCode::NotInSpace, "residual q^" + std::to_string(r.lead()) + " coefficient " + r.leading().get_str());
  return F;
}

}  // namespace

IntPolynomial faber_of(const IntegerSeries& f, const FormId& id) {
  return IntPolynomial(faber_core(f, id));
}

RatPolynomial faber_of(const RationalSeries& f, const FormId& id) {
  return RatPolynomial(faber_core(f, id));
}

IntegerSeries reconstruct(const FormId& id, const IntPolynomial& F, long N) {
  long d = std::max(0L, F.degree());
  IntegerSeries base = series_mul(series_pow(delta_z(N + d + 1), static_cast<unsigned long>(id.ell)),
                                  eisenstein_z(id.kprime, N + d + id.ell));
  IntegerSeries j = jfunction_z(N + d + 1);
  IntegerSeries acc = IntegerSeries::zero(N + d + id.ell);
  for (long i = 0; i <= F.degree(); ++i) {
    if (F.coeffs()[i] == 0) continue;
    acc = series_add(acc, series_scale(series_mul(base, series_pow(j, static_cast<unsigned long>(i))), F.coeffs()[i]));
  }
  return series_truncate(acc, N);
}

}  // namespace mz
