#pragma once

#include <vector>

#include "millerzeros/polynomial.hpp"

namespace mz {

// coefficients in the basis T_0, T_1, ... of Chebyshev polynomials of the first kind
template <class C>
struct ChebyshevPoly {
  std::vector<C> coeffs;

  long degree() const {
    long d = static_cast<long>(coeffs.size()) - 1;
    while (d >= 0 && coeffs[d] == 0) --d;
    return d;
  }
};

// T_n in the monomial basis
template <class C>
Polynomial<C> chebyshev_t(unsigned n) {
  Polynomial<C> a(std::vector<C>{C(1)});
  if (n == 0) return a;
  Polynomial<C> b(std::vector<C>{C(0), C(1)});
  Polynomial<C> two_x(std::vector<C>{C(0), C(2)});
  for (unsigned i = 1; i < n; ++i) {
    Polynomial<C> c = two_x * b - a;
    a = b;
    b = c;
  }
  return b;
}

template <class C>
Polynomial<C> to_monomial(const ChebyshevPoly<C>& p) {
  Polynomial<C> acc;
  for (size_t i = 0; i < p.coeffs.size(); ++i)
    if (p.coeffs[i] != 0) acc = acc + p.coeffs[i] * chebyshev_t<C>(static_cast<unsigned>(i));
  return acc;
}

// exact over a field: peel off the top degree with T_d (leading coefficient 2^{d-1})
inline ChebyshevPoly<mpq_class> from_monomial(const RatPolynomial& p) {
  ChebyshevPoly<mpq_class> out;
  RatPolynomial r = p;
  out.coeffs.assign(static_cast<size_t>(std::max(0L, p.degree() + 1)), mpq_class(0));
  while (!r.is_zero()) {
    long d = r.degree();
    RatPolynomial t = chebyshev_t<mpq_class>(static_cast<unsigned>(d));
    mpq_class c = r.leading() / t.leading();
    out.coeffs[d] = c;
    r = r - c * t;
  }
  return out;
}

// (1+z)^n P((1-z)/(1+z)); n defaults to deg P
template <class C>
Polynomial<C> goursat_transform(const Polynomial<C>& p, long n = -1) {
  if (p.is_zero()) return p;
  if (n < 0) n = p.degree();
  Polynomial<C> one_minus(std::vector<C>{C(1), C(-1)});
  Polynomial<C> one_plus(std::vector<C>{C(1), C(1)});
  std::vector<Polynomial<C>> up(static_cast<size_t>(n + 1)), down(static_cast<size_t>(n + 1));
  up[0] = down[0] = Polynomial<C>(std::vector<C>{C(1)});
  for (long i = 1; i <= n; ++i) {
    up[i] = up[i - 1] * one_minus;
    down[i] = down[i - 1] * one_plus;
  }
  Polynomial<C> acc;
  for (long i = 0; i <= n; ++i)
    if (p.coeff(i) != 0) acc = acc + p.coeff(i) * (up[i] * down[n - i]);
  return acc;
}

}  // namespace mz
