#pragma once

#include <vector>

#include "millerzeros/polynomial.hpp"
#include "millerzeros/qseries.hpp"

namespace mz {

struct MillerForm {
  FormId id;
  IntegerSeries series;  // g_{k,m} = q^m + O(q^{ell+1})
  IntPolynomial faber;   // F_{k,m}, monic of degree ell - m
};

// default truncation: ell + m + 8
long default_trunc(const FormId& id);

// e_{k,n} = Delta^ell E_{k'} j^{ell-n} for n = 0..ell, each known to at least q^N
class RawBasis {
 public:
  RawBasis(long k, long N);
  long k() const { return k_; }
  long ell() const { return ell_; }
  long kprime() const { return kprime_; }
  long trunc() const { return N_; }
  const IntegerSeries& e(long n) const;

 private:
  long k_, ell_, kprime_, N_;
  std::vector<IntegerSeries> e_;
};

IntegerSeries raw_basis(const FormId& id, long N);

// single basis element by lowest-term cancellation against the e_{k,n}
MillerForm miller_form(long k, long m, long N);
MillerForm miller_form(long k, long m);

// full reduced-row-echelon basis by back substitution; m = 1..ell, plus m = 0 if asked
std::vector<MillerForm> miller_basis(long k, long N, bool include_gap = false);

// unique F with f = Delta^ell E_{k'} F(j); throws NotInSpace otherwise
IntPolynomial faber_of(const IntegerSeries& f, const FormId& id);
RatPolynomial faber_of(const RationalSeries& f, const FormId& id);

// Delta^ell E_{k'} F(j) computed from powers of j (independent of RawBasis)
IntegerSeries reconstruct(const FormId& id, const IntPolynomial& F, long N);

}  // namespace mz
