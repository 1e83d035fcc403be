#pragma once

#include <string>
#include <utility>
#include <vector>

#include "millerzeros/chebyshev.hpp"
#include "millerzeros/evalnum.hpp"

namespace mz {

enum class Relation { Lt, Le, Gt, Ge, Approx, Within, Derived };

const char* relation_name(Relation r);

struct BoundLedgerEntry {
  std::string name;
  Relation rel = Relation::Derived;
  double claimed = 0;     // lower end for Within
  double claimed_hi = 0;  // Within only
  double tol = 0;         // Approx only
  double computed = 0;
  double err = 0;
  bool satisfied = false;
  std::string paper_ref;
  std::string method;
};

BoundLedgerEntry make_entry(std::string name, Relation rel, double claimed, double computed, double err,
                            std::string paper_ref, std::string method, double extra = 0);

bool all_satisfied(const std::vector<BoundLedgerEntry>& v);

// f_{M,a}(x) = sum_{n=-1}^{M} c(n) e^{-2 pi a n} e^{2 pi i n x}
template <class T>
CertValue<T> j_approx(int M, const T& a, const T& x) {
  using std::abs;
  using std::exp;
  if (M < 1) throw Error(ErrorCode::DomainError, "M must be at least 1");
  IntegerSeries j = jfunction_z(M);
  CertValue<T> acc(Complex<T>(T(0)));
  for (long n = -1; n <= M; ++n) {
    T ex = -2 * pi<T>() * a * T(n);
    T w = exp(ex) * from_mpz<T>(j.coeff(n));
    CertValue<T> t = scale(expi_ball(2 * pi<T>() * T(n) * x), w);
    t.err += abs(w) * (8 + 4 * abs(ex)) * eps<T>();
    acc = acc + t;
  }
  return acc;
}

// the closed-form tail bound, evaluated as printed
double j_approx_error(int M, double a);

struct MonotonicityCertificate {
  RatPolynomial re_f;      // Re f_{5,0.75} as a polynomial in z = cos 2 pi x
  RatPolynomial p;         // d/dz
  RatPolynomial goursat;   // transform of p
  std::vector<double> coeff_err;  // bound on each goursat coefficient's error
  CertReal<long double> z0;       // root of the transform
  CertReal<long double> w0;       // (1 - z0)/(1 + z0)
  CertReal<long double> x0;
  std::pair<double, double> decreasing_on, increasing_on;
};

MonotonicityCertificate monotonicity_certificate_075();

struct MagnitudeCertificate {
  std::vector<CertReal<long double>> b;  // Chebyshev coefficients of |g|^2
  RatPolynomial p;
  RatPolynomial goursat_dp;
  std::vector<double> coeff_err;
  CertReal<long double> g_half;  // |g(0.5)|
};

MagnitudeCertificate magnitude_certificate_065();

std::vector<BoundLedgerEntry> j_difference_bounds();
std::vector<BoundLedgerEntry> eisenstein_line_bounds();
std::vector<BoundLedgerEntry> arc_eisenstein_bounds();
std::vector<BoundLedgerEntry> delta_ledger();

double residue_term(double theta, long k, long m);
std::vector<BoundLedgerEntry> residue_ledger();

struct MrlReport {
  FormId id;
  bool hypothesis = false;  // ell > 4.5 m + 9.5
  double max_value = 0;
  double err = 0;
  double theta_at_max = 0;
  long points = 0;
  unsigned bits = 0;
  bool below_two() const { return max_value + err < 2; }
};

MrlReport proposition_mrl_check(const FormId& id, double grid_step = 1e-3, unsigned min_bits = 0);

struct ConstantsLedger {
  double c1 = 0, B1 = 0, B2 = 0, c2 = 0, alpha = 4.5, beta = 0;
  double B1_table = 0, B2_table = 0, c2_table = 0;  // from the table maxima themselves
  std::vector<BoundLedgerEntry> entries;
};

ConstantsLedger constants_ledger();

// everything, in a fixed order
std::vector<BoundLedgerEntry> full_ledger();

}  // namespace mz
