#pragma once

#include <string>
#include <vector>

#include "millerzeros/evalnum.hpp"
#include "millerzeros/miller.hpp"
#include "millerzeros/polynomial.hpp"

namespace mz {

// closed rational interval; lo == hi for a root found exactly
struct RootInterval {
  mpq_class lo, hi;

  double mid() const { return mpq_class((lo + hi) / 2).get_d(); }
  bool exact() const { return lo == hi; }
  bool intersects(const RootInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

// p/content(p) with the sign kept
IntPolynomial strip_content(const IntPolynomial& p);

class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p);  // p square-free
  int variations_at(const mpq_class& x) const;
  int variations_at_infinity(int side) const;   // side = +1 or -1
  // distinct roots in (a, b]
  long count(const mpq_class& a, const mpq_class& b) const { return variations_at(a) - variations_at(b); }
  long count_all() const { return variations_at_infinity(-1) - variations_at_infinity(1); }
  const std::vector<IntPolynomial>& seq() const { return seq_; }

 private:
  std::vector<IntPolynomial> seq_;
};

// one interval per distinct real root in [lo, hi], sorted, each of width <= width
std::vector<RootInterval> sturm_isolate(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi,
                                        const mpq_class& width = mpq_class(1728, 1000000));

// distinct real roots
long count_real_roots(const IntPolynomial& p);

// multiplicity of the root x of p (0 if not a root)
long root_multiplicity(const IntPolynomial& p, const mpq_class& x);

struct OffInterval {
  long real_outside = 0;   // with multiplicity
  long complex_pairs = 0;  // with multiplicity
  long real_inside = 0;    // in [0, 1728], with multiplicity
  long square_free_defect = 0;  // deg p - deg squarefree(p)
};

OffInterval count_off_interval(const IntPolynomial& p);

// h(theta) = k theta / 2 + 2 pi m cos theta
struct HFunction {
  long k, m;
  long double operator()(long double t) const;
  long double inverse(long double value) const;  // on [pi/2, 2pi/3], by bisection
};

struct AngleInterval {
  long double lo, hi;
  long double mid() const { return (lo + hi) / 2; }
};

struct ArcOptions {
  unsigned min_bits = 0;
  int retries = 3;             // doublings of the precision on an inconclusive sign
  int refine_depth = 6;        // 4-way splits of equal-sign stretches when zeros are missing
  long double endpoint_gap = 1e-4L;
};

struct ArcLocalization {
  std::vector<AngleInterval> intervals;
  long target = 0;  // zeros expected in the open arc: deg F minus roots at 0 and 1728
  unsigned bits = 0;
  int retries = 0;
  long evaluations = 0;
  bool complete() const { return static_cast<long>(intervals.size()) == target; }
};

ArcLocalization arc_zero_localize(const MillerForm& f, const ArcOptions& opt = {});

// bisect each interval down to width tol (certified signs at the working precision)
std::vector<AngleInterval> refine_zero_angles(const MillerForm& f, const std::vector<AngleInterval>& iv,
                                              long double tol = 1e-10L, unsigned min_bits = 0);

// j is decreasing along the arc, so the image of [lo, hi] is [j(hi), j(lo)] padded by the errors
RootInterval j_of_angle(const AngleInterval& a);

struct ZeroReport {
  FormId id;
  std::vector<AngleInterval> arc_angles;
  std::vector<RootInterval> faber_roots_in;  // open interval (0, 1728)
  std::vector<RootInterval> faber_roots_outside;  // real, outside [0, 1728]
  long real_outside = 0;
  long complex_pairs = 0;
  long root_at_0 = 0;     // multiplicity of F(0) = 0
  long root_at_1728 = 0;
  long square_free_defect = 0;
  long ord_infty = 0;
  long trivial_i = 0;     // includes 2 * root_at_1728
  long trivial_rho = 0;   // includes 3 * root_at_0
  long interior_zeros = 0;  // nontrivial zeros in the fundamental domain, with multiplicity
  bool arc_done = false;
  bool arc_complete = false;
  bool cross_ok = false;  // j-images of arc intervals meet the Faber intervals one to one
  bool valence_ok = false;
  unsigned bits = 0;
  int retries = 0;
};

struct ZeroOptions {
  bool arc = true;
  bool refine = true;
  ArcOptions arc_opt;
};

ZeroReport zero_report(const MillerForm& f, const ZeroOptions& opt = {});

// 12 ord_inf + 6 ord_i + 4 ord_rho + 12 sum = k
bool valence_reconcile(const ZeroReport& r);

bool cross_check(const std::vector<AngleInterval>& arc, const std::vector<RootInterval>& faber);

struct Thm2Row {
  FormId id;
  long degree = 0;
  long roots_in = 0;
  long real_outside = 0;
  long complex_pairs = 0;
  bool simple = false;
  bool passed = false;
};

struct Thm2Report {
  std::vector<Thm2Row> rows;
  bool all_passed() const;
};

// g_{k,1} for 1 <= ell <= 14 and every k'
Thm2Report verify_theorem_m1(bool throw_on_failure = false);

struct DistributionStats {
  FormId id;
  long zeros = 0;
  double star_discrepancy = 0;
  std::vector<long> bins;
  double max_bin_deviation = 0;  // max |count - N/bins| / (N/bins)
};

// angles in [pi/2, 2pi/3], compared with the uniform measure there
DistributionStats distribution_stats(const FormId& id, std::vector<long double> angles, int bins);

std::vector<DistributionStats> distribution_sweep(const std::vector<long>& ks, long m, int bins, unsigned min_bits = 0);

}  // namespace mz
