#include "millerzeros/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace mz {

using LD = long double;

IntPolynomial strip_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = abs(content(p));
  std::vector<mpz_class> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

SturmChain::SturmChain(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::DomainError, "Sturm chain of the zero polynomial");
  seq_.push_back(strip_content(p));
  if (p.degree() == 0) return;
  seq_.push_back(strip_content(p.derivative()));
  for (;;) {
    IntPolynomial r = pseudo_remainder(seq_[seq_.size() - 2], seq_.back());
    if (r.is_zero()) break;
    seq_.push_back(strip_content(mpz_class(-1) * r));
  }
}

namespace {
int count_changes(const std::vector<int>& s) {
  int v = 0, last = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (last != 0 && x != last) ++v;
    last = x;
  }
  return v;
}
}  // namespace

int SturmChain::variations_at(const mpq_class& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(sign_at(p, x));
  return count_changes(s);
}

int SturmChain::variations_at_infinity(int side) const {
  std::vector<int> s;
  for (const auto& p : seq_) {
    int lc = sgn(p.leading());
    s.push_back(side < 0 && p.degree() % 2 ? -lc : lc);
  }
  return count_changes(s);
}

namespace {

IntPolynomial deflate(const IntPolynomial& p, const mpq_class& x) {
  return exact_divide(p, IntPolynomial({mpz_class(-x.get_num()), x.get_den()}));
}

// a point strictly inside (lo, hi) where p does not vanish
mpq_class split_point(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  mpq_class w = hi - lo;
  mpq_class mid = lo + w / 2;
  mpq_class step = w / 8;
  while (sign_at(p, mid) == 0) {
    mid = lo + w / 2 + step;
    step /= 2;
  }
  return mid;
}

struct Isolator {
  const IntPolynomial& p;
  const SturmChain& sc;
  mpq_class width;
  std::vector<RootInterval>& out;

  void refine(mpq_class lo, mpq_class hi) {
    int slo = sign_at(p, lo);
    while (hi - lo > width) {
      mpq_class mid = (lo + hi) / 2;
      int s = sign_at(p, mid);
      if (s == 0) {
        out.push_back({mid, mid});
        return;
      }
      if (s == slo) lo = mid;
      else hi = mid;
    }
    out.push_back({lo, hi});
  }

  void run(const mpq_class& lo, const mpq_class& hi, int vlo, int vhi) {
    int c = vlo - vhi;
    if (c <= 0) return;
    if (c == 1) {
      refine(lo, hi);
      return;
    }
    mpq_class mid = split_point(p, lo, hi);
    int vm = sc.variations_at(mid);
    run(lo, mid, vlo, vm);
    run(mid, hi, vm, vhi);
  }
};

}  // namespace

std::vector<RootInterval> sturm_isolate(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi,
                                        const mpq_class& width) {
  if (hi < lo) throw Error(ErrorCode::DomainError, "empty interval");
  std::vector<RootInterval> out;
  if (p.degree() <= 0) return out;
  IntPolynomial q = square_free_part(p);
  if (sign_at(q, lo) == 0) {
    out.push_back({lo, lo});
    q = deflate(q, lo);
  }
  if (hi != lo && q.degree() > 0 && sign_at(q, hi) == 0) {
    out.push_back({hi, hi});
    q = deflate(q, hi);
  }
  if (q.degree() > 0 && hi != lo) {
    SturmChain sc(q);
    Isolator iso{q, sc, width, out};
    iso.run(lo, hi, sc.variations_at(lo), sc.variations_at(hi));
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

long count_real_roots(const IntPolynomial& p) {
  if (p.degree() <= 0) return 0;
  return SturmChain(square_free_part(p)).count_all();
}

long root_multiplicity(const IntPolynomial& p, const mpq_class& x) {
  long m = 0;
  IntPolynomial d = p;
  while (!d.is_zero() && sign_at(d, x) == 0) {
    ++m;
    d = d.derivative();
  }
  return m;
}

OffInterval count_off_interval(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::DomainError, "zero polynomial");
  OffInterval r;
  long total = 0, sqf_deg = 0;
  std::vector<IntPolynomial> fac = square_free_decomposition(p);
  const mpq_class zero = 0, top = 1728;
  for (size_t i = 0; i < fac.size(); ++i) {
    const IntPolynomial& f = fac[i];
    if (f.degree() <= 0) continue;
    long mult = static_cast<long>(i) + 1;
    sqf_deg += f.degree();
    SturmChain sc(f);
    long all = sc.count_all();
    long in = sc.count(zero, top) + (sign_at(f, zero) == 0 ? 1 : 0);
    total += mult * all;
    r.real_inside += mult * in;
  }
  r.real_outside = total - r.real_inside;
  r.complex_pairs = (p.degree() - total) / 2;
  r.square_free_defect = p.degree() - sqf_deg;
  return r;
}

LD HFunction::operator()(LD t) const {
  return static_cast<LD>(k) * t / 2 + 2 * pi<LD>() * static_cast<LD>(m) * std::cos(t);
}

LD HFunction::inverse(LD value) const {
  LD lo = pi<LD>() / 2, hi = 2 * pi<LD>() / 3;
  for (int i = 0; i < 80 && hi - lo > 0; ++i) {
    LD mid = (lo + hi) / 2;
    if ((*this)(mid) < value) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

namespace {

struct Inconclusive {};

// signs of f on the arc at a fixed working precision
class ArcSigner {
 public:
  ArcSigner(const MillerForm& f, unsigned bits) : f_(f), wp_(bits), ev_(0.866) {}

  int sign(LD theta) {
    ++evals;
    ArcPoint<Multi> p{Multi(theta)};
    int s = arc_form(f_, p, ev_).sign();
    if (s == 0) throw Inconclusive{};
    return s;
  }

  long evals = 0;

 private:
  const MillerForm& f_;
  WorkingPrecision wp_;
  FormEvaluator<Multi> ev_;
};

long floor_div(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

std::vector<LD> sample_angles(const FormId& id, LD gap) {
  const LD a = pi<LD>() / 2, b = 2 * pi<LD>() / 3;
  std::vector<LD> th{a + gap};
  HFunction h{id.k, id.m};
  if (static_cast<LD>(id.k) > 4 * pi<LD>() * static_cast<LD>(id.m)) {
    // h(pi/2) = k pi/4, h(2pi/3) = k pi/3 - m pi
    long n0 = floor_div(id.k + 3, 4), n1 = floor_div(id.k - 3 * id.m, 3);
    for (long n = n0; n <= n1; ++n) {
      LD t = h.inverse(pi<LD>() * static_cast<LD>(n));
      if (t > a + gap && t < b - gap) th.push_back(t);
    }
  } else {
    long n = 4 * (id.k / 12 + 2);
    for (long i = 1; i < n; ++i) th.push_back(a + (b - a) * i / n);
  }
  th.push_back(b - gap);
  std::sort(th.begin(), th.end());
  th.erase(std::unique(th.begin(), th.end()), th.end());
  return th;
}

long arc_target(const MillerForm& f) {
  long d = std::max(0L, f.faber.degree());
  return d - root_multiplicity(f.faber, mpq_class(0)) - root_multiplicity(f.faber, mpq_class(1728));
}

struct Sample {
  LD theta;
  int sign;
};

long changes(const std::vector<Sample>& s) {
  long c = 0;
  for (size_t i = 0; i + 1 < s.size(); ++i) c += s[i].sign != s[i + 1].sign;
  return c;
}

ArcLocalization localize_at(const MillerForm& f, unsigned bits, const ArcOptions& opt, long target) {
  ArcSigner sg(f, bits);
  std::vector<Sample> s;
  for (LD t : sample_angles(f.id, opt.endpoint_gap)) s.push_back({t, sg.sign(t)});
  for (int depth = 0; depth < opt.refine_depth && changes(s) < target; ++depth) {
    std::vector<Sample> next;
    for (size_t i = 0; i + 1 < s.size(); ++i) {
      next.push_back(s[i]);
      if (s[i].sign != s[i + 1].sign) continue;
      LD w = (s[i + 1].theta - s[i].theta) / 4;
      for (int j = 1; j < 4; ++j) {
        LD t = s[i].theta + w * j;
        next.push_back({t, sg.sign(t)});
      }
    }
    next.push_back(s.back());
    s = std::move(next);
  }
  ArcLocalization out;
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i].sign != s[i + 1].sign) out.intervals.push_back({s[i].theta, s[i + 1].theta});
  out.target = target;
  out.bits = bits;
  out.evaluations = sg.evals;
  return out;
}

}  // namespace

ArcLocalization arc_zero_localize(const MillerForm& f, const ArcOptions& opt) {
  long target = arc_target(f);
  unsigned bits = arc_precision_bits(f, opt.min_bits);
  for (int attempt = 0;; ++attempt) {
    try {
      ArcLocalization r = localize_at(f, bits, opt, target);
      r.retries = attempt;
      return r;
    } catch (const Inconclusive&) {
      if (attempt >= opt.retries)
        throw Error(ErrorCode::InconclusiveSign, "arc sign not certified at " + std::to_string(bits) + " bits");
      bits *= 2;
    }
  }
}

std::vector<AngleInterval> refine_zero_angles(const MillerForm& f, const std::vector<AngleInterval>& iv, LD tol,
                                              unsigned min_bits) {
  ArcSigner sg(f, arc_precision_bits(f, min_bits));
  std::vector<AngleInterval> out;
  for (AngleInterval a : iv) {
    try {
      int slo = sg.sign(a.lo);
      while (a.hi - a.lo > tol) {
        LD mid = (a.lo + a.hi) / 2;
        if (mid <= a.lo || mid >= a.hi) break;
        if (sg.sign(mid) == slo) a.lo = mid;
        else a.hi = mid;
      }
    } catch (const Inconclusive&) {
      // keep the last certified bracket
    }
    out.push_back(a);
  }
  return out;
}

RootInterval j_of_angle(const AngleInterval& a) {
  static const FormEvaluator<LD> ev(0.866);
  auto jv = [&](LD t) {
    ArcPoint<LD> p(t);
    return ev.j(p.tau(), p.tau_err()).real_checked("j on the arc");
  };
  CertReal<LD> jlo = jv(a.lo), jhi = a.hi == a.lo ? jlo : jv(a.hi);
  return {to_mpq(jhi.lo()), to_mpq(jlo.hi())};
}

bool cross_check(const std::vector<AngleInterval>& arc, const std::vector<RootInterval>& faber) {
  if (arc.size() != faber.size()) return false;
  std::vector<AngleInterval> a = arc;
  std::sort(a.begin(), a.end(), [](const AngleInterval& x, const AngleInterval& y) { return x.lo < y.lo; });
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i)
    if (!j_of_angle(a[n - 1 - i]).intersects(faber[i])) return false;
  return true;
}

ZeroReport zero_report(const MillerForm& f, const ZeroOptions& opt) {
  ZeroReport r;
  r.id = f.id;
  r.ord_infty = f.id.m;
  const IntPolynomial& F = f.faber;
  const mpq_class zero = 0, top = 1728;
  r.root_at_0 = root_multiplicity(F, zero);
  r.root_at_1728 = root_multiplicity(F, top);
  switch (f.id.kprime) {
    case 4: r.trivial_rho = 1; break;
    case 6: r.trivial_i = 1; break;
    case 8: r.trivial_rho = 2; break;
    case 10: r.trivial_rho = 1, r.trivial_i = 1; break;
    case 14: r.trivial_rho = 2, r.trivial_i = 1; break;
    default: break;
  }
  r.trivial_rho += 3 * r.root_at_0;
  r.trivial_i += 2 * r.root_at_1728;
  if (F.degree() > 0) {
    OffInterval off = count_off_interval(F);
    r.real_outside = off.real_outside;
    r.complex_pairs = off.complex_pairs;
    r.square_free_defect = off.square_free_defect;
    r.interior_zeros = off.real_inside - r.root_at_0 - r.root_at_1728 + off.real_outside + 2 * off.complex_pairs;
    for (auto& iv : sturm_isolate(F, zero, top))
      if (!(iv.exact() && (iv.lo == zero || iv.lo == top))) r.faber_roots_in.push_back(iv);
    if (off.real_outside > 0) {
      // Cauchy bound
      mpq_class B = 0;
      for (const auto& c : F.coeffs()) B = std::max(B, mpq_class(abs(c), abs(F.leading())));
      B += 1;
      for (auto& iv : sturm_isolate(F, -B, zero))
        if (!(iv.exact() && iv.lo == zero)) r.faber_roots_outside.push_back(iv);
      if (B > top)
        for (auto& iv : sturm_isolate(F, top, B))
          if (!(iv.exact() && iv.lo == top)) r.faber_roots_outside.push_back(iv);
    }
  }
  if (opt.arc) {
    ArcLocalization loc = arc_zero_localize(f, opt.arc_opt);
    r.arc_done = true;
    r.arc_complete = loc.complete();
    r.bits = loc.bits;
    r.retries = loc.retries;
    r.arc_angles = opt.refine ? refine_zero_angles(f, loc.intervals, 1e-10L, loc.bits) : loc.intervals;
    r.cross_ok = cross_check(r.arc_angles, r.faber_roots_in);
  }
  r.valence_ok = valence_reconcile(r);
  return r;
}

bool valence_reconcile(const ZeroReport& r) {
  return 12 * r.ord_infty + 6 * r.trivial_i + 4 * r.trivial_rho + 12 * r.interior_zeros == r.id.k;
}

bool Thm2Report::all_passed() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const Thm2Row& x) { return x.passed; });
}

Thm2Report verify_theorem_m1(bool throw_on_failure) {
  Thm2Report rep;
  for (long ell = 1; ell <= 14; ++ell) {
    for (long kp : {0L, 4L, 6L, 8L, 10L, 14L}) {
      long k = 12 * ell + kp;
      MillerForm f = miller_form(k, 1);
      Thm2Row row;
      row.id = f.id;
      row.degree = f.faber.degree();
      if (row.degree > 0) {
        OffInterval off = count_off_interval(f.faber);
        row.roots_in = off.real_inside;
        row.real_outside = off.real_outside;
        row.complex_pairs = off.complex_pairs;
        row.simple = off.square_free_defect == 0;
      } else {
        row.simple = true;
      }
      row.passed = row.simple && row.real_outside == 0 && row.complex_pairs == 0;
      if (!row.passed && throw_on_failure)
        throw Error(ErrorCode::TheoremViolation, "g_{" + std::to_string(k) + ",1} has a root off [0,1728] or a repeated root");
      rep.rows.push_back(row);
    }
  }
  return rep;
}

DistributionStats distribution_stats(const FormId& id, std::vector<LD> angles, int bins) {
  if (bins < 1) throw Error(ErrorCode::Usage, "bins must be positive");
  DistributionStats st;
  st.id = id;
  st.zeros = static_cast<long>(angles.size());
  st.bins.assign(static_cast<size_t>(bins), 0);
  if (angles.empty()) return st;
  const LD a = pi<LD>() / 2, w = pi<LD>() / 6;
  std::vector<double> u;
  for (LD t : angles) u.push_back(static_cast<double>(std::clamp((t - a) / w, LD(0), LD(1))));
  std::sort(u.begin(), u.end());
  double n = static_cast<double>(u.size()), d = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    d = std::max(d, (i + 1) / n - u[i]);
    d = std::max(d, u[i] - i / n);
    int b = std::min(bins - 1, static_cast<int>(u[i] * bins));
    ++st.bins[static_cast<size_t>(b)];
  }
  st.star_discrepancy = d;
  double mass = n / bins;
  for (long c : st.bins) st.max_bin_deviation = std::max(st.max_bin_deviation, std::fabs(c - mass) / mass);
  return st;
}

std::vector<DistributionStats> distribution_sweep(const std::vector<long>& ks, long m, int bins, unsigned min_bits) {
  std::vector<DistributionStats> out;
  for (long k : ks) {
    MillerForm f = miller_form(k, m);
    ArcOptions opt;
    opt.min_bits = min_bits;
    ArcLocalization loc = arc_zero_localize(f, opt);
    std::vector<AngleInterval> iv = refine_zero_angles(f, loc.intervals, 1e-9L, loc.bits);
    std::vector<LD> th;
    for (const auto& a : iv) th.push_back(a.mid());
    out.push_back(distribution_stats(f.id, th, bins));
  }
  return out;
}

}  // namespace mz
