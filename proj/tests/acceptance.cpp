// acceptance N: runs criterion N, prints one line, exits 0 on PASS
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "millerzeros/certify.hpp"
#include "millerzeros/zeros.hpp"

using namespace mz;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string fmt(double x, int prec = 10) {
  std::ostringstream s;
  s.precision(prec);
  s << x;
  return s.str();
}

std::vector<mpz_class> ints(std::initializer_list<const char*> c) {
  std::vector<mpz_class> v;
  for (const char* s : c) v.emplace_back(s);
  return v;
}

const BoundLedgerEntry* find(const std::vector<BoundLedgerEntry>& v, const std::string& name) {
  for (const auto& e : v)
    if (e.name == name) return &e;
  return nullptr;
}

// value within tol of target, ball radius included
void near(Outcome& o, const std::vector<BoundLedgerEntry>& v, const std::string& name, double target, double tol) {
  const BoundLedgerEntry* e = find(v, name);
  if (!e) return o.check(false, "missing " + name);
  o.check(std::fabs(e->computed - target) + e->err <= tol, name + " = " + fmt(e->computed) + " vs " + fmt(target));
}

void holds(Outcome& o, const std::vector<BoundLedgerEntry>& v, const std::string& name) {
  const BoundLedgerEntry* e = find(v, name);
  if (!e) return o.check(false, "missing " + name);
  o.check(e->satisfied, name + " not certified (" + fmt(e->computed) + ")");
}

// faber goldens, ascending coefficients as printed
Outcome faber_goldens() {
  Outcome o;
  auto f48 = miller_form(48, 1).faber;
  o.check(f48.coeffs() == ints({"-24903328", "931860", "-2136", "1"}), "F_{48,1} differs");
  auto f124 = miller_form(124, 1).faber;
  auto printed = ints({"-21437679033112542689512", "5718177043459037019855", "-188671766710386398400",
                       "1942806055074346280", "-8750844530401680", "20207360640402", "-25703594848", "18182340",
                       "-6696", "1"});
  if (f124.coeffs().size() != printed.size()) {
    o.check(false, "F_{124,1} has degree " + std::to_string(f124.degree()));
    return o;
  }
  for (size_t i = 0; i < printed.size(); ++i)
    o.check(f124.coeffs()[i] == printed[i],
            "F_{124,1} t^" + std::to_string(i) + ": computed " + f124.coeffs()[i].get_str() + ", printed " + printed[i].get_str());
  return o;
}

Outcome root_tables() {
  Outcome o;
  auto compare = [&](long k, const std::vector<double>& printed) {
    auto r = sturm_isolate(miller_form(k, 1).faber, 0, 1728, mpq_class(1, 10000000));
    if (r.size() != printed.size()) return o.check(false, "F_{" + std::to_string(k) + ",1}: " + std::to_string(r.size()) + " roots");
    for (size_t i = 0; i < r.size(); ++i)
      o.check(std::fabs(r[i].mid() - printed[i]) <= 1e-3, "root " + fmt(r[i].mid()) + " vs " + fmt(printed[i]));
  };
  compare(48, {28.5703, 565.1814, 1542.2483});
  compare(124, {4.3445, 44.3322, 153.6441, 350.0448, 628.6821, 959.1844, 1289.5802, 1557.8272, 1708.3603});
  if (o.pass) o.detail = "12 roots within 1e-3";
  return o;
}

Outcome theorem_sweep() {
  Outcome o;
  Thm2Report r = verify_theorem_m1();
  o.check(r.rows.size() == 84, std::to_string(r.rows.size()) + " forms");
  for (const auto& row : r.rows) o.check(row.passed, "g_{" + std::to_string(row.id.k) + ",1}");
  if (o.pass) o.detail = "84 forms, all roots real, simple, in [0,1728]";
  return o;
}

Outcome counterexample() {
  Outcome o;
  OffInterval off = count_off_interval(miller_form(132, 9).faber);
  o.check(off.real_outside + off.complex_pairs >= 1, "no root outside [0,1728]");
  if (o.pass)
    o.detail = "g_{132,9}: " + std::to_string(off.real_outside) + " real outside, " + std::to_string(off.complex_pairs) +
               " complex pairs";
  return o;
}

Outcome constants() {
  Outcome o;
  auto v = full_ledger();
  near(o, v, "|Delta(i)|", 0.00178537, 1e-7);
  near(o, v, "|Delta(rho)|", 0.00480514, 1e-7);
  near(o, v, "E4(i)", 1.455761, 1e-5);
  near(o, v, "E6(rho)", 2.881536, 1e-5);
  near(o, v, "varpi", 2.622057, 1e-5);
  holds(o, v, "j(e^{1.9i}) in [271,272]");
  near(o, v, "x0 of Re f_{5,0.75}", 0.253311, 1e-4);
  near(o, v, "|g(0.5)|", 593.543, 1e-2);
  near(o, v, "Re f_{6,sin1.9}(cos1.9)", 271.09885, 1e-3);
  if (o.pass) o.detail = "9 constants within tolerance";
  return o;
}

Outcome bound_ledger() {
  Outcome o;
  auto v = full_ledger();
  for (const auto& e : v) o.check(e.satisfied, e.name);
  const char* h[] = {"H_{0,0.75}", "H_{4,0.75}", "H_{6,0.75}", "H_{8,0.75}", "H_{10,0.75}", "H_{14,0.75}",
                     "H_{0,0.65}", "H_{4,0.65}", "H_{6,0.65}", "H_{8,0.65}", "H_{10,0.65}", "H_{14,0.65}"};
  for (const char* n : h) holds(o, v, n);
  holds(o, v, "B1 = log max H_{k',0.75}");
  holds(o, v, "B2 = log max H_{k',0.65}");
  near(o, v, "c2", 9.11013, 1e-3);
  holds(o, v, "c2 <= 9.5");
  holds(o, v, "c1 <= 4.5");
  holds(o, v, "min |j(x+0.75i) - j(e^{i theta})|, theta in [pi/2,1.9]");
  holds(o, v, "min |j(x+0.65i) - j(e^{i theta})|, theta in [1.9,2pi/3]");
  for (const char* n : {"E4@0.65 partial + tail", "E4@0.75 partial + tail", "E6@0.65 partial + tail", "E6@0.75 partial + tail"})
    holds(o, v, n);
  if (o.pass) o.detail = std::to_string(v.size()) + " entries certified";
  return o;
}

Outcome identities() {
  Outcome o;
  const long N = 64;
  auto e4 = eisenstein(4, N), e6 = eisenstein(6, N);
  auto zero = [&](const RationalSeries& s, const std::string& name) { o.check(s.is_zero() && s.trunc() >= N, name); };
  zero(series_sub(eisenstein(8, N), series_mul(e4, e4)), "E8 = E4^2");
  zero(series_sub(eisenstein(10, N), series_mul(e4, e6)), "E10 = E4 E6");
  zero(series_sub(eisenstein(14, N), series_mul(series_mul(e4, e4), e6)), "E14 = E4^2 E6");
  auto cube = series_mul(series_mul(e4, e4), e4);
  auto eis_delta = series_sub(cube, series_mul(e6, e6));
  zero(series_sub(eis_delta, series_scale(delta(N), mpq_class(1728))), "1728 Delta = E4^3 - E6^2");
  zero(series_sub(to_rational_series(delta_z(N)), series_scale(eis_delta, mpq_class(1, 1728))), "eta product = Eisenstein Delta");
  auto rep = ramanujan_derivative_check(N);
  zero(rep.e2_residual, "Ramanujan E2");
  zero(rep.e4_residual, "Ramanujan E4");
  zero(rep.delta_residual, "Ramanujan Delta");
  if (o.pass) o.detail = "8 identities, zero residual to q^64";
  return o;
}

Outcome cross_oracle() {
  Outcome o;
  const std::pair<long, long> forms[] = {{16, 1},  {18, 1},  {20, 1},  {22, 1},  {26, 1},  {28, 1},  {48, 1},
                                         {52, 1},  {64, 1},  {76, 1},  {88, 1},  {100, 1}, {124, 1}, {130, 1},
                                         {148, 1}, {172, 1}, {182, 1}, {24, 0},  {48, 0},  {100, 2}};
  long zeros = 0;
  for (auto [k, m] : forms) {
    ZeroReport r = zero_report(miller_form(k, m));
    std::string id = "g_{" + std::to_string(k) + "," + std::to_string(m) + "}";
    o.check(r.id.ell <= 14, id + " ell > 14");
    o.check(r.arc_complete, id + " arc incomplete");
    o.check(r.cross_ok, id + " cross check");
    o.check(r.valence_ok, id + " valence");
    zeros += r.interior_zeros;
  }
  if (o.pass) o.detail = "20 forms, " + std::to_string(zeros) + " arc zeros matched";
  return o;
}

Outcome mrl() {
  Outcome o;
  for (auto [k, m] : {std::pair{192L, 1L}, {240L, 2L}, {360L, 10L}}) {
    MrlReport r = proposition_mrl_check(FormId::from_weight(k, m));
    std::string id = "(" + std::to_string(k) + "," + std::to_string(m) + ")";
    o.check(r.below_two(), id + " max " + fmt(r.max_value));
    if (r.below_two()) o.detail += (o.detail.empty() ? "" : ", ") + id + " max+err " + fmt(r.max_value + r.err, 8);
  }
  return o;
}

Outcome distribution() {
  Outcome o;
  auto st = distribution_sweep({120, 480, 1920}, 1, 10);
  o.check(st.size() == 3, "sweep size");
  if (!o.pass) return o;
  o.check(st[0].star_discrepancy > st[1].star_discrepancy && st[1].star_discrepancy > st[2].star_discrepancy,
          "star discrepancy not decreasing");
  o.check(st[2].max_bin_deviation < 0.1, "k=1920 bin deviation " + fmt(st[2].max_bin_deviation));
  o.detail = "D* " + fmt(st[0].star_discrepancy, 4) + " > " + fmt(st[1].star_discrepancy, 4) + " > " +
             fmt(st[2].star_discrepancy, 4) + ", bin deviation " + fmt(st[2].max_bin_deviation, 4);
  return o;
}

struct Criterion {
  const char* name;
  double limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion all[] = {
      {"faber goldens F_{48,1}, F_{124,1}", 2, faber_goldens},
      {"root tables F_{48,1}, F_{124,1}", 1, root_tables},
      {"all roots of F_{k,1} real, simple, in [0,1728], ell <= 14", 120, theorem_sweep},
      {"g_{132,9} has a Faber root off [0,1728]", 5, counterexample},
      {"constants", 0, constants},
      {"bound ledger", 0, bound_ledger},
      {"series identities to q^64", 10, identities},
      {"arc zeros vs Faber roots, valence", 0, cross_oracle},
      {"arc inequality below 2", 0, mrl},
      {"zero angle distribution", 0, distribution},
  };
  if (argc != 2) {
    std::fprintf(stderr, "usage: acceptance N   (1..10)\n");
    return 2;
  }
  int n = std::atoi(argv[1]);
  if (n < 1 || n > 10) {
    std::fprintf(stderr, "criterion must be 1..10\n");
    return 2;
  }
  const Criterion& c = all[n - 1];
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (c.limit > 0 && secs >= c.limit) o.check(false, "took " + fmt(secs, 3) + " s, limit " + fmt(c.limit) + " s");
  std::printf("acceptance %d: %s  %s  [%.2f s]  %s\n", n, o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
  return o.pass ? 0 : 1;
}
