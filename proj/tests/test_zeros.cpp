#include <cmath>

#include "doctest.h"
#include "millerzeros/zeros.hpp"

using namespace mz;
using LD = long double;

namespace {

IntPolynomial ip(std::initializer_list<long> c) {
  std::vector<mpz_class> v;
  for (long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

// roots from an independent solver (30 digits, rounded)
const double kF48[] = {28.5703284546640, 565.181404942622, 1542.24826660271};
const double kF124[] = {4.34448863335, 44.3321755472, 153.644138845, 350.044838643, 628.682151722,
                        959.18440769, 1289.58022233, 1557.82724605, 1708.36033054};

}  // namespace

TEST_CASE("sturm chains") {
  auto p = ip({-1, 1});
  auto r = sturm_isolate(p, 0, 1728);
  REQUIRE(r.size() == 1);
  CHECK(r[0].lo <= 1);
  CHECK(r[0].hi >= 1);
  CHECK(count_real_roots(ip({1, 0, 1})) == 0);
  CHECK(count_real_roots(ip({-2, 0, 1})) == 2);
  CHECK(count_real_roots(ip({0, 0, 0, 1})) == 1);
  SturmChain sc(ip({-2, 0, 1}));
  CHECK(sc.count(0, 2) == 1);
  CHECK(sc.count(-2, 2) == 2);
  CHECK(sc.count_all() == 2);
  // roots exactly on the ends and at a bisection point
  auto q = ip({0, -1728, 1}) * ip({-864, 1});
  auto iv = sturm_isolate(q, 0, 1728);
  REQUIRE(iv.size() == 3);
  CHECK(iv[0].exact());
  CHECK(iv[0].lo == 0);
  CHECK(iv[1].intersects(RootInterval{864, 864}));
  CHECK(iv[2].lo == 1728);
  // repeated roots are isolated once
  auto rep = ip({-1, 1}) * ip({-1, 1}) * ip({-5, 1});
  CHECK(sturm_isolate(rep, 0, 10).size() == 2);
  CHECK(root_multiplicity(rep, 1) == 2);
  CHECK(root_multiplicity(rep, 5) == 1);
  CHECK(root_multiplicity(rep, 2) == 0);
  CHECK_THROWS_AS(sturm_isolate(p, 2, 1), Error);
}

TEST_CASE("faber roots") {
  auto f48 = miller_form(48, 1).faber;
  mpz_class fine;
  mpz_ui_pow_ui(fine.get_mpz_t(), 10, 16);
  auto r = sturm_isolate(f48, 0, 1728, mpq_class(1, fine));
  REQUIRE(r.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(r[i].mid() == doctest::Approx(kF48[i]).epsilon(1e-12));
  CHECK(std::fabs(r[0].mid() - 28.5703) < 1e-3);
  CHECK(std::fabs(r[1].mid() - 565.1814) < 1e-3);
  CHECK(std::fabs(r[2].mid() - 1542.2483) < 1e-3);
  auto f124 = miller_form(124, 1).faber;
  auto s = sturm_isolate(f124, 0, 1728, mpq_class(1, fine));
  REQUIRE(s.size() == 9);
  for (int i = 0; i < 9; ++i) CHECK(s[i].mid() == doctest::Approx(kF124[i]).epsilon(1e-10));
  // default width
  for (const auto& x : sturm_isolate(f124, 0, 1728)) CHECK(x.hi - x.lo <= mpq_class(1728, 1000000));
}

TEST_CASE("off-interval counts") {
  auto a = count_off_interval(miller_form(48, 1).faber);
  CHECK(a.real_outside == 0);
  CHECK(a.complex_pairs == 0);
  CHECK(a.real_inside == 3);
  auto b = count_off_interval(miller_form(132, 9).faber);
  CHECK(b.real_outside + b.complex_pairs > 0);
  auto c = count_off_interval(ip({1, 0, 1}));
  CHECK(c.real_outside == 0);
  CHECK(c.complex_pairs == 1);
  auto d = count_off_interval(ip({-1, 1}) * ip({-1, 1}) * ip({2000, 1}));
  CHECK(d.real_inside == 2);
  CHECK(d.real_outside == 1);
  CHECK(d.square_free_defect == 1);
}

TEST_CASE("h function") {
  HFunction h{48, 1};
  LD t = h.inverse(13 * pi<LD>());
  CHECK(static_cast<double>(h(t)) == doctest::Approx(13 * M_PI).epsilon(1e-15));
  CHECK(h(1.6L) < h(1.7L));
}

TEST_CASE("arc localization") {
  auto d = arc_zero_localize(miller_form(12, 1));
  CHECK(d.intervals.empty());
  CHECK(d.complete());
  auto g48 = miller_form(48, 1);
  auto loc = arc_zero_localize(g48);
  REQUIRE(loc.intervals.size() == 3);
  auto roots = sturm_isolate(g48.faber, 0, 1728);
  CHECK(cross_check(refine_zero_angles(g48, loc.intervals), roots));
  auto l192 = arc_zero_localize(miller_form(192, 1));
  CHECK(l192.intervals.size() == 15);
  CHECK(l192.target == 15);
  for (size_t i = 0; i + 1 < l192.intervals.size(); ++i) CHECK(l192.intervals[i].hi <= l192.intervals[i + 1].lo);
}

TEST_CASE("j on angle intervals") {
  auto at_i = j_of_angle({pi<LD>() / 2, pi<LD>() / 2});
  CHECK(at_i.intersects(RootInterval{1728, 1728}));
  CHECK(at_i.hi - at_i.lo < mpq_class(1, 1000000));
  auto at_rho = j_of_angle({2 * pi<LD>() / 3, 2 * pi<LD>() / 3});
  CHECK(at_rho.intersects(RootInterval{0, 0}));
  auto j19 = j_of_angle({1.9L, 1.9L});
  CHECK(j19.lo >= 271);
  CHECK(j19.hi <= 272);
  auto wide = j_of_angle({1.8L, 1.9L});
  CHECK(wide.hi > j19.hi);
  CHECK(wide.lo <= j19.lo);
}

TEST_CASE("zero reports and valence") {
  auto r12 = zero_report(miller_form(12, 1));
  CHECK(r12.valence_ok);
  CHECK(r12.interior_zeros == 0);
  auto r48 = zero_report(miller_form(48, 1));
  CHECK(r48.valence_ok);
  CHECK(r48.cross_ok);
  CHECK(r48.interior_zeros == 3);
  auto r124 = zero_report(miller_form(124, 1));
  CHECK(r124.trivial_rho == 1);
  CHECK(r124.trivial_i == 0);
  CHECK(r124.interior_zeros == 9);
  CHECK(r124.valence_ok);
  CHECK(r124.cross_ok);
  for (long k : {18L, 20L, 22L, 26L, 130L}) {
    auto r = zero_report(miller_form(k, 1));
    CHECK(r.valence_ok);
    CHECK(r.cross_ok);
  }
  ZeroOptions no_arc;
  no_arc.arc = false;
  auto r132 = zero_report(miller_form(132, 9), no_arc);
  CHECK(r132.real_outside + r132.complex_pairs > 0);
  CHECK(r132.valence_ok);
  CHECK_FALSE(r132.arc_done);
  // a broken report is caught
  ZeroReport bad = r48;
  bad.interior_zeros = 2;
  CHECK_FALSE(valence_reconcile(bad));
}

TEST_CASE("theorem sweep for m = 1") {
  Thm2Report rep = verify_theorem_m1();
  CHECK(rep.rows.size() == 84);
  CHECK(rep.all_passed());
  for (const auto& r : rep.rows) CHECK(r.degree == r.id.ell - 1);
}

TEST_CASE("distribution statistics") {
  FormId id = FormId::from_weight(12, 1);
  auto one = distribution_stats(id, {pi<LD>() / 2 + pi<LD>() / 12}, 4);
  CHECK(one.star_discrepancy <= 1);
  CHECK(one.star_discrepancy == doctest::Approx(0.5));
  std::vector<LD> uni;
  for (int i = 0; i < 100; ++i) uni.push_back(pi<LD>() / 2 + pi<LD>() / 6 * (i + 0.5L) / 100);
  auto u = distribution_stats(id, uni, 10);
  CHECK(u.star_discrepancy == doctest::Approx(0.005).epsilon(1e-6));
  CHECK(u.max_bin_deviation == doctest::Approx(0).epsilon(1e-9));
  CHECK_THROWS_AS(distribution_stats(id, uni, 0), Error);
  auto st = distribution_sweep({120, 240, 480}, 1, 10);
  REQUIRE(st.size() == 3);
  CHECK(st[0].zeros == 9);
  CHECK(st[1].zeros == 19);
  CHECK(st[2].zeros == 39);
  CHECK(st[0].star_discrepancy > st[1].star_discrepancy);
  CHECK(st[1].star_discrepancy > st[2].star_discrepancy);
}
