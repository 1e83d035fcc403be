#include <cmath>

#include "doctest.h"
#include "millerzeros/evalnum.hpp"

using namespace mz;
using LD = long double;

namespace {

const FormEvaluator<LD>& ev() {
  static const FormEvaluator<LD> e(0.4);
  return e;
}

Complex<LD> inv_neg(const Complex<LD>& t) { return Complex<LD>(LD(-1)) / t; }

// tail of sum |a_n| r^n from exact coefficients, N < n <= M
LD exact_tail(const RationalSeries& s, long N, LD r) {
  LD acc = 0;
  for (long n = N + 1; n <= s.trunc(); ++n) acc += std::fabs(from_mpq<LD>(s.coeff(n))) * std::pow(r, n);
  return acc;
}

}  // namespace

TEST_CASE("tail bounds dominate the true tails") {
  const LD r = nome_upper(LD(0.4));
  auto e4 = eisenstein(4, 400), e14 = eisenstein(14, 400), jj = jfunction(400), dd = delta(400);
  for (long N : {20L, 40L, 80L}) {
    CHECK(TailBound::eisenstein(4).sum<LD>(N, r) >= exact_tail(e4, N, r));
    CHECK(TailBound::eisenstein(14).sum<LD>(N, r) >= exact_tail(e14, N, r));
    CHECK(TailBound::jcoeff().sum<LD>(N, r) >= exact_tail(jj, N, r));
    CHECK(TailBound::eta_product(1).sum<LD>(N, r) >= exact_tail(dd, N, r));
  }
  CHECK(TailBound::exact().sum<LD>(5, r) == 0);
  CHECK(TailBound::geometric(2, 0.5).sum<LD>(0, LD(0.5)) == doctest::Approx(2 * 0.25 / (1 - 0.25)).epsilon(1e-9));
  CHECK_THROWS_AS(TailBound::unbounded().sum<LD>(5, r), Error);
  CHECK_THROWS_AS(TailBound::geometric(1, 4).sum<LD>(5, LD(0.5)), Error);
  CHECK(TailBound::eisenstein(4).name() == "eisenstein");
}

TEST_CASE("series evaluation") {
  RationalSeries one = RationalSeries::constant(mpq_class(1), 5);
  CertValue<LD> v = eval_series(one, Complex<LD>(0.1L, 1.0L), TailBound::exact());
  CHECK(v.value.re == 1);
  CHECK(v.value.im == 0);
  CHECK(v.err < 1e-17L);
  CHECK_THROWS_AS(eval_series(one, Complex<LD>(0, 0.3L), TailBound::exact()), Error);

  // Delta(i) by the eta product and by the q-series
  CertValue<LD> d1 = eval_delta_eta(Complex<LD>(0, 1));
  CertValue<LD> d2 = ev().series_delta()(Complex<LD>(0, 1));
  CHECK(static_cast<double>(d1.value.re) == doctest::Approx(0.0017853698506).epsilon(1e-9));
  CHECK(std::fabs(d1.value.re - d2.value.re) <= d1.err + d2.err);
  CHECK(d1.err < 1e-15L);

  // j at 0.65i from 8 terms against the long series
  IntegerSeries j8 = jfunction_z(7);
  CertValue<LD> short_sum = eval_series(to_rational_series(j8), Complex<LD>(0, 0.65L), TailBound::exact());
  CertValue<LD> full = ev().j(Complex<LD>(0, 0.65L));
  CHECK(std::fabs(full.value.re - short_sum.value.re) < 10);
  CHECK(ev().j(Complex<LD>(0, 1)).value.re == doctest::Approx(1728).epsilon(1e-15));
}

TEST_CASE("pentagonal evaluation on the lines") {
  for (LD x : {-0.5L, -0.25L, 0.0L, 0.25L, 0.5L}) {
    CHECK(abs(eval_delta_eta(Complex<LD>(x, 0.65L))).lo() > 0.01L);
    CHECK(abs(eval_delta_eta(Complex<LD>(x, 0.75L))).lo() > 0.007L);
  }
}

TEST_CASE("symmetries") {
  for (LD x : {-0.5L, -0.3L, 0.0L, 0.2L, 0.45L}) {
    for (LD y : {0.9L, 1.2L, 1.6L}) {
      Complex<LD> t(x, y);
      if (t.norm() < 1) continue;
      Complex<LD> s(-x, y);  // -conj(tau)
      auto a = ev().j(t), b = ev().j(s);
      CHECK(std::fabs(a.value.re - b.value.re) <= a.err + b.err);
      CHECK(std::fabs(a.value.im + b.value.im) <= a.err + b.err);
      auto c = ev().j(inv_neg(t));
      CHECK((c.value - a.value).abs() <= a.err + c.err + 1e-12L * a.mag());
      // E2(-1/tau) = tau^2 E2(tau) + 6 tau / (i pi)
      auto e2t = ev().e2(t), e2s = ev().e2(inv_neg(t));
      Complex<LD> rhs = t * t * e2t.value + Complex<LD>(0, -6 / pi<LD>()) * t;
      CHECK((e2s.value - rhs).abs() <= e2s.err + t.norm() * e2t.err + 1e-15L);
    }
  }
}

TEST_CASE("forms through the faber factorization") {
  MillerForm d = miller_form(12, 1);
  CertValue<LD> g = eval_form(d, Complex<LD>(0.1L, 1.1L), ev());
  CertValue<LD> e = eval_delta_eta(Complex<LD>(0.1L, 1.1L));
  CHECK((g.value - e.value).abs() <= g.err + e.err);

  // the three zeros of g_{48,1}: preimages of the Faber roots under j on the arc
  MillerForm g48 = miller_form(48, 1);
  FormEvaluator<LD> arc(0.866);
  for (LD root : {28.5703284546639953L, 565.181404942621726L, 1542.24826660271428L}) {
    LD lo = pi<LD>() / 2, hi = 2 * pi<LD>() / 3;
    for (int i = 0; i < 64; ++i) {
      LD mid = (lo + hi) / 2;
      ArcPoint<LD> p(mid);
      if (arc.j(p.tau(), p.tau_err()).value.re > root) lo = mid;
      else hi = mid;
    }
    LD th = (lo + hi) / 2;
    CertReal<LD> at = arc_form(g48, ArcPoint<LD>(th), arc);
    CertReal<LD> left = arc_form(g48, ArcPoint<LD>(th - 1e-6L), arc);
    CertReal<LD> right = arc_form(g48, ArcPoint<LD>(th + 1e-6L), arc);
    CHECK(left.sign() * right.sign() == -1);
    CHECK(std::fabs(at.value) < 1e-4L * std::fabs(left.value));
  }
}

TEST_CASE("arc functions") {
  FormEvaluator<LD> arc(0.866);
  ArcValues<LD> i = arc_functions(ArcPoint<LD>(pi<LD>() / 2), arc);
  ArcValues<LD> rho = arc_functions(ArcPoint<LD>(2 * pi<LD>() / 3), arc);
  CHECK(std::fabs(i.e2.value) <= i.e2.err);
  CHECK(std::fabs(rho.e4.value) <= rho.e4.err);
  CHECK(static_cast<double>(rho.e6.value) == doctest::Approx(2.881536).epsilon(1e-5 / 2.881536));
  CHECK(static_cast<double>(rho.e6.value) == doctest::Approx(2.8815411008).epsilon(1e-9));
  CHECK(static_cast<double>(i.delta.value) == doctest::Approx(-0.00178538).epsilon(1e-6 / 0.00178538));
  CHECK(i.delta.certainly_negative());
  MillerForm d = miller_form(12, 1);
  CertReal<LD> g = arc_form(d, ArcPoint<LD>(pi<LD>() / 2), arc);
  CHECK(std::fabs(g.value - i.delta.value) <= g.err + i.delta.err);
  CHECK_THROWS_AS(ArcPoint<LD>(1.0L), Error);
  CHECK_THROWS_AS(ArcPoint<LD>(2.2L), Error);
}

TEST_CASE("sampled monotonicity and signs") {
  FormEvaluator<LD> arc(0.866);
  const LD a = pi<LD>() / 2, b = 2 * pi<LD>() / 3;
  ArcValues<LD> prev = arc_functions(ArcPoint<LD>(a), arc);
  for (int n = 1;; ++n) {
    LD th = std::min(b, a + 1e-3L * n);
    ArcValues<LD> v = arc_functions(ArcPoint<LD>(th), arc);
    CHECK(prev.delta.lo() > v.delta.hi());
    CHECK(std::fabs(prev.e4.value) - prev.e4.err > std::fabs(v.e4.value) + v.e4.err);
    CHECK(std::fabs(prev.e6.value) + prev.e6.err < std::fabs(v.e6.value) - v.e6.err);
    CHECK(v.delta.certainly_negative());
    CHECK(v.e2.certainly_negative());
    CHECK(v.e6.certainly_positive());
    if (th < b) CHECK(v.e4.certainly_negative());
    prev = v;
    if (th == b) break;
  }
}

TEST_CASE("lemniscate constants") {
  LemniscateConstants c = lemniscate_constants();
  CHECK(static_cast<double>(c.varpi.value) == doctest::Approx(2.622057).epsilon(1e-5 / 2.6));
  CHECK(static_cast<double>(c.varpi.value) == doctest::Approx(2.62205755429211981).epsilon(1e-15));
  CHECK(static_cast<double>(c.varpi_prime.value) == doctest::Approx(2.42865).epsilon(1e-4 / 2.4));
  CHECK(static_cast<double>(c.varpi_prime.value) == doctest::Approx(2.42865064788758).epsilon(1e-13));
  CHECK(c.varpi.err < 1e-9L);
  CHECK(c.varpi_prime.err < 1e-9L);
  LD d = std::pow(c.varpi.value / (std::sqrt(LD(2)) * pi<LD>()), 12);
  CHECK(std::fabs(d - 0.00178537L) < 1e-7L);
}

TEST_CASE("multiprecision evaluation") {
  WorkingPrecision wp(256);
  FormEvaluator<Multi> m(0.866);
  CertValue<Multi> j = m.j(Complex<Multi>(Multi(0), Multi(1)));
  CHECK(abs(j.value.re - 1728) <= j.err);
  CHECK(j.err < Multi(1e-60));
  ArcPoint<Multi> p(Multi(19) / 10);
  CertReal<Multi> jr = m.j(p.tau(), p.tau_err()).real_checked("j");
  CHECK(to_double(jr.value) == doctest::Approx(271.0988481).epsilon(1e-9));
  CHECK(precision_bits<Multi>() >= 256);
}

TEST_CASE("plot samples") {
  auto rows = sample_arc("delta", 0.01L);
  REQUIRE(rows.size() == 54);
  CHECK(rows.front().theta == pi<LD>() / 2);
  CHECK(rows.back().theta == 2 * pi<LD>() / 3);
  std::string csv = arc_csv(rows);
  CHECK(csv.rfind("theta,value,err\n", 0) == 0);
  CHECK_THROWS_AS(sample_arc("zeta", 0.01L), Error);
  CHECK_THROWS_AS(sample_arc("form", 0.01L), Error);
  CHECK_THROWS_AS(sample_arc("e4", 0), Error);
}
