#include "millerzeros/evalnum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mz {

TailBound TailBound::eisenstein(long k) {
  TailBound t;
  t.kind = Kind::EisensteinCoeff;
  t.weight = k;
  if (k == 0) {
    t.kind = Kind::Geometric;
    return t;
  }
  mpq_class g = mpq_class(2 * k) / bernoulli(static_cast<unsigned>(k));
  // round the bound up a little; it only needs to dominate
  t.scale = std::abs(g.get_d()) * (1 + 1e-12);
  return t;
}

std::string TailBound::name() const {
  switch (kind) {
    case Kind::Geometric: return "geometric";
    case Kind::EisensteinCoeff: return "eisenstein";
    case Kind::JCoeff: return "jcoeff";
    case Kind::EtaProduct: return "eta-product";
    case Kind::Unbounded: return "unbounded";
  }
  return "?";
}

unsigned arc_precision_bits(const MillerForm& f, unsigned min_bits) {
  mpz_class s = 0, p = 1;
  for (long i = 0; i <= f.faber.degree(); ++i, p *= 1728) s += abs(f.faber.coeffs()[i]) * p;
  double lg = static_cast<double>(mpz_sizeinbase(s.get_mpz_t(), 2));
  double need = lg - 7.7 * static_cast<double>(f.id.ell) + 9.1 * static_cast<double>(f.id.m) + 160;
  return static_cast<unsigned>(std::max({128.0, std::ceil(need), static_cast<double>(min_bits)}));
}

namespace {

// Romberg on [0,1]; error estimated from the last two diagonal entries
CertReal<long double> romberg(long double (*f)(long double)) {
  std::vector<long double> prev, cur;
  long double h = 1;
  prev.push_back((f(0) + f(1)) / 2);
  long double err = 1;
  for (int level = 1; level <= 20; ++level) {
    h /= 2;
    long double s = 0;
    long n = 1L << (level - 1);
    for (long i = 0; i < n; ++i) s += f(h * (2 * i + 1));
    cur.assign(static_cast<size_t>(level + 1), 0);
    cur[0] = prev[0] / 2 + h * s;
    long double p4 = 1;
    for (int j = 1; j <= level; ++j) {
      p4 *= 4;
      cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (p4 - 1);
    }
    err = std::fabs(cur[level] - prev[level - 1]);
    prev = cur;
    if (level > 4 && err < 1e-17L) break;
  }
  return {prev.back(), err + 64 * eps<long double>()};
}

long double varpi_integrand(long double t) {
  long double x = 1 - t * t;
  return 4 / std::sqrt((2 - t * t) * (1 + x * x));
}

long double varpi_prime_integrand(long double t) {
  long double x = 1 - t * t;
  long double s = 1 + x * (1 + x * (1 + x * (1 + x * (1 + x))));
  return 4 / std::sqrt(s);
}

}  // namespace

LemniscateConstants lemniscate_constants() {
  return {romberg(varpi_integrand), romberg(varpi_prime_integrand)};
}

std::vector<ArcSample> sample_arc(const std::string& fn, long double step, const MillerForm* form) {
  if (!(step > 0)) throw Error(ErrorCode::Usage, "grid step must be positive");
  FormEvaluator<Extended> ev(0.866);
  long double a = pi<long double>() / 2, b = 2 * pi<long double>() / 3;
  long n = static_cast<long>(std::ceil((b - a) / step));
  std::vector<ArcSample> rows;
  for (long i = 0; i <= n; ++i) {
    long double th = i == n ? b : a + step * i;
    ArcPoint<Extended> p(th);
    CertReal<Extended> v;
    if (fn == "form") {
      if (!form) throw Error(ErrorCode::Usage, "arc form needs --k and --m");
      v = arc_form(*form, p, ev);
    } else if (fn == "j") {
      v = ev.j(p.tau(), p.tau_err()).real_checked("j");
    } else {
      ArcValues<Extended> av = arc_functions(p, ev);
      if (fn == "e2") v = av.e2;
      else if (fn == "e4") v = av.e4;
      else if (fn == "e6") v = av.e6;
      else if (fn == "delta") v = av.delta;
      else throw Error(ErrorCode::Usage, "unknown arc function " + fn);
    }
    rows.push_back({th, v.value, v.err});
  }
  return rows;
}

std::string arc_csv(const std::vector<ArcSample>& rows) {
  std::ostringstream os;
  os << "theta,value,err\n";
  os.precision(17);
  for (const auto& r : rows) os << static_cast<double>(r.theta) << ',' << static_cast<double>(r.value) << ',' << static_cast<double>(r.err) << '\n';
  return os.str();
}

}  // namespace mz
