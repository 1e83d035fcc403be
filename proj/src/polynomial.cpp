#include "millerzeros/polynomial.hpp"

#include <sstream>

#include "millerzeros/errors.hpp"

namespace mz {

RatPolynomial to_rational(const IntPolynomial& p) {
  return RatPolynomial(std::vector<mpq_class>(p.coeffs().begin(), p.coeffs().end()));
}

IntPolynomial primitive_integer(const RatPolynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) z.push_back(c.get_num() * (l / c.get_den()));
  return primitive_part(IntPolynomial(std::move(z)));
}

mpz_class content(const IntPolynomial& p) {
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (p.leading() < 0) g = -g;
  std::vector<mpz_class> c = p.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DomainError, "pseudo_remainder by zero polynomial");
  std::vector<mpz_class> r = a.coeffs();
  const auto& B = b.coeffs();
  long db = b.degree();
  mpz_class lb = B.back();
  mpz_class alb = abs(lb);
  int slb = sgn(lb);
  long dr = static_cast<long>(r.size()) - 1;
  while (dr >= db) {
    if (r[dr] == 0) {
      --dr;
      continue;
    }
    mpz_class lr = r[dr];
    long shift = dr - db;
    for (long i = 0; i <= dr; ++i) r[i] *= alb;
    // |lb| r - sign(lb) lr t^shift b  kills the top term
    for (long i = 0; i <= db; ++i) {
      if (slb > 0) mpz_submul(r[i + shift].get_mpz_t(), lr.get_mpz_t(), B[i].get_mpz_t());
      else mpz_addmul(r[i + shift].get_mpz_t(), lr.get_mpz_t(), B[i].get_mpz_t());
    }
    --dr;
  }
  r.resize(static_cast<size_t>(std::max(0L, dr + 1)));
  IntPolynomial out(std::move(r));
  if (out.is_zero()) return out;
  mpz_class g = content(out);
  std::vector<mpz_class> c = out.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial u = primitive_part(a), v = primitive_part(b);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPolynomial r = pseudo_remainder(u, v);
    u = v;
    v = primitive_part(r);
  }
  return primitive_part(u);
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::DomainError, "division by zero polynomial");
  std::vector<mpq_class> r(a.coeffs().begin(), a.coeffs().end());
  const auto& B = b.coeffs();
  long db = b.degree();
  long da = a.degree();
  if (da < db) throw Error(ErrorCode::DomainError, "exact_divide: divisor degree too large");
  std::vector<mpq_class> q(static_cast<size_t>(da - db + 1));
  mpq_class lb(B.back());
  for (long d = da; d >= db; --d) {
    if (r[d] == 0) continue;
    mpq_class f = r[d] / lb;
    q[d - db] = f;
    for (long i = 0; i <= db; ++i) r[i + d - db] -= f * B[i];
  }
  for (long i = 0; i < db; ++i)
    if (r[i] != 0) throw Error(ErrorCode::DomainError, "exact_divide: nonzero remainder");
  return primitive_integer(RatPolynomial(std::move(q)));
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return primitive_part(p);
  IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return primitive_part(p);
  return exact_divide(p, g);
}

namespace {

RatPolynomial monic(const RatPolynomial& p) {
  if (p.is_zero()) return p;
  mpq_class l = p.leading();
  std::vector<mpq_class> c = p.coeffs();
  for (auto& x : c) x /= l;
  return RatPolynomial(std::move(c));
}

RatPolynomial rat_divide(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<mpq_class> r = a.coeffs();
  const auto& B = b.coeffs();
  long db = b.degree(), da = a.degree();
  if (da < db) return RatPolynomial();
  std::vector<mpq_class> q(static_cast<size_t>(da - db + 1));
  for (long d = da; d >= db; --d) {
    if (r[d] == 0) continue;
    mpq_class f = r[d] / B.back();
    q[d - db] = f;
    for (long i = 0; i <= db; ++i) r[i + d - db] -= f * B[i];
  }
  return RatPolynomial(std::move(q));
}

RatPolynomial monic_gcd(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  return monic(to_rational(gcd(primitive_integer(a), primitive_integer(b))));
}

}  // namespace

std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& p) {
  std::vector<IntPolynomial> out;
  if (p.degree() <= 0) return out;
  // Yun's algorithm over Q with monic polynomials so the scalars line up
  RatPolynomial a = monic(to_rational(p));
  RatPolynomial b = monic_gcd(a, a.derivative());
  RatPolynomial c = rat_divide(a, b);
  RatPolynomial d = rat_divide(a.derivative(), b) - c.derivative();
  while (c.degree() > 0) {
    RatPolynomial f = monic_gcd(c, d);
    out.push_back(primitive_integer(f));
    c = rat_divide(c, f);
    d = rat_divide(d, f) - c.derivative();
  }
  return out;
}

int sign_at(const IntPolynomial& p, const mpq_class& x) {
  if (p.is_zero()) return 0;
  // homogenised: sum c_i a^i b^(d-i) with b > 0
  const mpz_class& a = x.get_num();
  const mpz_class& b = x.get_den();
  mpz_class acc = 0;
  mpz_class bp = 1;
  long d = p.degree();
  // Horner on numerator: acc = acc*a + c_i * b^(d-i)
  for (long i = d; i >= 0; --i) {
    acc = acc * a + p.coeffs()[i] * bp;
    bp *= b;
  }
  return sgn(acc);
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    const mpz_class& c = p.coeffs()[i];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

}  // namespace mz
