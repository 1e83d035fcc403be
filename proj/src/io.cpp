#include "millerzeros/io.hpp"

namespace mz {

json to_json(const FormId& id) { return {{"k", id.k}, {"m", id.m}, {"ell", id.ell}, {"kprime", id.kprime}}; }

namespace {
template <class C>
json series_json(const QSeries<C>& s) {
  json c = json::array();
  for (long n = std::min(s.lead(), 0L); n <= s.trunc(); ++n) c.push_back(s.coeff(n).get_str());
  return {{"lead", std::min(s.lead(), 0L)}, {"trunc", s.trunc()}, {"coeffs", c}};
}
}  // namespace

json to_json(const IntegerSeries& s) { return series_json(s); }
json to_json(const RationalSeries& s) { return series_json(s); }

json to_json(const IntPolynomial& p) {
  json c = json::array();
  for (const auto& x : p.coeffs()) c.push_back(x.get_str());
  return c;
}

json faber_json(const MillerForm& f) {
  json j = to_json(f.id);
  j["degree"] = f.faber.degree();
  j["coeffs"] = to_json(f.faber);
  j["text"] = to_string(f.faber);
  return j;
}

std::string decimal(const mpq_class& q, int digits) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpq_class x = abs(q) * scale + mpq_class(1, 2);
  mpz_class n = x.get_num() / x.get_den();
  std::string s = n.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits + 1) - s.size(), '0');
  if (digits > 0) s.insert(s.size() - static_cast<size_t>(digits), ".");
  if (q < 0 && n != 0) s.insert(0, "-");
  return s;
}

json to_json(const RootInterval& r, int digits) {
  return {{"lo", decimal(r.lo, digits)}, {"hi", decimal(r.hi, digits)}, {"approx", r.mid()}};
}

json to_json(const AngleInterval& a) {
  return {{"lo", static_cast<double>(a.lo)}, {"hi", static_cast<double>(a.hi)}};
}

json to_json(const ZeroReport& r) {
  json j = to_json(r.id);
  json arc = json::array(), in = json::array(), out = json::array();
  for (const auto& a : r.arc_angles) {
    json x = to_json(a);
    x["j"] = to_json(j_of_angle(a), 6);
    arc.push_back(x);
  }
  for (const auto& x : r.faber_roots_in) in.push_back(to_json(x, 6));
  for (const auto& x : r.faber_roots_outside) out.push_back(to_json(x, 6));
  j["arc_angles"] = arc;
  j["faber_roots_in"] = in;
  j["faber_roots_outside"] = out;
  j["real_outside"] = r.real_outside;
  j["complex_pairs"] = r.complex_pairs;
  j["root_at_0"] = r.root_at_0;
  j["root_at_1728"] = r.root_at_1728;
  j["square_free_defect"] = r.square_free_defect;
  j["ord_infty"] = r.ord_infty;
  j["trivial_i"] = r.trivial_i;
  j["trivial_rho"] = r.trivial_rho;
  j["interior_zeros"] = r.interior_zeros;
  j["arc_complete"] = r.arc_complete;
  j["cross_ok"] = r.cross_ok;
  j["valence_ok"] = r.valence_ok;
  j["bits"] = r.bits;
  j["retries"] = r.retries;
  return j;
}

json to_json(const BoundLedgerEntry& e) {
  json j = {{"name", e.name}, {"relation", relation_name(e.rel)}, {"claimed", e.claimed}};
  if (e.rel == Relation::Within) j["claimed_hi"] = e.claimed_hi;
  if (e.rel == Relation::Approx) j["tol"] = e.tol;
  j["computed"] = e.computed;
  j["err"] = e.err;
  j["satisfied"] = e.satisfied;
  j["paper_ref"] = e.paper_ref;
  j["method"] = e.method;
  return j;
}

json to_json(const MrlReport& r) {
  json j = to_json(r.id);
  j["hypothesis"] = r.hypothesis;
  j["max"] = r.max_value;
  j["err"] = r.err;
  j["theta_at_max"] = r.theta_at_max;
  j["points"] = r.points;
  j["bits"] = r.bits;
  j["below_two"] = r.below_two();
  return j;
}

json to_json(const Thm2Row& r) {
  json j = to_json(r.id);
  j["degree"] = r.degree;
  j["roots_in"] = r.roots_in;
  j["real_outside"] = r.real_outside;
  j["complex_pairs"] = r.complex_pairs;
  j["simple"] = r.simple;
  j["passed"] = r.passed;
  return j;
}

json to_json(const DistributionStats& d) {
  json j = to_json(d.id);
  j["zeros"] = d.zeros;
  j["star_discrepancy"] = d.star_discrepancy;
  j["max_bin_deviation"] = d.max_bin_deviation;
  j["bins"] = d.bins;
  return j;
}

}  // namespace mz
