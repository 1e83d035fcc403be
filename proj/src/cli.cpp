#include "millerzeros/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "millerzeros/io.hpp"

namespace mz {

namespace {

struct Flags {
  long k = -1, m = -1;
  long trunc = -1;
  unsigned precision_bits = 0;
  double grid_step = 1e-3;
  std::string format;
  std::string out;
  std::string form = "E4";
  int digits = 6;
  bool no_refine = false;
  std::string k_list = "120,480,1920";
  int bins = 10;
  std::string fn = "e4";
};

const char* kForms = "E2, E4, ..., Ek (even k), Delta, j, or g (needs --k, --m)";

FormId need_form(const Flags& f) {
  if (f.k < 0 || f.m < 0) throw Error(ErrorCode::Usage, "--k and --m are required");
  return FormId::from_weight(f.k, f.m);
}

std::vector<long> parse_list(const std::string& s) {
  std::vector<long> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Usage, "bad integer in list: " + item);
    }
  }
  if (v.empty()) throw Error(ErrorCode::Usage, "empty list");
  return v;
}

void emit(std::ostream& os, const json& j) { os << j.dump() << '\n'; }

int cmd_expand(const Flags& f, const std::string& fmt, std::ostream& os) {
  long N = f.trunc < 0 ? 10 : f.trunc;
  RationalSeries s;
  std::string name = f.form;
  if (name == "Delta") s = delta(N);
  else if (name == "j") s = jfunction(N);
  else if (name == "g") s = to_rational_series(miller_form(need_form(f).k, f.m, N).series);
  else if (name.size() > 1 && name[0] == 'E') {
    long k = 0;
    try {
      k = std::stol(name.substr(1));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::Usage, std::string("unknown form; expected ") + kForms);
    }
    s = eisenstein(k, N);
  } else {
    throw Error(ErrorCode::Usage, std::string("unknown form; expected ") + kForms);
  }
  if (name == "g") s = series_truncate(s, N);
  if (fmt == "json") {
    json j = {{"form", name}};
    j.update(to_json(s));
    emit(os, j);
  } else {
    os << to_text(s) << '\n';
  }
  return 0;
}

int cmd_miller(const Flags& f, const std::string& fmt, std::ostream& os) {
  FormId id = need_form(f);
  long N = f.trunc < 0 ? default_trunc(id) : f.trunc;
  MillerForm g = miller_form(id.k, id.m, N);
  if (fmt == "text") {
    os << to_text(to_rational_series(g.series)) << '\n';
  } else {
    json j = to_json(id);
    j["series"] = to_json(g.series);
    emit(os, j);
  }
  return 0;
}

int cmd_faber(const Flags& f, const std::string& fmt, std::ostream& os) {
  FormId id = need_form(f);
  MillerForm g = miller_form(id.k, id.m);
  if (fmt == "text") os << to_string(g.faber) << '\n';
  else emit(os, faber_json(g));
  return 0;
}

int cmd_roots(const Flags& f, const std::string& fmt, std::ostream& os) {
  FormId id = need_form(f);
  if (f.digits < 1 || f.digits > 40) throw Error(ErrorCode::Usage, "--digits must be in 1..40");
  MillerForm g = miller_form(id.k, id.m);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(f.digits + 1));
  std::vector<RootInterval> in;
  OffInterval off;
  if (g.faber.degree() > 0) {
    in = sturm_isolate(g.faber, 0, 1728, mpq_class(1, p10));
    off = count_off_interval(g.faber);
  }
  if (fmt == "text") {
    for (const auto& r : in) os << decimal((r.lo + r.hi) / 2, f.digits) << '\n';
  } else if (fmt == "csv") {
    os << "lo,hi\n";
    for (const auto& r : in) os << decimal(r.lo, f.digits + 1) << ',' << decimal(r.hi, f.digits + 1) << '\n';
  } else {
    json j = to_json(id);
    j["degree"] = g.faber.degree();
    json a = json::array();
    for (const auto& r : in) {
      json x = to_json(r, f.digits + 1);
      x["approx"] = decimal((r.lo + r.hi) / 2, f.digits);
      a.push_back(x);
    }
    j["roots_in"] = a;
    j["real_outside"] = off.real_outside;
    j["complex_pairs"] = off.complex_pairs;
    j["square_free_defect"] = off.square_free_defect;
    emit(os, j);
  }
  return 0;
}

int cmd_arc_zeros(const Flags& f, const std::string&, std::ostream& os) {
  FormId id = need_form(f);
  ZeroOptions opt;
  opt.refine = !f.no_refine;
  opt.arc_opt.min_bits = f.precision_bits;
  ZeroReport r = zero_report(miller_form(id.k, id.m), opt);
  emit(os, to_json(r));
  return r.valence_ok ? 0 : 1;
}

int cmd_verify_bounds(const Flags&, const std::string& fmt, std::ostream& os, std::ostream& err) {
  std::vector<BoundLedgerEntry> all = full_ledger();
  if (fmt == "text") {
    for (const auto& e : all)
      os << (e.satisfied ? "ok    " : "FAIL  ") << e.name << "  " << relation_name(e.rel) << ' ' << e.claimed << "  computed "
         << std::setprecision(12) << e.computed << " +- " << std::setprecision(3) << e.err << std::setprecision(6) << '\n';
  } else {
    for (const auto& e : all) emit(os, to_json(e));
  }
  bool ok = all_satisfied(all);
  if (!ok)
    for (const auto& e : all)
      if (!e.satisfied) err << "failed: " << e.name << '\n';
  return ok ? 0 : 1;
}

int cmd_verify_thm2(const Flags&, const std::string& fmt, std::ostream& os, std::ostream& err) {
  Thm2Report rep = verify_theorem_m1();
  if (fmt == "text") {
    for (const auto& r : rep.rows)
      os << "k=" << r.id.k << " ell=" << r.id.ell << " deg=" << r.degree << " in=" << r.roots_in << " out=" << r.real_outside
         << " complex=" << r.complex_pairs << (r.passed ? " PASS" : " FAIL") << '\n';
  } else if (fmt == "csv") {
    os << "k,ell,kprime,degree,roots_in,real_outside,complex_pairs,simple,passed\n";
    for (const auto& r : rep.rows)
      os << r.id.k << ',' << r.id.ell << ',' << r.id.kprime << ',' << r.degree << ',' << r.roots_in << ',' << r.real_outside
         << ',' << r.complex_pairs << ',' << r.simple << ',' << r.passed << '\n';
  } else {
    for (const auto& r : rep.rows) emit(os, to_json(r));
  }
  for (const auto& r : rep.rows)
    if (!r.passed) err << "failed: g_{" << r.id.k << ",1}\n";
  return rep.all_passed() ? 0 : 1;
}

int cmd_mrl(const Flags& f, const std::string&, std::ostream& os) {
  FormId id = need_form(f);
  MrlReport r = proposition_mrl_check(id, f.grid_step, f.precision_bits);
  emit(os, to_json(r));
  return r.below_two() ? 0 : 1;
}

int cmd_dist(const Flags& f, const std::string& fmt, std::ostream& os) {
  if (f.bins < 1) throw Error(ErrorCode::Usage, "--bins must be positive");
  long m = f.m < 0 ? 1 : f.m;
  std::vector<DistributionStats> st = distribution_sweep(parse_list(f.k_list), m, f.bins, f.precision_bits);
  if (fmt == "json") {
    for (const auto& d : st) emit(os, to_json(d));
    return 0;
  }
  os << "k,m,zeros,star_discrepancy,max_bin_deviation";
  for (int b = 0; b < f.bins; ++b) os << ",bin" << b;
  os << '\n';
  os << std::setprecision(10);
  for (const auto& d : st) {
    os << d.id.k << ',' << d.id.m << ',' << d.zeros << ',' << d.star_discrepancy << ',' << d.max_bin_deviation;
    for (long c : d.bins) os << ',' << c;
    os << '\n';
  }
  return 0;
}

int cmd_arc_plot(const Flags& f, const std::string&, std::ostream& os) {
  std::unique_ptr<MillerForm> g;
  if (f.fn == "form") {
    FormId id = need_form(f);
    g = std::make_unique<MillerForm>(miller_form(id.k, id.m));
  }
  os << arc_csv(sample_arc(f.fn, f.grid_step, g.get()));
  return 0;
}

bool is_usage(ErrorCode c) {
  return c == ErrorCode::Usage || c == ErrorCode::BadIndex || c == ErrorCode::UnsupportedWeight ||
         c == ErrorCode::DomainError;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Miller basis forms, Faber polynomials and the zeros of g_{k,m} on the arc"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--format", f.format, "json, csv or text (default depends on the command)")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", f.out, "write to this file instead of stdout");

  auto add_km = [&](CLI::App* s, bool required) {
    auto* k = s->add_option("--k", f.k, "weight");
    auto* m = s->add_option("--m", f.m, "index m of g_{k,m}");
    if (required) {
      k->required();
      m->required();
    }
  };

  auto* expand = app.add_subcommand("expand", "q-expansion of a standard form");
  expand->add_option("--form", f.form, kForms);
  expand->add_option("--trunc", f.trunc, "last power of q (default 10)");
  add_km(expand, false);

  auto* miller = app.add_subcommand("miller", "q-expansion of the Miller basis element g_{k,m}");
  add_km(miller, true);
  miller->add_option("--trunc", f.trunc, "last power of q (default ell + m + 8)");

  auto* faber = app.add_subcommand("faber", "Faber polynomial F_{k,m}");
  add_km(faber, true);

  auto* roots = app.add_subcommand("roots", "isolated real roots of F_{k,m} in [0,1728]");
  add_km(roots, true);
  roots->add_option("--digits", f.digits, "fractional digits reported (default 6)");

  auto* arc = app.add_subcommand("arc-zeros", "zero report: arc sign changes, Faber roots, valence check");
  add_km(arc, true);
  arc->add_option("--precision-bits", f.precision_bits, "minimum working precision");
  arc->add_flag("--no-refine", f.no_refine, "keep the sign-change brackets unrefined");

  auto* vb = app.add_subcommand("verify-bounds", "the full bound ledger, one JSON record per entry");
  auto* vt = app.add_subcommand("verify-thm2", "all roots of F_{k,1} real, simple, in [0,1728] for ell <= 14");

  auto* mrl = app.add_subcommand("mrl-check", "max over the arc of |e^{ik theta/2} e^{2 pi m sin} g - 2cos(h)|");
  add_km(mrl, true);
  mrl->add_option("--grid-step", f.grid_step, "angle step (default 1e-3)")->check(CLI::PositiveNumber);
  mrl->add_option("--precision-bits", f.precision_bits, "minimum working precision");

  auto* dist = app.add_subcommand("dist", "distribution of the zero angles of g_{k,m}");
  dist->add_option("--k-list", f.k_list, "comma separated weights (default 120,480,1920)");
  dist->add_option("--m", f.m, "index m (default 1)");
  dist->add_option("--bins", f.bins, "histogram bins (default 10)");
  dist->add_option("--precision-bits", f.precision_bits, "minimum working precision");

  auto* plot = app.add_subcommand("arc-plot", "theta,value,err samples of an arc function");
  plot->add_option("--fn", f.fn, "e2, e4, e6, delta, j or form (needs --k, --m)");
  plot->add_option("--grid-step", f.grid_step, "angle step (default 1e-3)")->check(CLI::PositiveNumber);
  add_km(plot, false);

  for (auto* s : app.get_subcommands({})) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  std::ofstream file;
  std::ostream* os = &out;
  if (!f.out.empty()) {
    file.open(f.out);
    if (!file) {
      err << "cannot open " << f.out << '\n';
      return 2;
    }
    os = &file;
  }
  auto fmt_or = [&](const char* d) { return f.format.empty() ? std::string(d) : f.format; };

  try {
    if (expand->parsed()) return cmd_expand(f, fmt_or("text"), *os);
    if (miller->parsed()) return cmd_miller(f, fmt_or("json"), *os);
    if (faber->parsed()) return cmd_faber(f, fmt_or("json"), *os);
    if (roots->parsed()) return cmd_roots(f, fmt_or("json"), *os);
    if (arc->parsed()) return cmd_arc_zeros(f, fmt_or("json"), *os);
    if (vb->parsed()) return cmd_verify_bounds(f, fmt_or("json"), *os, err);
    if (vt->parsed()) return cmd_verify_thm2(f, fmt_or("json"), *os, err);
    if (mrl->parsed()) return cmd_mrl(f, fmt_or("json"), *os);
    if (dist->parsed()) return cmd_dist(f, fmt_or("csv"), *os);
    if (plot->parsed()) return cmd_arc_plot(f, fmt_or("csv"), *os);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_usage(e.code()) ? 2 : 1;
  }
  return 2;
}

int run(int argc, const char* const* argv) { return run(argc, argv, std::cout, std::cerr); }

}  // namespace mz
