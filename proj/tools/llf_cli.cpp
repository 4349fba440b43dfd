// Command-line front end: L-factors, poles, Rankin-Selberg factors,
// reducibility, theta certificates, grid sweeps and numeric checks.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "llf/json_io.hpp"
#include "llf/llf.hpp"

namespace {

using namespace llf;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_counterexample = 2;
constexpr int exit_numeric = 3;

std::vector<PoleEntry> pole_entries(const LFactor& l, const QQ& lower) {
  std::vector<PoleEntry> out;
  for (const auto& [s, k] : real_poles(l, lower)) out.push_back({s, k});
  return out;
}

std::vector<std::string> flags_of(const LFactor& l) {
  if (l.opaque_degraded()) return {"opaque-degraded"};
  return {};
}

void print_poles(const std::vector<PoleEntry>& poles, const QQ& lower) {
  std::cout << "real poles s >= " << to_string(lower) << ":";
  if (poles.empty()) std::cout << " none";
  for (const auto& p : poles) std::cout << " " << to_string(p.s) << (p.order > 1 ? " (order " + std::to_string(p.order) + ")" : "");
  std::cout << "\n";
}

void print_pole_report(const std::string& label, const PoleReport& r) {
  std::cout << label << " order " << r.order << " at s=" << to_string(r.s);
  if (!r.contributors.empty()) {
    std::cout << " from";
    for (const auto& [atom, k] : r.contributors) std::cout << " " << to_string(atom) << (k > 1 ? "^" + std::to_string(k) : "");
  }
  std::cout << "\n";
}

void warn_degraded(bool degraded) {
  if (degraded) std::cout << "warning: opaque supercuspidal present; its L-factors are modelled as 1\n";
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

template <class T, class F>
std::vector<T> parse_list(const std::string& s, F parse_one) {
  std::vector<T> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_one(item));
  return out;
}

struct SweepArgs {
  std::string property;
  std::string field = "all";
  std::string m_values, r_values, c_values, zeta_orders, opaque_degrees;
  int max_length = -1;
  int max_blocks = -1;
  bool no_ramified = false;
  unsigned workers = 0;
  std::string mutation = "none";
  std::string out;
  bool no_timing = false;
  bool json = false;
};

GridSpec grid_for(Field f, const SweepArgs& a) {
  GridSpec g = GridSpec::defaults(f);
  if (!a.m_values.empty()) g.m_values = parse_int_list(a.m_values);
  if (!a.r_values.empty()) g.r_values = parse_list<CQ>(a.r_values, [](const std::string& x) { return parse_complex(x); });
  if (!a.c_values.empty()) g.c_values = parse_list<QQ>(a.c_values, [](const std::string& x) { return parse_rational(x); });
  if (!a.zeta_orders.empty()) g.zeta_orders = parse_int_list(a.zeta_orders);
  if (!a.opaque_degrees.empty()) g.opaque_degrees = a.opaque_degrees == "none" ? std::vector<int>{} : parse_int_list(a.opaque_degrees);
  if (a.max_length > 0) g.max_length = a.max_length;
  if (a.max_blocks > 0) g.max_blocks = a.max_blocks;
  if (a.no_ramified) g.include_ramified = false;
  return g;
}

int run_sweep(const SweepArgs& a) {
  auto mutation = parse_mutation(a.mutation);
  if (!mutation) throw InvalidParameter("unknown mutation '" + a.mutation + "'");
  std::vector<Field> fields;
  if (a.field == "all")
    fields = {Field::real, Field::complex, Field::nonarch};
  else
    fields = {field_from(a.field)};

  SweepOptions opt{*mutation, a.workers};
  json doc{{"version", json_schema_version}, {"command", "sweep"}, {"property", a.property}};
  json reports = json::array();
  bool all_pass = true;
  for (Field f : fields) {
    GridSpec g = grid_for(f, a);
    SweepReport r = a.property == "pat1"      ? verify_pat1(g, opt)
                    : a.property == "generic" ? verify_generic(g, opt)
                                              : verify_tempered_rs(g, opt);
    all_pass = all_pass && r.passed();
    reports.push_back(sweep_json(r, !a.no_timing));
    if (!a.json) {
      std::cout << r.property << " [" << to_string(f) << "]: " << r.verdict() << ", " << r.cases << " cases, "
                << r.counterexamples.size() << " counterexamples, " << r.degraded_cases << " degraded";
      if (!a.no_timing) std::cout << ", " << std::fixed << std::setprecision(3) << r.wall_time_s << " s";
      std::cout << "\n";
      std::size_t shown = 0;
      for (const auto& c : r.counterexamples) {
        if (++shown > 5) {
          std::cout << "  ... (" << r.counterexamples.size() - 5 << " more)\n";
          break;
        }
        std::cout << "  counterexample:";
        for (const auto& b : c.blocks) std::cout << " " << b;
        std::cout << "  (" << c.note << ")\n";
      }
    }
  }
  doc["verdict"] = all_pass ? "PASS" : "FAIL";
  doc["reports"] = reports;
  if (a.json) std::cout << doc.dump(2) << "\n";
  if (!a.out.empty()) {
    std::ofstream os(a.out);
    if (!os) throw Error("cannot write '" + a.out + "'");
    os << doc.dump(2) << "\n";
  }
  return all_pass ? exit_ok : exit_counterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact local L-factors of GL_n: poles, Rankin-Selberg factors and theta certificates"};
  app.require_subcommand(1);

  std::string rep1, rep2, at;
  std::string window = "-4";
  bool as_json = false;

  auto* lf = app.add_subcommand("lfactor", "Godement-Jacquet L-factor of a product");
  lf->add_option("rep", rep1, "representation, e.g. \"chiR(0,-1/2) x chiR(0,1/2)\"")->required();
  lf->add_option("--from", window, "list real poles s >= this value")->default_val("-4");
  lf->add_flag("--json", as_json);

  auto* pole = app.add_subcommand("pole", "pole order of L(s, rep) at a rational point");
  pole->add_option("rep", rep1)->required();
  pole->add_option("--at", at, "rational point p/q")->required();
  pole->add_flag("--json", as_json);

  auto* du = app.add_subcommand("dual", "contragredient representation");
  du->add_option("rep", rep1)->required();

  auto* rs = app.add_subcommand("rs", "Rankin-Selberg L-factor L(s, rep1 x rep2)");
  rs->add_option("rep1", rep1)->required();
  rs->add_option("rep2", rep2)->required();
  rs->add_option("--from", window, "list real poles s >= this value")->default_val("-4");
  rs->add_flag("--json", as_json);

  auto* red = app.add_subcommand("reducible", "reducibility of b1 x b2 for two blocks");
  red->add_option("block1", rep1)->required();
  red->add_option("block2", rep2)->required();

  auto* theta = app.add_subcommand("theta-check", "no-pole-at-1/2 certificate for the full theta lifts");
  theta->add_option("rep", rep1)->required();
  theta->add_flag("--json", as_json);

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "exhaustive grid verification");
  sweep->add_option("property", sw.property)->required()->check(CLI::IsMember({"pat1", "generic", "tempered-rs"}));
  sweep->add_option("--field", sw.field)->check(CLI::IsMember({"real", "complex", "nonarch", "all"}));
  sweep->add_option("--m-values", sw.m_values, "comma-separated integers");
  sweep->add_option("--r-values", sw.r_values, "comma-separated complex rationals");
  sweep->add_option("--c-values", sw.c_values, "comma-separated rationals");
  sweep->add_option("--zeta-orders", sw.zeta_orders, "comma-separated orders");
  sweep->add_option("--opaque-degrees", sw.opaque_degrees, "comma-separated degrees, or 'none'");
  sweep->add_option("--max-length", sw.max_length);
  sweep->add_option("--max-blocks", sw.max_blocks, "products of up to this many blocks (generic); cost grows like n^k");
  sweep->add_flag("--no-ramified", sw.no_ramified);
  sweep->add_option("--workers", sw.workers, "worker threads (0: all cores)");
  sweep->add_option("--mutate", sw.mutation, "deliberately corrupt one rule")
      ->check(CLI::IsMember({"none", "drop-cg-leading", "flip-real-dual", "gamma-r-off-by-one"}));
  sweep->add_option("--out", sw.out, "write the JSON report to this file");
  sweep->add_flag("--no-timing", sw.no_timing);
  sweep->add_flag("--json", sw.json);

  auto* num = app.add_subcommand("numeric", "floating-point checks");
  num->require_subcommand(1);
  int samples = 20;
  auto* dup = num->add_subcommand("duplication", "Gamma_C(s) = Gamma_R(s) Gamma_R(s+1) on sample points");
  dup->add_option("--samples", samples)->check(CLI::PositiveNumber);
  int tate_m = 0;
  std::string tate_s;
  numeric::QuadratureSpec quad;
  auto* tate = num->add_subcommand("tate", "GL_1(R) zeta integral against Gamma_R(s + m)");
  tate->add_option("--m", tate_m)->required()->check(CLI::IsMember({0, 1}));
  tate->add_option("--s", tate_s)->required();
  tate->add_option("--nodes", quad.nodes);
  tate->add_option("--cutoff", quad.cutoff);
  tate->add_option("--epsilon", quad.epsilon);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*lf || *rs) {
      const QQ lower = parse_rational(window);
      LFactor l;
      JsonReport report;
      if (*lf) {
        RepProduct rho = parse(rep1);
        l = gj_lfactor(rho);
        report.command = "lfactor";
        report.input = {format(rho)};
      } else {
        RepProduct a = parse(rep1), b = parse(rep2);
        l = rs_lfactor(a, b);
        report.command = "rs";
        report.input = {format(a), format(b)};
      }
      report.lfactor = l.terms();
      report.poles = pole_entries(l, lower);
      report.flags = flags_of(l);
      if (as_json) {
        std::cout << json(report).dump(2) << "\n";
      } else {
        std::cout << (*lf ? "L(s, " + report.input[0] + ")" : "L(s, (" + report.input[0] + ") x (" + report.input[1] + "))")
                  << " = " << to_string(l) << "\n";
        print_poles(report.poles, lower);
        warn_degraded(l.opaque_degraded());
      }
      return exit_ok;
    }
    if (*pole) {
      RepProduct rho = parse(rep1);
      const QQ s0 = parse_rational(at);
      LFactor l = gj_lfactor(rho);
      PoleReport r = pole_order(l, s0);
      if (as_json) {
        JsonReport report{json_schema_version, "pole", {format(rho)}, l.terms(), {{s0, r.order}}, std::nullopt, flags_of(l)};
        std::cout << json(report).dump(2) << "\n";
      } else {
        print_pole_report("L(s, " + format(rho) + "):", r);
        warn_degraded(r.opaque_degraded);
      }
      return exit_ok;
    }
    if (*du) {
      std::cout << format(dual(parse(rep1))) << "\n";
      return exit_ok;
    }
    if (*red) {
      Block b1 = canonicalize(parse_block(rep1)), b2 = canonicalize(parse_block(rep2));
      Verdict v = pair_reducible(b1, b2);
      std::cout << format(b1) << " x " << format(b2) << ": " << (v.value ? "reducible" : "irreducible") << "\n";
      std::cout << "e(b1) = " << to_string(exponent_e(b1)) << ", e(b2) = " << to_string(exponent_e(b2)) << "\n";
      if (!v.opaque_degraded) {
        print_pole_report("L(s, b1^vee x b2):", pole_order(rs_lfactor(dual(b1), b2), QQ(1)));
        print_pole_report("L(s, b2^vee x b1):", pole_order(rs_lfactor(dual(b2), b1), QQ(1)));
      }
      warn_degraded(v.opaque_degraded);
      return exit_ok;
    }
    if (*theta) {
      RepProduct rho = parse(rep1);
      ThetaCertificate cert = theta_certificate(rho);
      if (as_json) {
        LFactor l = gj_lfactor(rho);
        JsonReport report{json_schema_version,
                          "theta-check",
                          {format(rho)},
                          l.terms(),
                          {{cert.sigma_pole_at_half.s, cert.sigma_pole_at_half.order}},
                          cert,
                          flags_of(l)};
        std::cout << json(report).dump(2) << "\n";
      } else {
        std::cout << "sigma = " << format(rho) << "\n";
        print_pole_report("L(s, sigma):", cert.sigma_pole_at_half);
        print_pole_report("L(s, sigma^vee):", cert.dual_pole_at_half);
        std::cout << "certified=" << (cert.certified ? "true" : "false") << "\n";
        std::cout << "reason: " << cert.reason << "\n";
        warn_degraded(cert.sigma_pole_at_half.opaque_degraded);
      }
      return exit_ok;
    }
    if (*sweep) return run_sweep(sw);
    if (*dup) {
      const double err = numeric::check_duplication(samples);
      std::cout << std::setprecision(15) << "duplication: max relative error " << err << " over " << samples
                << " points (tolerance 1e-09)\n";
      return err <= 1e-9 ? exit_ok : exit_numeric;
    }
    if (*tate) {
      const numeric::cplx s = numeric::to_complex(parse_complex(tate_s));
      const numeric::cplx z = numeric::tate_integral(tate_m, s, quad);
      const numeric::cplx closed = numeric::eval_atom(GammaR{CQ{QQ(tate_m)}}, s);
      const double rel = std::abs(z - closed) / std::abs(closed);
      const std::string label = to_string(Atom{GammaR{CQ{QQ(tate_m)}}});
      std::cout << std::setprecision(15) << "quadrature: " << z.real() << (z.imag() < 0 ? " - " : " + ")
                << std::abs(z.imag()) << "i\n"
                << label << ": " << closed.real() << (closed.imag() < 0 ? " - " : " + ")
                << std::abs(closed.imag()) << "i\n"
                << "relative error " << rel << " (tolerance 1e-06)\n";
      return rel <= 1e-6 ? exit_ok : exit_numeric;
    }
  } catch (const llf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
