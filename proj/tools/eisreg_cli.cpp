// eisreg: series dumps, completed L-values and identity verification suites
// for the level-N^2 Eisenstein families.
//
//   eisreg qexp   G 1 0 2 5 --terms 10
//   eisreg lambda H 3 1 2 5 --s 4
//   eisreg verify theorem --k1 1 --k2 2 --N 7
//
// Exit codes: 0 pass, 1 residual failure, 2 invalid spec, 3 pole,
// 4 convergence failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "eisreg/eisenstein.hpp"
#include "eisreg/lfunc.hpp"
#include "eisreg/suites.hpp"
#include "eisreg/zeta.hpp"

using namespace eisreg;
using ordered_json = nlohmann::ordered_json;

namespace {

Family parse_family(const std::string& s) {
  if (s == "E") return Family::E;
  if (s == "F") return Family::F;
  if (s == "G") return Family::G;
  if (s == "H") return Family::H;
  throw invalid_spec("unknown family '" + s + "' (expected E, F, G or H)");
}

double env_or(const char* name, double fallback) {
  const char* v = std::getenv(name);
  return v ? std::atof(v) : fallback;
}
long long env_or_ll(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  return v ? std::atoll(v) : fallback;
}
std::string env_or_s(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? std::string(v) : fallback;
}

struct Output {
  std::string path;  // empty: stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream os(path);
    os << text;
  }
};

int run_qexp(const std::string& fam, int k, long long a, long long b, long long N, long long terms,
             const Output& out) {
  EisensteinSpec spec{parse_family(fam), k, a, b, N};
  FourierQSeries f = build_series(spec, terms);
  ordered_json header;
  header["schema"] = 1;
  header["level"] = f.level();
  header["weight"] = f.weight();
  header["family"] = fam;
  header["k"] = k;
  header["a"] = a;
  header["b"] = b;
  header["N"] = N;
  header["truncation"] = std::to_string(f.trunc_num()) + "/" + std::to_string(f.denom());
  if (f.nonholomorphic_correction()) header["nonholomorphic_correction"] = "1/(4 pi Im tau)";
  std::ostringstream os;
  os << header.dump() << "\n";
  f.dump(os);
  out.write(os.str());
  return 0;
}

int run_lambda(const std::string& fam, int k, long long a, long long b, long long N, double sre,
               double sim, bool star, const std::vector<std::string>& times, double tol,
               long long terms, const Output& out) {
  Family family = parse_family(fam);
  if (family != Family::G && family != Family::H)
    throw invalid_spec("lambda supports the level-N^2 families G and H (and their products)");
  long long T = std::max<long long>(terms, 300);
  EisensteinSpec s1{family, k, a, b, N};
  FourierQSeries f = build_series(s1, T);
  FourierQSeries wf = atkin_lehner_partner(s1, T);
  int weight = k;
  std::string spec_str = fam + "^(" + std::to_string(k) + ")_{" + std::to_string(a) + "," +
                         std::to_string(b) + "}[N=" + std::to_string(N) + "]";
  if (!times.empty()) {
    if (times.size() != 4) throw invalid_spec("--times expects FAMILY K A B");
    EisensteinSpec s2{parse_family(times[0]), std::stoi(times[1]), std::stoll(times[2]),
                      std::stoll(times[3]), N};
    FourierQSeries g = build_series(s2, T);
    FourierQSeries wg = atkin_lehner_partner(s2, T);
    f = f.to_numeric() * g.to_numeric();
    wf = wf.to_numeric() * wg.to_numeric();
    weight += s2.k;
    spec_str += " * " + times[0] + "^(" + times[1] + ")_{" + times[2] + "," + times[3] + "}";
  }
  Complex s(sre, sim);
  LambdaValue lv;
  if (star) {
    if (s == Complex(0, 0))
      lv = lambda_star(f, wf, N * N, weight, RegPoint::zero, tol);
    else if (s == Complex(double(weight), 0))
      lv = lambda_star(f, wf, N * N, weight, RegPoint::weight, tol);
    else
      throw invalid_spec("--star applies at s = 0 or s = k only");
  } else {
    lv = completed_lambda(f, wf, N * N, weight, s, tol);
  }
  ordered_json rec;
  rec["schema"] = 1;
  rec["series_spec"] = spec_str;
  rec["s"] = {sre, sim};
  rec["value_re"] = lv.value.v.real();
  rec["value_im"] = lv.value.v.imag();
  rec["err"] = lv.value.err;
  rec["regularized"] = lv.regularized;
  ordered_json poles = ordered_json::array();
  for (const auto& [loc, res] : lv.pole_subtractions)
    poles.push_back({{"location", {loc.real(), loc.imag()}},
                     {"residue", {res.real(), res.imag()}}});
  rec["pole_subtractions"] = poles;
  out.write(rec.dump(2) + "\n");
  return 0;
}

int run_verify(const std::string& suite, const SuiteConfig& cfg, const std::string& format,
               const Output& out) {
  std::vector<CheckResult> checks;
  if (suite == "hurwitz")
    checks = suite_hurwitz(cfg);
  else if (suite == "fourier")
    checks = suite_fourier(cfg);
  else if (suite == "atkin_lehner")
    checks = suite_atkin_lehner(cfg);
  else if (suite == "slash")
    checks = suite_slash(cfg);
  else if (suite == "rz")
    checks = suite_rz(cfg);
  else if (suite == "rankin")
    checks = suite_rankin(cfg);
  else if (suite == "fibers")
    checks = suite_fibers(cfg);
  else if (suite == "cancellation")
    checks = suite_cancellation(cfg);
  else if (suite == "theorem")
    checks = suite_theorem(cfg);
  else if (suite == "preswap")
    checks = suite_preswap(cfg);
  else if (suite == "all")
    checks = suite_all(cfg);
  else
    throw invalid_spec("unknown suite '" + suite + "'");

  bool all_pass = true;
  const CheckResult* worst = nullptr;
  double worst_ratio = -1;
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass();
    double ratio = c.tol > 0 ? c.residual / c.tol : c.residual;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = &c;
    }
  }

  if (format == "json") {
    ordered_json rep;
    rep["schema"] = 1;
    rep["suite"] = suite;
    rep["config"] = {{"tol", cfg.tol_override}, {"terms", cfg.terms}, {"seed", cfg.seed},
                     {"prec", cfg.prec}};
    ordered_json arr = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json j;
      j["id"] = c.id;
      j["identity"] = c.identity;
      j["params"] = c.params;
      j["residual"] = c.residual;
      j["tol"] = c.tol;
      j["pass"] = c.pass();
      if (c.has_sides) {
        j["lhs"] = {c.lhs.real(), c.lhs.imag()};
        j["rhs"] = {c.rhs.real(), c.rhs.imag()};
        j["abs_err"] = c.residual;
      }
      if (!c.detail.empty()) j["report"] = ordered_json::parse(c.detail);
      arr.push_back(j);
    }
    rep["checks"] = arr;
    rep["pass"] = all_pass;
    if (worst) {
      rep["worst"] = {{"id", worst->id}, {"identity", worst->identity},
                      {"residual", worst->residual}, {"tol", worst->tol}};
    }
    out.write(rep.dump(2) + "\n");
  } else if (format == "csv") {
    std::ostringstream os;
    os << "id,residual,tol,pass\n";
    for (const auto& c : checks)
      os << c.id << "," << c.residual << "," << c.tol << "," << (c.pass() ? 1 : 0) << "\n";
    out.write(os.str());
  } else {
    std::ostringstream os;
    for (const auto& c : checks) {
      char line[512];
      std::snprintf(line, sizeof line, "%-60s residual=%-12.3e tol=%-9.1e %s\n", c.id.c_str(),
                    c.residual, c.tol, c.pass() ? "ok" : "FAIL");
      os << line;
    }
    os << (all_pass ? "all checks passed\n" : "FAILURES present\n");
    if (!all_pass && worst) os << "worst offender: " << worst->id << " (" << worst->identity << ")\n";
    out.write(os.str());
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computation and verification for the level-N^2 Eisenstein regulator identities"};
  app.require_subcommand(1);

  // qexp
  auto* qexp = app.add_subcommand("qexp", "dump a q-expansion");
  std::string q_fam;
  int q_k = 1;
  long long q_a = 0, q_b = 0, q_N = 5, q_terms = env_or_ll("EISREG_TERMS", 200);
  std::string q_out = env_or_s("EISREG_OUT", "");
  qexp->add_option("family", q_fam, "E, F, G or H")->required();
  qexp->add_option("k", q_k, "weight")->required();
  qexp->add_option("a", q_a)->required();
  qexp->add_option("b", q_b)->required();
  qexp->add_option("N", q_N)->required();
  qexp->add_option("--terms", q_terms, "truncation order");
  qexp->add_option("--out", q_out, "output file (default stdout)");

  // lambda
  auto* lam = app.add_subcommand("lambda", "completed L-value of a series or product");
  std::string l_fam;
  int l_k = 1;
  long long l_a = 0, l_b = 0, l_N = 5, l_terms = env_or_ll("EISREG_TERMS", 300);
  double l_sre = 0, l_sim = 0, l_tol = env_or("EISREG_TOL", 1e-11);
  bool l_star = false;
  std::vector<std::string> l_times;
  std::string l_out = env_or_s("EISREG_OUT", "");
  lam->add_option("family", l_fam, "G or H")->required();
  lam->add_option("k", l_k)->required();
  lam->add_option("a", l_a)->required();
  lam->add_option("b", l_b)->required();
  lam->add_option("N", l_N)->required();
  lam->add_option("--s", l_sre, "Re(s)")->required();
  lam->add_option("--si", l_sim, "Im(s)");
  lam->add_flag("--star", l_star, "regularized value at s = 0 or s = k");
  lam->add_option("--times", l_times, "multiply by a second series: FAMILY K A B")->expected(4);
  lam->add_option("--tol", l_tol);
  lam->add_option("--terms", l_terms);
  lam->add_option("--out", l_out);

  // verify
  auto* ver = app.add_subcommand("verify", "run a named identity suite");
  std::string v_suite, v_format = env_or_s("EISREG_FORMAT", "json");
  std::string v_out = env_or_s("EISREG_OUT", "");
  SuiteConfig cfg;
  cfg.tol_override = env_or("EISREG_TOL", -1);
  cfg.terms = env_or_ll("EISREG_TERMS", 200);
  cfg.seed = static_cast<unsigned long long>(env_or_ll("EISREG_SEED", 1));
  cfg.prec = static_cast<int>(env_or_ll("EISREG_PREC", 64));
  ver->add_option("suite", v_suite,
                  "hurwitz|fourier|atkin_lehner|slash|rz|rankin|fibers|cancellation|theorem|"
                  "preswap|all")
      ->required();
  ver->add_option("--tol", cfg.tol_override, "override the pinned tolerances");
  ver->add_option("--terms", cfg.terms);
  ver->add_option("--prec", cfg.prec, "zeta kernel working precision in bits (53 or 64)");
  ver->add_option("--seed", cfg.seed);
  ver->add_option("--k1", cfg.k1, "restrict the theorem/cancellation sweep");
  ver->add_option("--k2", cfg.k2);
  ver->add_option("--N", cfg.N);
  ver->add_option("--out", v_out);
  ver->add_option("--format", v_format, "json|csv|text");

  CLI11_PARSE(app, argc, argv);

  try {
    if (qexp->parsed()) return run_qexp(q_fam, q_k, q_a, q_b, q_N, q_terms, Output{q_out});
    if (lam->parsed())
      return run_lambda(l_fam, l_k, l_a, l_b, l_N, l_sre, l_sim, l_star, l_times, l_tol, l_terms,
                        Output{l_out});
    if (ver->parsed()) {
      set_zeta_working_precision(cfg.prec);
      return run_verify(v_suite, cfg, v_format, Output{v_out});
    }
  } catch (const invalid_spec& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return 2;
  } catch (const pole_error& e) {
    std::cerr << "pole: " << e.what() << "\n";
    return 3;
  } catch (const convergence_error& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
