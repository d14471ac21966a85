#include "eisreg/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <random>
#include <sstream>

#include "eisreg/eisenstein.hpp"
#include "eisreg/gamma.hpp"
#include "eisreg/lfunc.hpp"
#include "eisreg/regulator.hpp"
#include "eisreg/rz.hpp"
#include "eisreg/zeta.hpp"

namespace eisreg {

namespace {

const double PI = 3.14159265358979323846;
const Complex I(0.0, 1.0);

double tol_or(const SuiteConfig& cfg, double pinned) {
  return cfg.tol_override > 0 ? cfg.tol_override : pinned;
}

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

void sort_by_id(std::vector<CheckResult>& v) {
  std::sort(v.begin(), v.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
}

long long draw(std::mt19937_64& rng, long long n) {
  return static_cast<long long>(rng() % static_cast<unsigned long long>(n));
}

EisensteinSpec sp(Family f, int k, long long a, long long b, long long N) {
  return EisensteinSpec{f, k, a, b, N};
}

const char* family_name(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    default: return "H";
  }
}

// test-side transcription of the constant-term case tables
Coeff expected_a0(const EisensteinSpec& s) {
  long long N = s.N;
  long long a = ((s.a % N) + N) % N, b = ((s.b % N) + N) % N;
  Rational half(1, 2);
  auto frac = [&](long long r) { return Rational(r, N); };
  switch (s.family) {
    case Family::E:
      if (s.k == 1) {
        if (a == 0 && b == 0) return Coeff();
        if (a == 0) return Coeff(half_ratio(N, b) * half);
        return Coeff::rational(half - frac(a));
      }
      if (a == 0) return Coeff(periodic_zeta_nonpos_exact(b, N, s.k));
      return s.k == 2 ? Coeff::rational(Rational(-1, 12)) : Coeff();
    case Family::F:
      if (s.k == 1) {
        if (a == 0 && b == 0) return Coeff();
        if (a == 0) return Coeff(half_ratio(N, b) * half);
        return Coeff::rational(half - frac(a));
      }
      return Coeff::rational(-bernoulli_poly(s.k, frac(a)) / s.k);
    case Family::G: {
      if (s.k == 1) {
        if (a == 0 && b != 0) return Coeff::rational(half - frac(b));
        if (a != 0 && b == 0) return Coeff::rational(half - frac(a));
        return Coeff();
      }
      if (b != 0) return Coeff();
      Rational scale(1);
      for (int i = 1; i < s.k; ++i) scale *= N;
      return Coeff::rational(-scale * bernoulli_poly(s.k, frac(a)) / s.k);
    }
    case Family::H:
      if (s.k == 1) {
        if (a == 0 && b == 0) return Coeff();
        if (a == 0) return Coeff(-(half_ratio(N, b) * half));
        if (b == 0) return Coeff(-(half_ratio(N, a) * half));
        return Coeff(-((half_ratio(N, a) + half_ratio(N, b)) * half));
      }
      return Coeff(periodic_zeta_nonpos_exact(-b, N, s.k));
  }
  return Coeff();
}

}  // namespace

std::vector<CheckResult> suite_hurwitz(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const Complex grid_s[5] = {Complex(2, 0), Complex(3, 0), Complex(1.5, 0), Complex(2, 1),
                             Complex(0.5, 2)};
  for (long long kx = 1; kx <= 5; ++kx) {
    for (int si = 0; si < 5; ++si) {
      CheckResult c;
      c.id = fmt("hurwitz/x=%lld_7/s=%d", kx, si);
      c.identity =
          "zeta(x,1-s) = Gamma(s)(2pi)^{-s}(e^{-i pi s/2} zetahat(x,s) + e^{i pi s/2} zetahat(-x,s))";
      c.params = fmt("x=%lld/7 s=(%g,%g)", kx, grid_s[si].real(), grid_s[si].imag());
      c.residual = verify_hurwitz_formula(FractionModOne::of(kx, 7), grid_s[si]);
      c.tol = tol_or(cfg, 1e-10);
      out.push_back(c);
    }
  }
  struct DFTCase {
    long long N, u;
    Complex s;
    double tol;
  } cases[] = {{5, 2, Complex(2.3, 0), 1e-10}, {3, 0, Complex(3.0, 0), 1e-10},
               {4, 1, Complex(2.0, 1.0), 1e-9}};
  for (const auto& d : cases) {
    CheckResult c;
    c.id = fmt("hurwitz_dft/N=%lld/u=%lld", d.N, d.u);
    c.identity = "sum_x zeta_N^{xu} zeta(x/N,s) = N^s zetahat(u/N,s), and its inverse relation";
    c.params = fmt("N=%lld u=%lld s=(%g,%g)", d.N, d.u, d.s.real(), d.s.imag());
    c.residual = finite_fourier_relation_check(d.N, d.u, d.s).max();
    c.tol = tol_or(cfg, d.tol);
    out.push_back(c);
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_constants(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (long long N : {3, 5}) {
    for (int k = 1; k <= 5; ++k) {
      for (Family fam : {Family::E, Family::F, Family::G, Family::H}) {
        int mismatches = 0, tested = 0;
        for (long long a = 0; a < N; ++a) {
          for (long long b = 0; b < N; ++b) {
            if (k == 2) {
              bool excluded = ((fam == Family::F || fam == Family::H) && a == 0 && b == 0) ||
                              (fam == Family::G && a == 0);
              if (excluded) continue;
            }
            ++tested;
            Coeff got = build_series(sp(fam, k, a, b, N), 4).constant_term();
            Coeff want = expected_a0(sp(fam, k, a, b, N));
            Coeff diff = got - want;
            if (!(diff.exact() && diff.is_zero())) ++mismatches;
          }
        }
        CheckResult c;
        c.id = fmt("constants/%s/N=%lld/k=%d", family_name(fam), N, k);
        c.identity = "constant term of the q-expansion equals the case table, exactly";
        c.params = fmt("%d label pairs", tested);
        c.residual = double(mismatches);
        c.tol = tol_or(cfg, 0.5);
        out.push_back(c);
      }
    }
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_atkin_lehner(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  const Complex taus[3] = {Complex(0, 1), Complex(0.5, 1.0), Complex(0.3, 0.9)};
  for (long long N : {3, 5}) {
    long long T = std::max<long long>(cfg.terms, suggested_trunc(1, 1.0 / double(N * N) / 1.3, 5));
    for (int k = 1; k <= 4; ++k) {
      for (long long a = 0; a < N; ++a) {
        if (k == 2 && a == 0) continue;
        for (long long b = 0; b < N; ++b) {
          FourierQSeries g = build_series(sp(Family::G, k, a, b, N), T);
          FourierQSeries h = build_series(sp(Family::H, k, a, b, N), T);
          double worst = 0;
          for (const Complex& tau : taus) {
            Complex lhs = atkin_lehner_numeric(g, N * N, k, tau).v;
            Complex rhs = ipow(k) / double(N) * h.eval(tau).v;
            worst = std::max(worst, std::abs(lhs - rhs));
          }
          CheckResult c;
          c.id = fmt("atkin_lehner/N=%lld/k=%d/a=%lld/b=%lld", N, k, a, b);
          c.identity = "W_{N^2}(G^{(k)}_{a,b}) = (i^k/N) H^{(k)}_{a,b} at three points";
          c.params = fmt("N=%lld k=%d a=%lld b=%lld", N, k, a, b);
          c.residual = worst;
          c.tol = tol_or(cfg, 1e-8);
          out.push_back(c);
        }
      }
    }
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_slash(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  struct Case {
    int k;
    long long a, b, N;
    std::array<long, 4> g;
    Complex tau;
    double tol;
    const char* name;
  } cases[] = {
      {3, 1, 0, 5, {1, 0, 0, 1}, Complex(0.1, 1.1), 1e-12, "identity"},
      {3, 1, 0, 5, {0, -1, 1, 0}, Complex(0, 1), 1e-8, "inversion"},
      {3, 1, 2, 5, {1, 1, 0, 1}, Complex(0.2, 0.9), 1e-10, "translation"},
      {4, 2, 3, 5, {2, 1, 1, 1}, Complex(0, 1.2), 1e-8, "generic"},
      {1, 1, 1, 3, {1, 0, 1, 1}, Complex(0.1, 1.3), 1e-8, "lower_unipotent"},
      {5, 0, 2, 3, {0, -1, 1, 0}, Complex(0.2, 1.1), 1e-8, "inversion_w5"},
  };
  int idx = 0;
  for (const auto& cs : cases) {
    CheckResult c;
    c.id = fmt("slash/%02d_%s", idx++, cs.name);
    c.identity = "F^{(k)}_{a,b} |_k g = F^{(k)}_{(a,b)g} for g in SL2(Z)";
    c.params = fmt("k=%d (a,b)=(%lld,%lld) N=%lld g=[%ld,%ld;%ld,%ld]", cs.k, cs.a, cs.b, cs.N,
                   cs.g[0], cs.g[1], cs.g[2], cs.g[3]);
    c.residual = slash_check_F(cs.k, cs.a, cs.b, cs.N, cs.g, cs.tau);
    c.tol = tol_or(cfg, cs.tol);
    out.push_back(c);
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_fourier(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(cfg.seed);
  const long long Ns[3] = {3, 5, 7};
  for (int i = 0; i < 12; ++i) {
    long long N = Ns[i % 3];
    int ab = 1 + int(draw(rng, 3));  // a+b in {1,2,3}
    int a = int(draw(rng, ab + 1));
    int b = ab - a;
    long long u1 = draw(rng, N), u2 = draw(rng, N);
    Complex tau(0.1 * double(draw(rng, 11) - 5), 0.8 + 0.1 * double(draw(rng, 9)));
    RAVariant var = (i % 4 == 3) ? RAVariant::F_series : RAVariant::E_series;
    RealAnalyticSpec spec{a, b, u1, u2, N, var};
    int cutoff = (var == RAVariant::F_series) ? 1120 : 2240;
    Complex lat = real_analytic_eval(spec, tau, cutoff).v;
    Complex fou = real_analytic_fourier_eval(spec, tau, 1e-10).v;
    CheckResult c;
    c.id = fmt("fourier/%02d", i);
    c.identity = "Fourier expansion of the real-analytic series equals its lattice sum";
    c.params = fmt("%s a=%d b=%d u=(%lld,%lld) N=%lld tau=(%g,%g)",
                   var == RAVariant::E_series ? "E" : "F", a, b, u1, u2, N, tau.real(), tau.imag());
    c.residual = std::abs(lat - fou);
    c.tol = tol_or(cfg, 1e-7);
    c.has_sides = true;
    c.lhs = lat;
    c.rhs = fou;
    out.push_back(c);
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_lambda(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  // closed form vs Mellin quadrature on six instances
  struct HCase {
    int k;
    long long a, b, N;
    Complex s;
  } hc[] = {{1, 1, 2, 5, Complex(0.8, 0)},  {2, 1, 1, 5, Complex(1.3, 0)},
            {3, 1, 2, 5, Complex(2.5, 0)},  {3, 2, 0, 3, Complex(1.7, 0)},
            {4, 0, 1, 3, Complex(2.2, 0.5)}, {2, 2, 1, 3, Complex(0.9, 0)}};
  int idx = 0;
  for (const auto& t : hc) {
    long long T = std::max<long long>(cfg.terms, 300);
    FourierQSeries h = build_series(sp(Family::H, t.k, t.a, t.b, t.N), T);
    FourierQSeries wh = atkin_lehner_partner(sp(Family::H, t.k, t.a, t.b, t.N), T);
    Complex quad = completed_lambda(h, wh, t.N * t.N, t.k, t.s, 1e-12).value.v;
    Complex closed = lambda_H_closed_form(t.k, t.a, t.b, t.N, t.s).v;
    CheckResult c;
    c.id = fmt("lambda_closed/%02d", idx++);
    c.identity = "Lambda(H^{(k)}_{a,b}, s) quadrature equals its zetahat product closed form";
    c.params = fmt("k=%d a=%lld b=%lld N=%lld s=(%g,%g)", t.k, t.a, t.b, t.N, t.s.real(),
                   t.s.imag());
    c.residual = std::abs(quad - closed);
    c.tol = tol_or(cfg, 1e-8);
    c.has_sides = true;
    c.lhs = quad;
    c.rhs = closed;
    out.push_back(c);
  }
  // functional equation Lambda(f,s) = Lambda(Wf, k-s): 3 series x 3 s-values
  struct FE {
    const char* name;
    FourierQSeries f, wf;
    int k;
    long long M;
  };
  long long T = std::max<long long>(cfg.terms, 300);
  std::vector<FE> fes;
  fes.push_back({"G1comb_N5",
                 build_series(sp(Family::G, 1, 1, 2, 5), T) + build_series(sp(Family::G, 1, 1, -2, 5), T),
                 atkin_lehner_partner(sp(Family::G, 1, 1, 2, 5), T) +
                     atkin_lehner_partner(sp(Family::G, 1, 1, -2, 5), T),
                 1, 25});
  fes.push_back({"G3diff_N5",
                 build_series(sp(Family::G, 3, 1, 2, 5), T) - build_series(sp(Family::G, 3, 4, 2, 5), T),
                 atkin_lehner_partner(sp(Family::G, 3, 1, 2, 5), T) -
                     atkin_lehner_partner(sp(Family::G, 3, 4, 2, 5), T),
                 3, 25});
  fes.push_back({"G2_N3", build_series(sp(Family::G, 2, 1, 0, 3), T),
                 atkin_lehner_partner(sp(Family::G, 2, 1, 0, 3), T), 2, 9});
  const Complex svals[3] = {Complex(0.7, 0), Complex(1.3, 0.4), Complex(-0.2, 0)};
  for (size_t fi = 0; fi < fes.size(); ++fi) {
    for (int si = 0; si < 3; ++si) {
      const FE& fe = fes[fi];
      Complex lhs = completed_lambda(fe.f, fe.wf, fe.M, fe.k, svals[si], 1e-12).value.v;
      Complex rhs =
          completed_lambda(fe.wf, fe.f, fe.M, fe.k, Complex(double(fe.k), 0) - svals[si], 1e-12)
              .value.v;
      CheckResult c;
      c.id = fmt("lambda_feq/%s/s=%d", fe.name, si);
      c.identity = "Lambda(f,s) = Lambda(W_M f, k-s)";
      c.params = fmt("series=%s s=(%g,%g)", fe.name, svals[si].real(), svals[si].imag());
      c.residual = std::abs(lhs - rhs);
      c.tol = tol_or(cfg, 1e-9);
      c.has_sides = true;
      c.lhs = lhs;
      c.rhs = rhs;
      out.push_back(c);
    }
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_rz(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(cfg.seed);
  for (int trial = 0; trial < 20; ++trial) {
    long long N = (draw(rng, 2) == 0) ? 3 : 5;
    auto rnd_fn = [&]() {
      ArithmeticFunctionModN f = (draw(rng, 2) == 0) ? delta_fn(draw(rng, N), N)
                                                     : hat_delta_fn(draw(rng, N), N);
      if (draw(rng, 3) == 0) f = f + delta_fn(draw(rng, N), N);
      return f;
    };
    DoubleSeriesSpec s1{Complex(double(draw(rng, 5)) - 2.0, 0), Complex(double(draw(rng, 4)), 0),
                        rnd_fn(), rnd_fn(), N};
    DoubleSeriesSpec s2{Complex(double(draw(rng, 4)), 0), Complex(double(draw(rng, 3)), 0),
                        rnd_fn(), rnd_fn(), N};
    Complex s(double(draw(rng, 5)) - 2.0, double(draw(rng, 3)) - 1.0);
    double r = rz_swap_check(s1, s2, s, 1e-9);
    CheckResult c;
    c.id = fmt("rz_swap/draw%02d", trial);
    c.identity = "rz_swap";
    c.params = fmt("N=%lld t1=%g u1=%g t2=%g u2=%g s=(%g,%g)", N, s1.t.real(), s1.u.real(),
                   s2.t.real(), s2.u.real(), s.real(), s.imag());
    c.residual = r;
    c.tol = tol_or(cfg, 1e-7);
    out.push_back(c);
  }
  // s = 0 oracle instances: both quadrature sides against the 4-fold Bessel sum
  struct Inst {
    Complex t1, u1, t2, u2;
    ArithmeticFunctionModN a1, b1, a2, b2;
  };
  const long long N = 3;
  std::vector<Inst> insts;
  insts.push_back({Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(2, 0), delta_fn(1, N),
                   delta_fn(2, N), delta_fn(2, N), delta_fn(1, N)});
  insts.push_back({Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0), hat_delta_fn(1, N),
                   delta_fn(0, N), delta_fn(1, N), hat_delta_fn(2, N)});
  insts.push_back({Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0), delta_fn(2, N),
                   hat_delta_fn(1, N), hat_delta_fn(1, N), delta_fn(1, N)});
  auto weight_of = [](const ArithmeticFunctionModN& a, const ArithmeticFunctionModN& b, Complex t,
                      Complex u, long long K) {
    Complex acc(0, 0);
    for (long long m = 1; m <= K; ++m) {
      if (K % m) continue;
      long long n = K / m;
      acc += a.approx(m) * b.approx(n) * std::exp(t * std::log(double(m))) *
             std::exp(u * std::log(double(n)));
    }
    return acc;
  };
  for (size_t ii = 0; ii < insts.size(); ++ii) {
    const Inst& in = insts[ii];
    Complex oracle(0, 0);
    const long long cap = 400;
    for (long long a = 1; a <= cap; ++a) {
      Complex w1 = weight_of(in.a1, in.b1, in.t1, in.u1, a);
      if (w1 == Complex(0, 0)) continue;
      for (long long b = 1; a * b <= cap; ++b) {
        Complex w2 = weight_of(in.a2, in.b2, in.t2, in.u2, b);
        if (w2 == Complex(0, 0)) continue;
        double arg = 4.0 * PI / double(N) * std::sqrt(double(a) * double(b));
        oracle += w1 * w2 * 2.0 * std::cyl_bessel_k(0.0, arg);
      }
    }
    DoubleSeriesSpec s1{in.t1, in.u1, in.a1, in.b1, N};
    DoubleSeriesSpec s2{in.t2, in.u2, in.a2, in.b2, N};
    Complex lhs = S_product_integral(s1, s2, Complex(0, 0), 1e-11).v;
    DoubleSeriesSpec rs{in.t1, in.t2, in.a1, in.a2, N};
    DoubleSeriesSpec ri{in.u1, in.u2, in.b1, in.b2, N};
    Complex rhs = S_product_integral(ri, rs, Complex(0, 0), 1e-11).v;
    CheckResult c;
    c.id = fmt("rz_swap_s0/%zu", ii);
    c.identity = "rz_swap at s=0 against the four-fold Bessel-sum oracle";
    c.params = fmt("N=%lld instance=%zu", N, ii);
    c.residual = std::max(std::abs(lhs - oracle), std::abs(rhs - oracle));
    c.tol = tol_or(cfg, 1e-10);
    c.has_sides = true;
    c.lhs = lhs;
    c.rhs = rhs;
    out.push_back(c);
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_rankin(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  long long T = std::max<long long>(cfg.terms, 400);
  struct Pair {
    const char* name;
    long long N;
    int k, l;
    FourierQSeries f, wf, g, h;
    Complex s;
  };
  std::vector<Pair> pairs;
  {
    long long N = 5;
    pairs.push_back({"H1comb_G2diff_N5", N, 1, 2,
                     build_series(sp(Family::H, 1, 1, 2, N), T) + build_series(sp(Family::H, 1, 1, -2, N), T),
                     atkin_lehner_partner(sp(Family::H, 1, 1, 2, N), T) +
                         atkin_lehner_partner(sp(Family::H, 1, 1, -2, N), T),
                     build_series(sp(Family::G, 2, 1, 3, N), T) - build_series(sp(Family::G, 2, 1, 2, N), T),
                     atkin_lehner_partner(sp(Family::G, 2, 1, 3, N), T) -
                         atkin_lehner_partner(sp(Family::G, 2, 1, 2, N), T),
                     Complex(2, 0)});
    pairs.push_back({"G3_G1comb_N5", N, 3, 1,
                     build_series(sp(Family::G, 3, 1, 2, N), T),
                     atkin_lehner_partner(sp(Family::G, 3, 1, 2, N), T),
                     build_series(sp(Family::G, 1, 2, 1, N), T) + build_series(sp(Family::G, 1, 2, -1, N), T),
                     atkin_lehner_partner(sp(Family::G, 1, 2, 1, N), T) +
                         atkin_lehner_partner(sp(Family::G, 1, 2, -1, N), T),
                     Complex(2.5, 0)});
    pairs.push_back({"H2_G2_N5", N, 2, 2,
                     build_series(sp(Family::H, 2, 1, 1, N), T),
                     atkin_lehner_partner(sp(Family::H, 2, 1, 1, N), T),
                     build_series(sp(Family::G, 2, 2, 0, N), T),
                     atkin_lehner_partner(sp(Family::G, 2, 2, 0, N), T),
                     Complex(1.5, 0)});
  }
  {
    long long N = 3;
    pairs.push_back({"H1comb_G3_N3", N, 1, 3,
                     build_series(sp(Family::H, 1, 1, 1, N), T) + build_series(sp(Family::H, 1, 1, -1, N), T),
                     atkin_lehner_partner(sp(Family::H, 1, 1, 1, N), T) +
                         atkin_lehner_partner(sp(Family::H, 1, 1, -1, N), T),
                     build_series(sp(Family::G, 3, 1, 2, N), T),
                     atkin_lehner_partner(sp(Family::G, 3, 1, 2, N), T),
                     Complex(2, 0)});
  }
  for (const auto& p : pairs) {
    RankinCheck r = rankin_integral_check(p.f, p.wf, p.g, p.h, p.N * p.N, p.k, p.l, p.s, 1e-11);
    CheckResult c;
    c.id = fmt("rankin/%s", p.name);
    c.identity =
        "M^{s/2} int f*(iy) g*(i/(My)) y^s dy/y = Lambda(fh,s+l) - a0(f) Lambda(h,s+l) - a0(g) Lambda(f,s)";
    c.params = fmt("N^2=%lld k=%d l=%d s=(%g,%g)", p.N * p.N, p.k, p.l, p.s.real(), p.s.imag());
    c.residual = r.residual_generic;
    c.tol = tol_or(cfg, 1e-7);
    out.push_back(c);
    CheckResult c2 = c;
    c2.id = fmt("rankin_reg/%s", p.name);
    c2.identity = "the s=k variant with the regularized Lambda* values";
    c2.residual = r.residual_regularized;
    out.push_back(c2);
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_fibers(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  auto gauss_ipow = [](int k) -> std::pair<Rational, Rational> {
    switch (((k % 4) + 4) % 4) {
      case 0: return {Rational(1), Rational(0)};
      case 1: return {Rational(0), Rational(1)};
      case 2: return {Rational(-1), Rational(0)};
      default: return {Rational(0), Rational(-1)};
    }
  };
  for (int k = 0; k <= 6; ++k) {
    for (int k1 = 0; k1 <= k; ++k1) {
      int k2 = k - k1;
      int mism = 0, tested = 0;
      for (int a = 0; a <= k1; ++a) {
        for (RightForm rf : {RightForm::psi_k2_0, RightForm::psi_0_k2}) {
          for (bool cj : {false, true}) {
            ++tested;
            FiberMonomial m = fiber_integral_psi(k1, k2, a, rf, cj);
            int sgnexp = cj ? ((rf == RightForm::psi_k2_0) ? a : a + k2)
                            : ((rf == RightForm::psi_k2_0) ? k1 - a : k - a);
            auto [re, im] = gauss_ipow(k);
            Rational s = (sgnexp % 2 == 0) ? Rational(1) : Rational(-1);
            FiberMonomial want;
            want.re = re * s;
            want.im = im * s;
            want.y_pow = k;
            if (want.is_zero()) want.y_pow = 0;
            if (!(m == want)) ++mism;
          }
        }
      }
      for (int ell = 0; ell <= k1; ++ell) {
        for (RightForm rf : {RightForm::psi_k2_0, RightForm::psi_0_k2}) {
          for (bool cj : {false, true}) {
            ++tested;
            FiberMonomial m = fiber_integral_omega(k1, k2, ell, rf, cj);
            if (ell < k1) {
              if (!m.is_zero()) ++mism;
              continue;
            }
            int sgnexp = (rf == RightForm::psi_0_k2 ? k2 : 0) + (cj ? k1 : 0);
            auto [re, im] = gauss_ipow(k);
            Rational s = (sgnexp % 2 == 0) ? Rational(1) : Rational(-1);
            Rational fk(1);
            for (int i = 2; i <= k1; ++i) fk *= i;
            FiberMonomial want;
            want.re = re * s / fk;
            want.im = im * s / fk;
            want.y_pow = k2;
            want.fourpi_over_N_pow = k1 + 1;
            if (want.is_zero()) {
              want.y_pow = 0;
              want.fourpi_over_N_pow = 0;
            }
            if (!(m == want)) ++mism;
          }
        }
      }
      CheckResult c;
      c.id = fmt("fibers/k1=%d/k2=%d", k1, k2);
      c.identity = "fiber integrals of the psi and Omega wedges match their closed forms exactly";
      c.params = fmt("%d cases", tested);
      c.residual = double(mism);
      c.tol = tol_or(cfg, 0.5);
      out.push_back(c);
    }
  }
  sort_by_id(out);
  return out;
}

namespace {

std::vector<RegulatorInput> sweep_inputs(const SuiteConfig& cfg) {
  std::vector<RegulatorInput> out;
  std::mt19937_64 rng(cfg.seed);
  for (int k = 0; k <= 4; ++k) {
    for (int k1 = 0; k1 <= k; ++k1) {
      int k2 = k - k1;
      if (cfg.k1 >= 0 && k1 != cfg.k1) continue;
      if (cfg.k2 >= 0 && k2 != cfg.k2) continue;
      for (long long N : {3, 5, 7}) {
        if (cfg.N > 0 && N != cfg.N) continue;
        for (int d = 0; d < 5; ++d) {
          RegulatorInput in;
          in.k1 = k1;
          in.k2 = k2;
          in.N = N;
          do {
            in.a1 = draw(rng, N);
            in.b1 = draw(rng, N);
          } while ((k1 == 0 && in.a1 == 0 && in.b1 == 0) || (k1 == 1 && in.b1 == 0));
          do {
            in.a2 = draw(rng, N);
            in.b2 = draw(rng, N);
          } while ((k2 == 0 && in.a2 == 0 && in.b2 == 0) || (k2 == 1 && in.b2 == 0));
          out.push_back(in);
        }
      }
    }
  }
  return out;
}

}  // namespace

std::vector<CheckResult> suite_cancellation(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const RegulatorInput& in : sweep_inputs(cfg)) {
    Complex B = term_B(in).v, C = term_C(in).v, D = term_D(in).v, E = term_E(in).v,
            F = term_F(in).v;
    double worst = std::abs(C + F);
    std::string which = "C+F";
    auto upd = [&](double r, const char* w) {
      if (r > worst) {
        worst = r;
        which = w;
      }
    };
    if (in.k2 == 0) {
      upd(std::abs(D), "D");
      upd(std::abs(B + E), "B+E");
    } else {
      upd(std::abs(B), "B");
      if (in.k2 % 2 == 1)
        upd(std::abs(D + E), "D+E");
      else
        upd(std::abs(E), "E");
    }
    CheckResult c;
    c.id = fmt("cancellation/k1=%d/k2=%d/N=%lld/u=(%lld,%lld|%lld,%lld)", in.k1, in.k2, in.N,
               in.a1, in.b1, in.a2, in.b2);
    c.identity = "C+F = 0; k2=0: D=0 and B+E=0; k2>=1: B=0 and (odd: D+E=0, even: E=0)";
    c.params = fmt("worst=%s", which.c_str());
    c.residual = worst;
    c.tol = tol_or(cfg, 1e-8);
    out.push_back(c);
  }
  sort_by_id(out);
  return out;
}

namespace {

std::string regulator_report_json(const RegulatorReport& rep) {
  std::ostringstream os;
  auto cv = [](const ComplexValue& v) {
    return fmt("{\"re\":%.17g,\"im\":%.17g,\"err\":%.3g}", v.v.real(), v.v.imag(), v.err);
  };
  os << "{\"input\":{\"k1\":" << rep.input.k1 << ",\"k2\":" << rep.input.k2
     << ",\"N\":" << rep.input.N << ",\"u1\":[" << rep.input.a1 << "," << rep.input.b1
     << "],\"u2\":[" << rep.input.a2 << "," << rep.input.b2 << "]}";
  os << ",\"A\":" << cv(rep.A) << ",\"B\":" << cv(rep.B) << ",\"C\":" << cv(rep.C)
     << ",\"D\":" << cv(rep.D) << ",\"E\":" << cv(rep.E) << ",\"F\":" << cv(rep.F);
  os << ",\"lhs_via_A\":" << cv(rep.lhs_via_A) << ",\"rhs_theorem\":" << cv(rep.rhs_theorem);
  os << ",\"cancellation_residuals\":{";
  bool first = true;
  for (const auto& [k, v] : rep.cancellation_residuals) {
    if (!first) os << ",";
    first = false;
    os << "\"" << k << "\":" << fmt("%.3e", v);
  }
  os << "}}";
  return os.str();
}

}  // namespace

std::vector<CheckResult> suite_theorem(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (const RegulatorInput& in : sweep_inputs(cfg)) {
    RegulatorReport rep = theorem_both_sides(in, 1e-9);
    CheckResult c;
    c.id = fmt("theorem/k1=%d/k2=%d/N=%lld/u=(%lld,%lld|%lld,%lld)", in.k1, in.k2, in.N, in.a1,
               in.b1, in.a2, in.b2);
    c.identity =
        "A^{k1,k2}(u1,u2) + (-1)^{k1+k2+1} A^{k2,k1}(u2,u1) equals the closed-form product Lambda*";
    c.params = fmt("k1=%d k2=%d N=%lld", in.k1, in.k2, in.N);
    c.residual = rep.both_paths_residual;
    c.tol = tol_or(cfg, 1e-7);
    c.has_sides = true;
    c.lhs = rep.lhs_via_A.v;
    c.rhs = rep.rhs_theorem.v;
    c.detail = regulator_report_json(rep);
    out.push_back(c);
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_preswap(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  struct Case {
    int k1, k2;
    long long a1, b1, a2, b2;
    double s;
  } cases[] = {{0, 0, 1, 1, 2, 1, -6}, {1, 0, 1, 2, 3, 1, -7}, {0, 1, 2, 0, 1, 3, -7}};
  for (const auto& cs : cases) {
    RegulatorInput in{cs.k1, cs.k2, 5, cs.a1, cs.b1, cs.a2, cs.b2};
    double r = pre_swap_integral_check(in, Complex(cs.s, 0), 1e-7);
    CheckResult c;
    c.id = fmt("preswap/k1=%d/k2=%d", cs.k1, cs.k2);
    c.identity = "direct quadrature of the fiber-integrated form equals the exchanged closed form";
    c.params = fmt("N=5 s=%g u=(%lld,%lld|%lld,%lld)", cs.s, cs.a1, cs.b1, cs.a2, cs.b2);
    c.residual = r;
    c.tol = tol_or(cfg, 1e-6);
    out.push_back(c);
  }
  sort_by_id(out);
  return out;
}

std::vector<CheckResult> suite_all(const SuiteConfig& cfg) {
  std::vector<CheckResult> out;
  for (auto* fn : {suite_hurwitz, suite_constants, suite_atkin_lehner, suite_slash, suite_fourier,
                   suite_lambda, suite_rz, suite_rankin, suite_fibers, suite_cancellation,
                   suite_theorem, suite_preswap}) {
    auto v = fn(cfg);
    out.insert(out.end(), v.begin(), v.end());
  }
  sort_by_id(out);
  return out;
}

}  // namespace eisreg
