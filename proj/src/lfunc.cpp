#include "eisreg/lfunc.hpp"

#include <cmath>

#include "eisreg/gamma.hpp"
#include "eisreg/quadrature.hpp"
#include "eisreg/zeta.hpp"

namespace eisreg {

namespace {

Complex cpowr(double base, Complex e) { return std::exp(e * std::log(base)); }

// int_{y0}^inf f*(iy) y^w dy/y for a star series (no constant term)
QuadResult mellin_piece(const SeriesEval& fstar, double y0, Complex w, double tol) {
  if (fstar.coeff_l1() == 0.0) return {Complex(0, 0), 0.0};
  const double two_pi = 6.283185307179586;
  double decay = two_pi * double(std::max<long long>(fstar.min_exponent_num(), 1)) /
                 double(fstar.denom());
  auto g = [&](double y) -> Complex {
    // the quadrature samples far into the exponential tail; skip once the
    // product provably underflows so y^w cannot overflow against a 0 series
    double logmag = w.real() * std::log(y) - decay * y;
    if (logmag < -750.0) return Complex(0, 0);
    return fstar.eval(Complex(0, y)) * cpowr(y, w) / y;
  };
  return de_upper(g, y0, tol);
}

}  // namespace

ComplexValue dirichlet_L(const FourierQSeries& f, Complex s) {
  if (f.denom() != 1)
    throw invalid_spec("dirichlet_L: integer exponents required (denominator 1)");
  double sigma = s.real();
  int k = f.weight();
  if (sigma <= k + 1)
    throw convergence_error("dirichlet_L: outside the absolute-convergence margin Re(s) > k+1");
  Complex acc(0, 0);
  double l1 = 0, err = 0;
  double kappa = double(k) - 0.5;  // |a_n| = O(n^{k-1+eps}) certified below
  double growth = 0;
  for (const auto& [j, c] : f.coeffs()) {
    if (j == 0 || c.is_zero()) continue;
    Complex term = c.approx() * cpowr(double(j), -s);
    acc += term;
    l1 += std::abs(term);
    err += c.err() * std::pow(double(j), -sigma);
    growth = std::max(growth, std::abs(c.approx()) / std::pow(double(j), kappa));
  }
  double T = double(f.trunc_num());
  double tail = growth * (std::pow(T, kappa - sigma + 1.0) / (sigma - kappa - 1.0) +
                          std::pow(T, kappa - sigma));
  return {acc, tail + err + 8 * ComplexValue::eps() * l1};
}

LambdaValue completed_lambda(const FourierQSeries& f, const FourierQSeries& wf, long long M, int k,
                             Complex s, double tol) {
  if (M < 1) throw invalid_spec("completed_lambda: level M >= 1 required");
  const double y0 = 1.0 / std::sqrt(double(M));
  Complex a0f = f.constant_term().approx();
  Complex a0w = wf.constant_term().approx();

  if (s == Complex(0, 0) && a0f != Complex(0, 0))
    throw pole_error("completed_lambda: pole at s = 0");
  if (s == Complex(double(k), 0) && a0w != Complex(0, 0))
    throw pole_error("completed_lambda: pole at s = k");

  SeriesEval fs(f.star()), ws(wf.star());
  QuadResult If = mellin_piece(fs, y0, s, tol * 0.25);
  QuadResult Iw = mellin_piece(ws, y0, Complex(double(k), 0) - s, tol * 0.25);

  Complex v = cpowr(double(M), s * 0.5) * If.v + cpowr(double(M), (Complex(double(k), 0) - s) * 0.5) * Iw.v;
  double err = std::abs(cpowr(double(M), s * 0.5)) * If.err +
               std::abs(cpowr(double(M), (Complex(double(k), 0) - s) * 0.5)) * Iw.err;

  LambdaValue out;
  out.s = s;
  if (a0f != Complex(0, 0)) {
    v -= a0f / s;
    out.pole_subtractions.emplace_back(Complex(0, 0), -a0f);
  }
  if (a0w != Complex(0, 0)) {
    v += a0w / (s - Complex(double(k), 0));
    out.pole_subtractions.emplace_back(Complex(double(k), 0), a0w);
  }
  out.value = ComplexValue(v, err + 8 * ComplexValue::eps() * std::abs(v));
  return out;
}

LambdaValue lambda_star(const FourierQSeries& f, const FourierQSeries& wf, long long M, int k,
                        RegPoint at, double tol) {
  if (k < 1) throw invalid_spec("lambda_star: weight k >= 1 required");
  const double y0 = 1.0 / std::sqrt(double(M));
  Complex a0f = f.constant_term().approx();
  Complex a0w = wf.constant_term().approx();
  SeriesEval fs(f.star()), ws(wf.star());

  LambdaValue out;
  out.regularized = true;
  Complex v;
  double err;
  if (at == RegPoint::zero) {
    out.s = Complex(0, 0);
    QuadResult If = mellin_piece(fs, y0, Complex(0, 0), tol * 0.25);
    QuadResult Iw = mellin_piece(ws, y0, Complex(double(k), 0), tol * 0.25);
    v = If.v + std::pow(double(M), 0.5 * k) * Iw.v - a0w / double(k);
    err = If.err + std::pow(double(M), 0.5 * k) * Iw.err;
    if (a0w != Complex(0, 0)) out.pole_subtractions.emplace_back(Complex(double(k), 0), a0w);
  } else {
    out.s = Complex(double(k), 0);
    QuadResult If = mellin_piece(fs, y0, Complex(double(k), 0), tol * 0.25);
    QuadResult Iw = mellin_piece(ws, y0, Complex(0, 0), tol * 0.25);
    v = std::pow(double(M), 0.5 * k) * If.v + Iw.v - a0f / double(k);
    err = std::pow(double(M), 0.5 * k) * If.err + Iw.err;
    if (a0f != Complex(0, 0)) out.pole_subtractions.emplace_back(Complex(0, 0), -a0f);
  }
  out.value = ComplexValue(v, err + 8 * ComplexValue::eps() * std::abs(v));
  return out;
}

ComplexValue lambda_H_closed_form(int k, long long a, long long b, long long N, Complex s) {
  if (N < 1) throw invalid_spec("lambda_H_closed_form: N >= 1 required");
  long long am = ((a % N) + N) % N, bm = ((b % N) + N) % N;
  if (k == 2 && am == 0) throw invalid_spec("lambda_H_closed_form: k = 2 requires a != 0 mod N");
  if (am == 0 && s == Complex(1, 0)) throw pole_error("lambda_H_closed_form: zetahat pole at s = 1");
  if (bm == 0 && s == Complex(double(k), 0))
    throw pole_error("lambda_H_closed_form: zetahat pole at s = k");
  Complex sk = s - Complex(double(k - 1), 0);
  ComplexValue za_m = periodic_zeta(FractionModOne::of(-a, N), s);
  ComplexValue zb_m = periodic_zeta(FractionModOne::of(-b, N), sk);
  ComplexValue za_p = periodic_zeta(FractionModOne::of(a, N), s);
  ComplexValue zb_p = periodic_zeta(FractionModOne::of(b, N), sk);
  double sign = (k % 2 == 0) ? 1.0 : -1.0;
  ComplexValue sum = za_m * zb_m + sign * (za_p * zb_p);
  Complex pref = cpowr(double(N), s) * cpowr(6.283185307179586, -s) * cgamma(s);
  return {pref * sum.v, std::abs(pref) * sum.err + 8 * ComplexValue::eps() * std::abs(pref * sum.v)};
}

RankinCheck rankin_integral_check(const FourierQSeries& f, const FourierQSeries& wf,
                                  const FourierQSeries& g, const FourierQSeries& h, long long M,
                                  int k, int l, Complex s, double tol) {
  const double y0 = 1.0 / std::sqrt(double(M));
  Complex a0f = f.constant_term().approx();
  Complex a0w = wf.constant_term().approx();
  Complex a0g = g.constant_term().approx();
  Complex a0h = h.constant_term().approx();
  SeriesEval fs(f.star()), wfs(wf.star()), gs(g.star()), hs(h.star());
  const double Mk2 = std::pow(double(M), 0.5 * k);
  const double Ml2 = std::pow(double(M), 0.5 * l);

  // f*(iy) for all y, reflecting through wf below the split point
  auto fstar_at = [&](double y) -> Complex {
    if (y >= y0) return fs.eval(Complex(0, y));
    double u = 1.0 / (double(M) * y);
    Complex fval = std::pow(y, -double(k)) / Mk2 * (wfs.eval(Complex(0, u)) + a0w);
    return fval - a0f;
  };
  // g*(i/(M y)): reflected through h above the split point
  auto gstar_inv_at = [&](double y) -> Complex {
    if (y <= y0) return gs.eval(Complex(0, 1.0 / (double(M) * y)));
    return Ml2 * std::pow(y, double(l)) * (hs.eval(Complex(0, y)) + a0h) - a0g;
  };

  auto lhs_integral = [&](Complex w) -> Complex {
    // clamp below: f* blows up like y^{-k} while g* decays double-exponentially
    double jg = double(std::max<long long>(gs.min_exponent_num(), 1));
    double cg = gs.coeff_l1() + std::abs(a0g) + 1.0;
    double cf = (wfs.coeff_l1() + std::abs(a0w)) / Mk2 + std::abs(a0f) + 1.0;
    double ylo = y0;
    while (ylo > 1e-8) {
      double bound = cf * std::pow(ylo, -double(k)) * cg *
                     std::exp(-6.283185307179586 * jg / (double(gs.denom()) * double(M) * ylo)) *
                     std::pow(ylo, w.real());
      if (bound < tol * 0.01) break;
      ylo *= 0.7;
    }
    double decay_f = 6.283185307179586 * double(std::max<long long>(fs.min_exponent_num(), 1)) /
                     double(fs.denom());
    auto integrand = [&](double y) -> Complex {
      if (y > 1.0 && w.real() * std::log(y) + double(l) * std::log(y) - decay_f * y < -700.0)
        return Complex(0, 0);
      return fstar_at(y) * gstar_inv_at(y) * std::exp(w * std::log(y)) / y;
    };
    QuadResult low = de_finite(integrand, ylo, y0, tol * 0.2);
    QuadResult high = de_upper(integrand, y0, tol * 0.2);
    return cpowr(double(M), w * 0.5) * (low.v + high.v);
  };

  FourierQSeries fh = f.to_numeric() * h.to_numeric();
  FourierQSeries wfg = wf.to_numeric() * g.to_numeric();

  // generic s
  Complex lhs_s = lhs_integral(s);
  Complex rhs_s = completed_lambda(fh, wfg, M, k + l, s + Complex(double(l), 0), tol).value.v;
  if (a0f != Complex(0, 0))
    rhs_s -= a0f * completed_lambda(h, g, M, l, s + Complex(double(l), 0), tol).value.v;
  if (a0g != Complex(0, 0)) rhs_s -= a0g * completed_lambda(f, wf, M, k, s, tol).value.v;

  // s = k variant with the regularized values
  Complex lhs_k = lhs_integral(Complex(double(k), 0));
  Complex rhs_k = lambda_star(fh, wfg, M, k + l, RegPoint::weight, tol).value.v;
  if (a0f != Complex(0, 0))
    rhs_k -= a0f * completed_lambda(h, g, M, l, Complex(double(k + l), 0), tol).value.v;
  if (a0g != Complex(0, 0)) rhs_k -= a0g * lambda_star(f, wf, M, k, RegPoint::weight, tol).value.v;

  return {std::abs(lhs_s - rhs_s), std::abs(lhs_k - rhs_k)};
}

}  // namespace eisreg
