#include "eisreg/rz.hpp"

#include <algorithm>
#include <cmath>

#include "eisreg/gamma.hpp"
#include "eisreg/quadrature.hpp"
#include "eisreg/zeta.hpp"

namespace eisreg {

namespace {

const double TWO_PI = 6.283185307179586;

Complex cpow_int(Complex base, long long e) {
  bool invert = e < 0;
  unsigned long long n = invert ? -e : e;
  Complex r(1, 0), b = base;
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  return invert ? 1.0 / r : r;
}

// m^t for real m >= 1, principal branch
Complex int_pow(double m, Complex t) {
  if (t.imag() == 0.0 && t.real() == std::round(t.real()) && std::abs(t.real()) < 64)
    return cpow_int(Complex(m, 0), static_cast<long long>(t.real()));
  return std::exp(t * std::log(m));
}

// Eulerian-polynomial closed form: sum_{j >= 0} j^i w^j = A_i(w)/(1-w)^{i+1}
Complex euler_sum(int i, Complex w) {
  static const double A[9][9] = {
      {1},
      {0, 1},
      {0, 1, 1},
      {0, 1, 4, 1},
      {0, 1, 11, 11, 1},
      {0, 1, 26, 66, 26, 1},
      {0, 1, 57, 302, 302, 57, 1},
      {0, 1, 120, 1191, 2416, 1191, 120, 1},
      {0, 1, 247, 4293, 15619, 15619, 4293, 247, 1}};
  Complex num(0, 0), wp(1, 0);
  for (int j = 0; j <= i; ++j) {
    num += A[i][j] * wp;
    wp *= w;
  }
  return num / cpow_int(1.0 - w, i + 1);
}

// S_p(x) = sum_{n >= 1} n^p x^n for real 0 <= x < 1
double poly_geom(int p, double x) {
  double e = euler_sum(p, Complex(x, 0)).real();
  return p == 0 ? e - 1.0 : e;
}

double theta_of(const DoubleSeriesSpec& s) {
  return std::max(s.t.real(), 0.0) + std::max(s.u.real(), 0.0);
}

// generic truncated double loop over mn <= cutoff at arbitrary tau
ComplexValue S_eval_mn(const DoubleSeriesSpec& spec, Complex tau, long long cutoff) {
  Complex q1 = std::exp(Complex(0, TWO_PI / double(spec.N)) * tau);
  Complex acc(0, 0);
  double l1 = 0;
  for (long long m = 1; m <= cutoff; ++m) {
    Complex am = spec.alpha.approx(m);
    if (am == Complex(0, 0)) continue;
    Complex mt = int_pow(double(m), spec.t);
    Complex qm = cpow_int(q1, m);
    Complex qmn = qm;
    for (long long n = 1; m * n <= cutoff; ++n) {
      Complex bn = spec.beta.approx(n);
      if (bn != Complex(0, 0)) {
        Complex term = am * bn * mt * int_pow(double(n), spec.u) * qmn;
        acc += term;
        l1 += std::abs(term);
      }
      qmn *= qm;
    }
  }
  double A = spec.alpha.sup_norm() * spec.beta.sup_norm();
  double x = std::exp(-TWO_PI * tau.imag() / double(spec.N));
  double th = theta_of(spec) + 1.0;  // d(K) K^theta <= K^{theta+1}
  double ratio = x * std::exp(th / double(cutoff + 1));
  if (ratio >= 1.0) throw convergence_error("S_eval: tail not closed at this cutoff");
  double tail = A * std::pow(double(cutoff + 1), th) * std::pow(x, double(cutoff)) / (1.0 - ratio);
  return {acc, tail + 8 * ComplexValue::eps() * l1};
}

// fast evaluator when u is a small nonnegative integer: m-loop with the
// n-sum in closed Eulerian form per residue class mod N
ComplexValue S_eval_theta(const DoubleSeriesSpec& spec, Complex tau, double tol, int p) {
  const long long N = spec.N;
  Complex q1 = std::exp(Complex(0, TWO_PI / double(N)) * tau);
  double xi = std::abs(q1);
  double A = spec.alpha.sup_norm(), B = spec.beta.sup_norm();
  double rho = std::max(spec.t.real(), 0.0);
  const double cenv = 2.0 * poly_geom(p, 0.5);  // S_p(x) <= cenv * x for x <= 1/2

  double binom_pi[9];
  for (int i = 0; i <= p; ++i) binom_pi[i] = binomial(p, i);
  double Npow[9];
  Npow[0] = 1;
  for (int i = 1; i <= p; ++i) Npow[i] = Npow[i - 1] * double(N);

  Complex acc(0, 0);
  Complex xm = q1;  // q1^m
  double l1 = 0;
  const long long mmax = 4000000;
  for (long long m = 1;; ++m) {
    Complex am = spec.alpha.approx(m);
    if (am != Complex(0, 0)) {
      Complex w = cpow_int(xm, N);
      Complex E[9];
      for (int i = 0; i <= p; ++i) E[i] = euler_sum(i, w);
      Complex nsum(0, 0);
      Complex xr = xm;  // xm^r
      for (long long r = 1; r <= N; ++r, xr *= xm) {
        Complex br = spec.beta.approx(r);
        if (br != Complex(0, 0)) {
          Complex inner(0, 0);
          double rpow = std::pow(double(r), p);
          for (int i = 0; i <= p; ++i) {
            inner += binom_pi[i] * rpow * Npow[i] * E[i];
            if (i < p) rpow /= double(r);
          }
          nsum += br * xr * inner;
        }
      }
      Complex term = am * int_pow(double(m), spec.t) * nsum;
      acc += term;
      l1 += std::abs(term);
    }
    if (std::abs(xm) <= 0.5) {
      double ratio = xi * std::exp(rho / double(m + 1));
      if (ratio < 1.0) {
        double tail =
            A * B * cenv * std::pow(double(m + 1), rho) * std::pow(xi, double(m + 1)) / (1.0 - ratio);
        if (tail < tol) return {acc, tail + 8 * ComplexValue::eps() * l1};
      }
    }
    if (m > mmax) throw convergence_error("S_eval_tau: tail not closed (m-loop)");
    // refresh the iterated power to keep rounding drift negligible
    if ((m & 1023) == 0)
      xm = cpow_int(q1, m + 1);
    else
      xm *= q1;
  }
}

}  // namespace

ArithmeticFunctionModN ArithmeticFunctionModN::operator+(const ArithmeticFunctionModN& o) const {
  if (N_ != o.N_) throw invalid_spec("ArithmeticFunctionModN: modulus mismatch");
  ArithmeticFunctionModN r(N_);
  for (long long n = 0; n < N_; ++n) r.set(n, at(n) + o.at(n));
  return r;
}

ArithmeticFunctionModN ArithmeticFunctionModN::operator-(const ArithmeticFunctionModN& o) const {
  if (N_ != o.N_) throw invalid_spec("ArithmeticFunctionModN: modulus mismatch");
  ArithmeticFunctionModN r(N_);
  for (long long n = 0; n < N_; ++n) r.set(n, at(n) - o.at(n));
  return r;
}

ArithmeticFunctionModN ArithmeticFunctionModN::scaled(const Cyclotomic& c) const {
  ArithmeticFunctionModN r(N_);
  for (long long n = 0; n < N_; ++n) r.set(n, at(n) * c);
  return r;
}

ArithmeticFunctionModN ArithmeticFunctionModN::conj() const {
  ArithmeticFunctionModN r(N_);
  for (long long n = 0; n < N_; ++n) r.set(n, at(n).conj());
  return r;
}

double ArithmeticFunctionModN::sup_norm() const {
  double m = 0;
  for (const auto& z : z_) m = std::max(m, std::abs(z));
  return m;
}

bool ArithmeticFunctionModN::is_zero() const {
  for (const auto& c : v_)
    if (!c.is_zero()) return false;
  return true;
}

ArithmeticFunctionModN delta_fn(long long u, long long N) {
  ArithmeticFunctionModN f(N);
  f.set(u, Cyclotomic::rational(Rational(1)));
  return f;
}

ArithmeticFunctionModN hat_delta_fn(long long u, long long N) {
  ArithmeticFunctionModN f(N);
  for (long long n = 0; n < N; ++n) f.set(n, Cyclotomic::zeta_pow(static_cast<int>(N), -u * n));
  return f;
}

ComplexValue S_eval(const DoubleSeriesSpec& spec, double y, bool inverted, long long cutoff) {
  if (y <= 0) throw invalid_spec("S_eval: y > 0 required");
  if (spec.alpha.is_zero() || spec.beta.is_zero()) return {Complex(0, 0), 0.0};
  return S_eval_mn(spec, Complex(0.0, inverted ? 1.0 / y : y), cutoff);
}

ComplexValue S_eval_tau(const DoubleSeriesSpec& spec, Complex tau, double tol) {
  if (tau.imag() <= 0) throw invalid_spec("S_eval_tau: Im(tau) > 0 required");
  if (spec.alpha.is_zero() || spec.beta.is_zero()) return {Complex(0, 0), 0.0};
  double ur = spec.u.real();
  if (spec.u.imag() == 0.0 && ur == std::round(ur) && ur >= 0 && ur <= 8)
    return S_eval_theta(spec, tau, tol, static_cast<int>(ur));
  // generic loop with an adaptively chosen cutoff
  double x = std::exp(-TWO_PI * tau.imag() / double(spec.N));
  double th = theta_of(spec) + 1.0;
  double A = spec.alpha.sup_norm() * spec.beta.sup_norm();
  for (long long cutoff = 64; cutoff <= (1LL << 22); cutoff *= 2) {
    double ratio = x * std::exp(th / double(cutoff + 1));
    if (ratio >= 1.0) continue;
    double tail = A * std::pow(double(cutoff + 1), th) * std::pow(x, double(cutoff)) / (1.0 - ratio);
    if (tail < tol) return S_eval_mn(spec, tau, cutoff);
  }
  throw convergence_error("S_eval_tau: tail not closed");
}

ComplexValue dirichlet_L_mod_fn(const ArithmeticFunctionModN& fn, Complex w) {
  const long long N = fn.modulus();
  Complex acc(0, 0);
  double err = 0;
  Complex nw = std::exp(-w * std::log(double(N)));
  for (long long r = 0; r < N; ++r) {
    Complex c = fn.approx(r);
    if (c == Complex(0, 0)) continue;
    ComplexValue z = hurwitz_zeta(FractionModOne::of(r, N), w);
    acc += c * z.v;
    err += std::abs(c) * z.err;
  }
  return {nw * acc, std::abs(nw) * err + 4 * ComplexValue::eps() * std::abs(nw * acc)};
}

ComplexValue mellin_S_closed(const DoubleSeriesSpec& spec, Complex s, bool inverted) {
  Complex sa = inverted ? -s - spec.t : s - spec.t;
  Complex sb = inverted ? -s - spec.u : s - spec.u;
  if (sa.real() <= 1.0 || sb.real() <= 1.0)
    throw convergence_error("mellin_S_closed: outside the convergence strip");
  Complex pref;
  if (inverted)
    pref = std::exp(s * std::log(TWO_PI / double(spec.N))) * cgamma(-s);
  else
    pref = std::exp(-s * std::log(TWO_PI / double(spec.N))) * cgamma(s);
  ComplexValue la = dirichlet_L_mod_fn(spec.alpha, sa);
  ComplexValue lb = dirichlet_L_mod_fn(spec.beta, sb);
  ComplexValue prod = la * lb;
  return {pref * prod.v, std::abs(pref) * prod.err + 8 * ComplexValue::eps() * std::abs(pref * prod.v)};
}

double bound_S(const DoubleSeriesSpec& spec, double im) {
  double lambda = TWO_PI * im / double(spec.N);
  double th = theta_of(spec) + 1.0;
  double A = spec.alpha.sup_norm() * spec.beta.sup_norm();
  // sum_K K^th e^{-lambda K} <= Gamma(th+1)/lambda^{th+1} + peak value
  double g = std::tgamma(th + 1.0) / std::pow(lambda, th + 1.0);
  double peak = std::pow(th / (std::exp(1.0) * lambda), th);
  return A * (g + peak + 1.0);
}

namespace {

// decaying bound for |S(tau)|, tight when Im tau is large
double decay_bound(const DoubleSeriesSpec& spec, double im) {
  double x = std::exp(-TWO_PI * im / double(spec.N));
  double th = theta_of(spec) + 1.0;
  double ratio = x * std::exp(th / 2.0);
  double A = spec.alpha.sup_norm() * spec.beta.sup_norm();
  if (ratio >= 1.0) return bound_S(spec, im);
  return A * std::pow(2.0, th) * x / (1.0 - ratio);
}

}  // namespace

ComplexValue S_product_integral(const DoubleSeriesSpec& inv, const DoubleSeriesSpec& str, Complex s,
                                double tol) {
  // integrand S_inv(i/y) S_str(iy) y^s with measure dy/y
  auto upper_bound_at = [&](double y) {
    return bound_S(inv, 1.0 / y) * decay_bound(str, y) * std::pow(y, s.real());
  };
  auto lower_bound_at = [&](double y) {
    return decay_bound(inv, 1.0 / y) * bound_S(str, y) * std::pow(y, s.real());
  };
  double ylo = 0.5;
  while (lower_bound_at(ylo) * ylo > 0.005 * tol && ylo > 1e-8) ylo *= 0.5;
  double yhi = 2.0;
  while (upper_bound_at(yhi) * yhi > 0.005 * tol && yhi < 1e8) yhi *= 2.0;
  if (ylo <= 1e-8 || yhi >= 1e8) throw convergence_error("S_product_integral: clamping failed");

  double point_tol = 0.02 * tol / std::max(1.0, std::log(yhi / ylo));
  auto f = [&](double y) -> Complex {
    Complex a = S_eval_tau(inv, Complex(0.0, 1.0 / y), point_tol).v;
    Complex b = S_eval_tau(str, Complex(0.0, y), point_tol).v;
    return a * b * std::exp(s * std::log(y)) / y;
  };
  QuadResult q = de_finite(f, ylo, yhi, tol * 0.1);
  double clamp_err = lower_bound_at(ylo) * ylo * 2.0 + upper_bound_at(yhi) * yhi * 2.0;
  return {q.v, q.err + clamp_err + point_tol * std::log(yhi / ylo) * 2};
}

double rz_swap_check(const DoubleSeriesSpec& first, const DoubleSeriesSpec& second, Complex s,
                     double quad_tol) {
  if (first.N != second.N) throw invalid_spec("rz_swap_check: modulus mismatch");
  ComplexValue lhs = S_product_integral(first, second, s, quad_tol);
  DoubleSeriesSpec rhs_straight{first.t + s, second.t, first.alpha, second.alpha, first.N};
  DoubleSeriesSpec rhs_inverted{first.u, second.u - s, first.beta, second.beta, first.N};
  ComplexValue rhs = S_product_integral(rhs_inverted, rhs_straight, s, quad_tol);
  return std::abs(lhs.v - rhs.v);
}

}  // namespace eisreg
