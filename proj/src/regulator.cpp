#include "eisreg/regulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "eisreg/eisenstein.hpp"
#include "eisreg/gamma.hpp"
#include "eisreg/lfunc.hpp"
#include "eisreg/quadrature.hpp"
#include "eisreg/rz.hpp"
#include "eisreg/zeta.hpp"

namespace eisreg {

namespace {

const double PI = 3.14159265358979323846;
const double TWO_PI = 6.283185307179586;
const Complex I(0.0, 1.0);

long long modN(long long x, long long N) { return ((x % N) + N) % N; }

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

Rational fact_rat(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Complex pzv(long long u, long long N, Complex s) {
  return periodic_zeta(FractionModOne::of(u, N), s).v;
}
Complex hzv(long long u, long long N, Complex s) {
  return hurwitz_zeta(FractionModOne::of(u, N), s).v;
}

int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2) ? -1 : 1;
}

struct Gauss {
  Rational re{0}, im{0};
  Gauss operator+(const Gauss& o) const { return {re + o.re, im + o.im}; }
  Gauss operator*(const Gauss& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Gauss operator*(const Rational& r) const { return {re * r, im * r}; }
};

const Gauss kPlusI{Rational(0), Rational(1)};
const Gauss kMinusI{Rational(0), Rational(-1)};

}  // namespace

void RegulatorInput::validate() const {
  if (N < 3) throw invalid_spec("RegulatorInput: level N >= 3 required");
  if (k1 < 0 || k2 < 0) throw invalid_spec("RegulatorInput: k1, k2 >= 0 required");
  if (k1 == 0 && modN(a1, N) == 0 && modN(b1, N) == 0)
    throw invalid_spec("RegulatorInput: u1 != (0,0) required when k1 = 0");
  if (k2 == 0 && modN(a2, N) == 0 && modN(b2, N) == 0)
    throw invalid_spec("RegulatorInput: u2 != (0,0) required when k2 = 0");
  if (k1 == 1 && modN(b1, N) == 0)
    throw invalid_spec("RegulatorInput: b1 != 0 required when k1 = 1");
  if (k2 == 1 && modN(b2, N) == 0)
    throw invalid_spec("RegulatorInput: b2 != 0 required when k2 = 1");
}

Complex FiberMonomial::value(double y, long long N) const {
  Complex c(re.convert_to<double>(), im.convert_to<double>());
  return c * std::pow(4.0 * PI / double(N), fourpi_over_N_pow) * std::pow(y, y_pow);
}

FiberMonomial fiber_integral_psi(int k1, int k2, int a, RightForm rf, bool conj_left) {
  if (a < 0 || a > k1) throw invalid_spec("fiber_integral_psi: 0 <= a <= k1 required");
  const int b = k1 - a;                                 // conjugated slots of the left form
  const int rb = (rf == RightForm::psi_0_k2) ? k2 : 0;  // conjugated slots of the right form
  const int k = k1 + k2;

  // dz_i -> (i y) dt_i and dzbar_i -> (-i y) dt_i on the fiber; conjugating
  // the left factor swaps the two unit factors there
  const Gauss unit_dz = kPlusI, unit_dzbar = kMinusI;
  Gauss left_conj_unit = conj_left ? unit_dzbar : unit_dz;
  Gauss left_conj_unit_bar = conj_left ? unit_dz : unit_dzbar;

  std::vector<int> sl(k1), sr(k2);
  std::iota(sl.begin(), sl.end(), 0);
  std::iota(sr.begin(), sr.end(), 0);

  Gauss total{Rational(0), Rational(0)};
  std::vector<int> concat(k);
  std::vector<int> left = sl;
  do {
    std::vector<int> right = sr;
    do {
      for (int i = 0; i < k1; ++i) concat[i] = left[i];
      for (int j = 0; j < k2; ++j) concat[k1 + j] = k1 + right[j];
      // eps(sigma) eps(rho) from the definitions of the two psi factors,
      // times the parity of sorting the wedge back to dt_1 ... dt_k
      int sgn = perm_sign(left) * perm_sign(right) * perm_sign(concat);
      Gauss term{Rational(sgn), Rational(0)};
      for (int i = 0; i < k1; ++i) term = term * ((i < b) ? left_conj_unit_bar : left_conj_unit);
      for (int j = 0; j < k2; ++j) term = term * ((j < rb) ? unit_dzbar : unit_dz);
      total = total + term;
    } while (std::next_permutation(right.begin(), right.end()));
  } while (std::next_permutation(left.begin(), left.end()));

  Rational norm = fact_rat(k1) * fact_rat(k2);
  FiberMonomial out;
  out.re = total.re / norm;
  out.im = total.im / norm;
  out.y_pow = k;
  out.fourpi_over_N_pow = 0;
  if (out.is_zero()) out.y_pow = 0;
  return out;
}

FiberMonomial fiber_integral_omega(int k1, int k2, int ell, RightForm rf, bool conj_omega) {
  if (ell < 0 || ell > k1) throw invalid_spec("fiber_integral_omega: 0 <= ell <= k1 required");
  Gauss acc{Rational(0), Rational(0)};
  for (int a = ell; a <= k1; ++a) {
    FiberMonomial p = fiber_integral_psi(k1, k2, a, rf, conj_omega);
    Rational c = Rational(1) / (fact_rat(k1 - a) * fact_rat(a - ell));
    acc = acc + Gauss{p.re, p.im} * c;
  }
  Rational pre = fact_rat(k1 - ell) / fact_rat(ell);
  FiberMonomial out;
  out.re = acc.re * pre;
  out.im = acc.im * pre;
  out.y_pow = (k1 + k2) - ell;
  out.fourpi_over_N_pow = ell + 1;
  if (out.is_zero()) {
    out.y_pow = 0;
    out.fourpi_over_N_pow = 0;
  }
  return out;
}

namespace {

struct HalfProduct {
  FourierQSeries p;   // the series entering Lambda*
  FourierQSeries wp;  // its Atkin-Lehner image at level N^2 (numeric)
  bool zero;
};

long long product_trunc(long long N, int k) {
  return std::max<long long>(240, suggested_trunc(1, 1.0 / double(N), k + 3));
}

EisensteinSpec gsp(int k, long long a, long long b, long long N) {
  return EisensteinSpec{Family::G, k, a, b, N};
}
EisensteinSpec hsp(int k, long long a, long long b, long long N) {
  return EisensteinSpec{Family::H, k, a, b, N};
}

// (G^{(k2+1)}_{b2,a1} + G^{(k2+1)}_{b2,-a1}) (G^{(k1+1)}_{b1,-a2} - G^{(k1+1)}_{b1,a2})
// with its W image (i^{k+2}/N^2) (H + H)(H - H)
HalfProduct half_product(const RegulatorInput& in, long long T) {
  const long long N = in.N;
  FourierQSeries gplus = build_series(gsp(in.k2 + 1, in.b2, in.a1, N), T) +
                         build_series(gsp(in.k2 + 1, in.b2, -in.a1, N), T);
  FourierQSeries gminus = build_series(gsp(in.k1 + 1, in.b1, -in.a2, N), T) -
                          build_series(gsp(in.k1 + 1, in.b1, in.a2, N), T);
  if (gplus.is_exact_zero() || gminus.is_exact_zero()) {
    FourierQSeries zero(1, T, N * N, in.k() + 2);
    return {zero, zero, true};
  }
  FourierQSeries p = gplus.to_numeric() * gminus.to_numeric();
  FourierQSeries hplus = build_series(hsp(in.k2 + 1, in.b2, in.a1, N), T) +
                         build_series(hsp(in.k2 + 1, in.b2, -in.a1, N), T);
  FourierQSeries hminus = build_series(hsp(in.k1 + 1, in.b1, -in.a2, N), T) -
                          build_series(hsp(in.k1 + 1, in.b1, in.a2, N), T);
  Complex scalar = ipow(in.k() + 2) / double(N * N);
  FourierQSeries wp =
      (hplus.to_numeric() * hminus.to_numeric()).scaled(Coeff(scalar, 0.0));
  return {p, wp, false};
}

}  // namespace

ComplexValue half_regulator_A(const RegulatorInput& in, double tol) {
  in.validate();
  const int k = in.k();
  const long long N = in.N;
  HalfProduct hp = half_product(in, product_trunc(N, k));
  if (hp.zero) return ComplexValue(Complex(0, 0), 0.0);
  LambdaValue ls = lambda_star(hp.p, hp.wp, N * N, k + 2, RegPoint::zero, tol * 1e-2);
  Complex pref = ipow(in.k1 - in.k2 + 1) * double(in.k1 + 2) * double(in.k2 + 2) /
                 (4.0 * std::pow(double(N), k + 2)) * std::pow(TWO_PI, k + 1);
  return {pref * ls.value.v, std::abs(pref) * ls.value.err};
}

ComplexValue term_A(const RegulatorInput& in, double tol) { return half_regulator_A(in, tol); }

ComplexValue term_B(const RegulatorInput& in) {
  in.validate();
  const long long N = in.N;
  const int k1 = in.k1, k2 = in.k2;
  Complex zb;
  if (k2 == 0) {
    // the zeta^{(*)} note: regularized values at argument 1
    zb = zeta_star_at_one(FractionModOne::of(-in.b2, N)).v -
         zeta_star_at_one(FractionModOne::of(in.b2, N)).v;
  } else {
    double sgn = (k2 % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k2+1}
    zb = hzv(-in.b2, N, Complex(1 - k2, 0)) + sgn * hzv(in.b2, N, Complex(1 - k2, 0));
  }
  double s1 = (k1 % 2 == 0) ? 1.0 : -1.0;
  Complex zb1 = pzv(-in.b1, N, Complex(k1 + 2, 0)) + s1 * pzv(in.b1, N, Complex(k1 + 2, 0));
  Complex za2 = pzv(in.a2, N, Complex(2, 0)) - pzv(-in.a2, N, Complex(2, 0));
  Complex pref = s1 * factorial(k1 + 2) * double(k2 + 2) /
                 (8.0 * PI * PI * double(N) * double(N)) * cpow_int(2.0 * I * PI, k2);
  Complex v = pref * zb1 * za2 * zb;
  return {v, 1e-12 * (1.0 + std::abs(v))};
}

ComplexValue term_C(const RegulatorInput& in) {
  in.validate();
  const long long N = in.N;
  if (!(in.k1 == 0 && modN(in.b1, N) == 0 && modN(in.a2, N) != 0))
    return ComplexValue(Complex(0, 0), 0.0);
  const int k2 = in.k2;
  double sgn = (k2 % 2 == 0) ? -1.0 : 1.0;
  Complex za1 = pzv(in.a1, N, Complex(1, 0)) + pzv(-in.a1, N, Complex(1, 0));
  Complex za2 = pzv(in.a2, N, Complex(1, 0)) - pzv(-in.a2, N, Complex(1, 0));
  Complex zb2 = hzv(-in.b2, N, Complex(-k2, 0)) + sgn * hzv(in.b2, N, Complex(-k2, 0));
  Complex pref = double(k2 + 2) / (2.0 * double(N) * double(N)) * cpow_int(2.0 * I * PI, k2);
  Complex v = pref * za1 * za2 * zb2;
  return {v, 1e-12 * (1.0 + std::abs(v))};
}

ComplexValue term_D(const RegulatorInput& in) {
  in.validate();
  if (in.k2 % 2 == 0) return ComplexValue(Complex(0, 0), 0.0);
  const long long N = in.N;
  const int k1 = in.k1, k2 = in.k2, k = in.k();
  double s1 = (k1 % 2 == 0) ? 1.0 : -1.0;
  // closed-form limit of Gamma(s-k2-1) (zeta(b1/N, s-k-1) + (-1)^{k1} zeta(-b1/N, s-k-1))
  Complex lim = factorial(k + 1) * cpow_int(-I, k + 2) * I * PI /
                (factorial(k2 + 1) * std::pow(TWO_PI, k + 2)) *
                (pzv(in.b1, N, Complex(k + 2, 0)) + s1 * pzv(-in.b1, N, Complex(k + 2, 0)));
  Complex za1 = pzv(in.a1, N, Complex(-k2, 0)) + pzv(-in.a1, N, Complex(-k2, 0));
  Complex za2 = hzv(-in.a2, N, Complex(-k2 - 1, 0));
  Complex pref = -cpow_int(I, k1) * double(k1 + 2) * double(k2 + 2) /
                 (2.0 * double(N) * double(N)) * std::pow(TWO_PI, k1 + 2 * k2 + 2);
  Complex v = pref * za1 * za2 * lim;
  return {v, 1e-12 * (1.0 + std::abs(v))};
}

ComplexValue term_E(const RegulatorInput& in) {
  in.validate();
  const long long N = in.N;
  const int k1 = in.k1, k2 = in.k2, k = in.k();
  Complex a0h = build_series(hsp(k2 + 1, in.b2, in.a1, N), 2).constant_term().approx() +
                build_series(hsp(k2 + 1, in.b2, -in.a1, N), 2).constant_term().approx();
  double s1 = (k1 % 2 == 0) ? 1.0 : -1.0;
  Complex zb1 = pzv(-in.b1, N, Complex(k + 2, 0)) + s1 * pzv(in.b1, N, Complex(k + 2, 0));
  Complex za2 = pzv(in.a2, N, Complex(k2 + 2, 0)) - pzv(-in.a2, N, Complex(k2 + 2, 0));
  Complex pref = s1 * I * double(k1 + 2) * double(k2 + 2) * factorial(k + 1) /
                 (8.0 * PI * double(N) * double(N));
  Complex v = pref * a0h * zb1 * za2;
  return {v, 1e-12 * (1.0 + std::abs(v))};
}

ComplexValue term_F(const RegulatorInput& in) {
  in.validate();
  const long long N = in.N;
  if (!(in.k1 == 0 && modN(in.b1, N) == 0 && modN(in.a2, N) != 0))
    return ComplexValue(Complex(0, 0), 0.0);
  const int k2 = in.k2;
  double sgn = (k2 % 2 == 0) ? -1.0 : 1.0;
  Complex zb2;
  if (k2 == 0 && modN(in.b2, N) == 0) {
    zb2 = Complex(0, 0);  // regularized difference of equal zeta* values
  } else {
    zb2 = pzv(-in.b2, N, Complex(k2 + 1, 0)) + sgn * pzv(in.b2, N, Complex(k2 + 1, 0));
  }
  Complex za1 = pzv(in.a1, N, Complex(1, 0)) + pzv(-in.a1, N, Complex(1, 0));
  double frac_a2 = double(modN(in.a2, N)) / double(N);
  Complex pref = factorial(k2) * double(k2 + 2) / (2.0 * double(N) * double(N)) *
                 (2.0 * frac_a2 - 1.0);
  Complex v = pref * zb2 * za1;
  return {v, 1e-12 * (1.0 + std::abs(v))};
}

RegulatorReport theorem_both_sides(const RegulatorInput& in, double tol) {
  in.validate();
  const int k = in.k();
  const long long N = in.N;

  RegulatorReport rep;
  rep.input = in;
  rep.A = term_A(in, tol);
  rep.B = term_B(in);
  rep.C = term_C(in);
  rep.D = term_D(in);
  rep.E = term_E(in);
  rep.F = term_F(in);

  RegulatorInput swapped{in.k2, in.k1, in.N, in.a2, in.b2, in.a1, in.b1};
  ComplexValue half2 = half_regulator_A(swapped, tol);
  double sgn_swap = ((k + 1) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{k1+k2+1}
  rep.lhs_via_A = ComplexValue(rep.A.v + sgn_swap * half2.v, rep.A.err + half2.err);

  // right-hand side: Lambda* of the antisymmetrized product difference
  long long T = product_trunc(N, k);
  FourierQSeries p1 = build_series(gsp(in.k2 + 1, in.b2, in.a1, N), T).to_numeric() *
                      build_series(gsp(in.k1 + 1, in.b1, -in.a2, N), T).to_numeric();
  FourierQSeries p2 = build_series(gsp(in.k2 + 1, in.b2, -in.a1, N), T).to_numeric() *
                      build_series(gsp(in.k1 + 1, in.b1, in.a2, N), T).to_numeric();
  FourierQSeries pr = p1 - p2;
  FourierQSeries h1 = build_series(hsp(in.k2 + 1, in.b2, in.a1, N), T).to_numeric() *
                      build_series(hsp(in.k1 + 1, in.b1, -in.a2, N), T).to_numeric();
  FourierQSeries h2 = build_series(hsp(in.k2 + 1, in.b2, -in.a1, N), T).to_numeric() *
                      build_series(hsp(in.k1 + 1, in.b1, in.a2, N), T).to_numeric();
  Complex scalar = ipow(k + 2) / double(N * N);
  FourierQSeries wpr = (h1 - h2).scaled(Coeff(scalar, 0.0));

  Complex pref = double(in.k1 + 2) * double(in.k2 + 2) / (2.0 * std::pow(double(N), k + 2)) *
                 std::pow(TWO_PI, k + 1) * ipow(in.k1 - in.k2 + 1);
  bool rhs_zero = true;
  for (const auto& [j, c] : pr.coeffs())
    if (!c.is_zero() && std::abs(c.approx()) > 1e-18) {
      rhs_zero = false;
      break;
    }
  if (rhs_zero) {
    rep.rhs_theorem = ComplexValue(Complex(0, 0), 0.0);
  } else {
    LambdaValue ls = lambda_star(pr, wpr, N * N, k + 2, RegPoint::zero, tol * 1e-2);
    rep.rhs_theorem = ComplexValue(pref * ls.value.v, std::abs(pref) * ls.value.err);
  }

  rep.both_paths_residual = std::abs(rep.lhs_via_A.v - rep.rhs_theorem.v);

  rep.cancellation_residuals["C+F"] = std::abs(rep.C.v + rep.F.v);
  if (in.k2 == 0) {
    rep.cancellation_residuals["D"] = std::abs(rep.D.v);
    rep.cancellation_residuals["B+E"] = std::abs(rep.B.v + rep.E.v);
  } else {
    rep.cancellation_residuals["B"] = std::abs(rep.B.v);
    if (in.k2 % 2 == 1)
      rep.cancellation_residuals["D+E"] = std::abs(rep.D.v + rep.E.v);
    else
      rep.cancellation_residuals["E"] = std::abs(rep.E.v);
  }
  return rep;
}

double pre_swap_integral_check(const RegulatorInput& in, Complex s, double tol) {
  in.validate();
  const int k1 = in.k1, k2 = in.k2, k = in.k();
  const long long N = in.N;
  if (s.real() > -double(k) - 4.0 + 1e-12)
    throw convergence_error("pre_swap_integral_check: Re(s) <= -k-4 required");

  const double s1 = (k1 % 2 == 0) ? 1.0 : -1.0;  // (-1)^{k1}
  const double s2 = (k2 % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k2+1}

  // constants from the fiber integration
  Complex alpha1 = pzv(-in.b1, N, Complex(k1 + 2, 0)) + s1 * pzv(in.b1, N, Complex(k1 + 2, 0));
  Complex beta1(0, 0);
  if (modN(in.b1, N) == 0)
    beta1 = 2.0 * I * PI * cpow_int(Complex(0, 2), -(k1 + 1)) *
            (pzv(-in.a1, N, Complex(k1 + 1, 0)) + s1 * pzv(in.a1, N, Complex(k1 + 1, 0)));

  // Phi(iy) = F^{(k2+2)}_{-u2}(iy) + (-1)^{k2+1} conj(F^{(k2+2)}_{-u2}(iy)),
  // assembled exactly; for y < 1 evaluated through the sigma-slash reflection
  long long Tphi = suggested_trunc(N, 0.95, k2 + 2);
  FourierQSeries PhiS =
      build_series(EisensteinSpec{Family::F, k2 + 2, -in.a2, -in.b2, N}, Tphi) +
      build_series(EisensteinSpec{Family::F, k2 + 2, -in.a2, in.b2, N}, Tphi).scaled(
          Coeff::rational(Rational(k2 % 2 == 0 ? -1 : 1)));
  FourierQSeries PsiS =
      build_series(EisensteinSpec{Family::F, k2 + 2, -in.b2, in.a2, N}, Tphi) +
      build_series(EisensteinSpec{Family::F, k2 + 2, in.b2, in.a2, N}, Tphi).scaled(
          Coeff::rational(Rational(k2 % 2 == 0 ? -1 : 1)));
  if (!PsiS.constant_term().is_zero())
    throw precision_error("pre_swap: reflected combination must have zero constant term");
  SeriesEval phi(PhiS), psi(PsiS.star());
  Complex phi_inf = PhiS.constant_term().approx();
  Complex ik22 = ipow(k2 + 2);
  auto Phi_at = [&](double y) -> Complex {
    if (y >= 1.0) return phi.eval(Complex(0, y));
    return ik22 * std::pow(y, -double(k2 + 2)) * psi.eval(Complex(0, 1.0 / y));
  };

  // S-series of the exchange step
  DoubleSeriesSpec S1{Complex(-1, 0), Complex(k1, 0),
                      hat_delta_fn(in.a1, N) + hat_delta_fn(-in.a1, N),
                      (k1 % 2 == 0) ? delta_fn(in.b1, N) + delta_fn(-in.b1, N)
                                    : delta_fn(in.b1, N) - delta_fn(-in.b1, N),
                      N};

  const double jpsi = double(std::max<long long>(psi.min_exponent_num(), 1));
  const double cpsi = psi.coeff_l1() + 1.0;

  // ---- LHS piece 1: the alpha1/beta1 weight against Phi
  Complex pref1 = s1 * (-1.0) * factorial(k1) * double(k1 + 2) * double(k2 + 2) /
                  (2.0 * double(N) * double(N)) * std::pow(TWO_PI, k2);
  double ylo1 = 0.5;
  {
    double wmax = (k1 + 1) * std::abs(alpha1) + std::abs(beta1) + 1.0;
    while (ylo1 > 1e-6) {
      double bound = cpsi * std::exp(-TWO_PI * jpsi / (double(N) * ylo1)) * wmax *
                     std::pow(ylo1, s.real() - 2.0);
      if (bound < 0.002 * tol) break;
      ylo1 *= 0.7;
    }
  }
  // the y-powers are folded into one exponential so large quadrature nodes
  // cannot overflow before the decaying y^s factor kicks in
  auto f1 = [&](double y) -> Complex {
    double ly = std::log(y);
    Complex w = double(k1 + 1) * alpha1 * std::exp((s + Complex(k2 - 1, 0)) * ly);
    if (k1 == 0) w += beta1 * std::exp((s + Complex(k2, 0)) * ly);
    return Phi_at(y) * w;
  };
  QuadResult i1a = de_finite(f1, ylo1, 1.0, tol * 0.05);
  QuadResult i1b = de_upper(f1, 1.0, tol * 0.05);
  Complex lhs = pref1 * (i1a.v + i1b.v);
  double lhs_err = std::abs(pref1) * (i1a.err + i1b.err);

  // ---- LHS piece 2: S1(i/y) against Phi
  Complex pref2 = -cpow_int(I, k1) * double(k1 + 2) * double(k2 + 2) /
                  (4.0 * std::pow(double(N), k1 + 2)) * std::pow(TWO_PI, k1 + k2 + 1);
  double point_tol = tol * 0.01;
  auto f2 = [&](double y) -> Complex {
    Complex sv = S_eval_tau(S1, Complex(0, 1.0 / y), point_tol).v;
    return sv * Phi_at(y) * std::exp((s + Complex(k2, 0)) * std::log(y));
  };
  double ylo2 = 0.5;
  while (ylo2 > 1e-6) {
    // |S1(i/y)| <= 4 e^{-2 pi/(N y)} for small y; Phi contributes the rest
    double bound = 4.0 * cpsi * std::exp(-TWO_PI * (jpsi + 1.0) / (double(N) * ylo2)) *
                   std::pow(ylo2, s.real() - 1.0);
    if (bound < 0.002 * tol) break;
    ylo2 *= 0.7;
  }
  double yhi2 = 4.0;
  while (yhi2 < 1e7) {
    double bound = bound_S(S1, 1.0 / yhi2) * (std::abs(phi_inf) + phi.coeff_l1()) *
                   std::pow(yhi2, s.real() + double(k2)) * yhi2;
    if (bound < 0.002 * tol) break;
    yhi2 *= 2.0;
  }
  if (yhi2 >= 1e7) throw convergence_error("pre_swap: upper clamp failed");
  QuadResult i2a = de_finite(f2, ylo2, 1.0, tol * 0.05);
  QuadResult i2b = de_finite(f2, 1.0, yhi2, tol * 0.05);
  lhs += pref2 * (i2a.v + i2b.v);
  lhs_err += std::abs(pref2) * (i2a.err + i2b.err);

  // ---- RHS block 1
  Complex rhs(0, 0);
  {
    Complex pref = s1 * factorial(k1 + 2) * double(k2 + 2) / (2.0 * double(N) * double(N)) *
                   cpow_int(2.0 * I * PI, k2) * alpha1;
    Complex g = std::exp((s - 2.0) * std::log(TWO_PI)) * cgamma(2.0 - s);
    Complex zhat = pzv(in.a2, N, 2.0 - s) - pzv(-in.a2, N, 2.0 - s);
    Complex zz = hzv(-in.b2, N, 1.0 - s - double(k2)) + s2 * hzv(in.b2, N, 1.0 - s - double(k2));
    rhs += pref * g * zhat * zz;
  }
  // ---- RHS block 2
  if (k1 == 0 && beta1 != Complex(0, 0)) {
    Complex pref = beta1 * double(k2 + 2) / (double(N) * double(N)) * cpow_int(2.0 * I * PI, k2);
    Complex g = std::exp((s - 1.0) * std::log(TWO_PI)) * cgamma(1.0 - s);
    Complex zhat = pzv(in.a2, N, 1.0 - s) - pzv(-in.a2, N, 1.0 - s);
    Complex zz = hzv(-in.b2, N, -s - double(k2)) + s2 * hzv(in.b2, N, -s - double(k2));
    rhs += pref * g * zhat * zz;
  }
  // ---- RHS block 3 (only for odd k2, where 1 + (-1)^{k2+1} = 2)
  if (k2 % 2 == 1) {
    Complex pref = pref2 * 2.0 * hzv(-in.a2, N, Complex(-k2 - 1, 0));
    Complex g = std::exp((s + double(k2) + 1.0) * std::log(TWO_PI / double(N))) *
                cgamma(-s - double(k2) - 1.0);
    Complex zhat = pzv(in.a1, N, -s - double(k2)) + pzv(-in.a1, N, -s - double(k2));
    Complex npow = std::exp((s + double(k) + 1.0) * std::log(double(N)));
    Complex zz = hzv(in.b1, N, -s - double(k) - 1.0) + s1 * hzv(-in.b1, N, -s - double(k) - 1.0);
    rhs += pref * g * zhat * npow * zz;
  }
  // ---- RHS block 4: the exchanged S x S integral
  {
    DoubleSeriesSpec S3{s + Complex(k2, 0), Complex(0, 0),
                        hat_delta_fn(in.a1, N) + hat_delta_fn(-in.a1, N),
                        (k2 % 2 == 0) ? hat_delta_fn(in.b2, N) - hat_delta_fn(-in.b2, N)
                                      : hat_delta_fn(in.b2, N) + hat_delta_fn(-in.b2, N),
                        N};
    DoubleSeriesSpec S4{Complex(k1, 0), -s,
                        (k1 % 2 == 0) ? delta_fn(in.b1, N) + delta_fn(-in.b1, N)
                                      : delta_fn(in.b1, N) - delta_fn(-in.b1, N),
                        delta_fn(-in.a2, N) - delta_fn(in.a2, N), N};
    // beta of S3 carries (-1)^{k2+1}: minus for even k2
    ComplexValue block4 =
        S_product_integral(S4, S3, s + Complex(k2 + 1, 0), tol * 0.2);
    rhs += pref2 * std::pow(double(N), -double(k2 + 1)) * block4.v;
    lhs_err += std::abs(pref2) * std::pow(double(N), -double(k2 + 1)) * block4.err;
  }

  // lhs_err tracks the quadrature budget; the residual itself is returned and
  // compared against the caller's tolerance
  (void)lhs_err;
  return std::abs(lhs - rhs);
}

}  // namespace eisreg
