#include "eisreg/eisenstein.hpp"

#include <algorithm>
#include <cmath>

#include "eisreg/gamma.hpp"
#include "eisreg/rz.hpp"
#include "eisreg/zeta.hpp"

namespace eisreg {

namespace {

const double TWO_PI = 6.283185307179586;

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

Rational int_pow_rat(long long b, int e) {
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

void EisensteinSpec::validate() const {
  if (N < 3) throw invalid_spec("EisensteinSpec: level N >= 3 required");
  if (k < 1) throw invalid_spec("EisensteinSpec: weight k >= 1 required");
  long long am = modN(a, N), bm = modN(b, N);
  if (k == 2) {
    if ((family == Family::F || family == Family::H) && am == 0 && bm == 0)
      throw invalid_spec("weight-2 series of this family requires (a,b) != (0,0) mod N");
    if (family == Family::G && am == 0)
      throw invalid_spec("weight-2 G series requires a != 0 mod N");
  }
}

Cyclotomic half_ratio(long long N, long long x) {
  if (modN(x, N) == 0) throw invalid_spec("half_ratio: x must be nonzero mod N");
  Cyclotomic z = Cyclotomic::zeta_pow(static_cast<int>(N), x);
  Cyclotomic one = Cyclotomic::rational(Rational(1));
  return (one + z) * (one - z).inverse();
}

FourierQSeries build_series(const EisensteinSpec& spec, long long Tnum) {
  spec.validate();
  const long long N = spec.N;
  const int k = spec.k;
  const long long a = modN(spec.a, N), b = modN(spec.b, N);
  const int sign = (k % 2 == 0) ? 1 : -1;
  const Rational half(1, 2);

  auto frac = [&](long long r) { return Rational(modN(r, N), N); };

  switch (spec.family) {
    case Family::G: {
      FourierQSeries f(1, Tnum, N * N, k);
      Rational a0(0);
      if (k == 1) {
        if (a == 0 && b != 0)
          a0 = half - frac(b);
        else if (a != 0 && b == 0)
          a0 = half - frac(a);
      } else if (b == 0) {
        a0 = -int_pow_rat(N, k - 1) * bernoulli_poly(k, frac(a)) / k;
      }
      if (a0 != 0) f.add_coeff(0, Coeff::rational(a0));
      for (int pass = 0; pass < 2; ++pass) {
        long long ra = pass ? modN(-a, N) : a, rb = pass ? modN(-b, N) : b;
        Rational sg = pass ? Rational(sign) : Rational(1);
        for (long long m = (ra == 0 ? N : ra); m < Tnum; m += N) {
          Rational mk = int_pow_rat(m, k - 1) * sg;
          for (long long n = (rb == 0 ? N : rb); m * n < Tnum; n += N)
            f.add_coeff(m * n, Coeff::rational(mk));
        }
      }
      return f;
    }
    case Family::H: {
      FourierQSeries f(1, Tnum, N * N, k);
      Cyclotomic a0;
      if (k == 1) {
        if (a == 0 && b != 0)
          a0 = -(half_ratio(N, b) * half);
        else if (a != 0 && b == 0)
          a0 = -(half_ratio(N, a) * half);
        else if (a != 0 && b != 0)
          a0 = -((half_ratio(N, a) + half_ratio(N, b)) * half);
      } else {
        a0 = periodic_zeta_nonpos_exact(-b, N, k);
      }
      if (!a0.is_zero()) f.add_coeff(0, Coeff(a0));
      for (long long m = 1; m < Tnum; ++m) {
        for (long long n = 1; m * n < Tnum; ++n) {
          Cyclotomic c = Cyclotomic::zeta_pow(static_cast<int>(N), -(a * m + b * n)) +
                         Cyclotomic::zeta_pow(static_cast<int>(N), a * m + b * n) * Rational(sign);
          if (c.is_zero()) continue;
          f.add_coeff(m * n, Coeff(c * int_pow_rat(n, k - 1)));
        }
      }
      return f;
    }
    case Family::E: {
      FourierQSeries f(N, Tnum, N, k);
      if (k == 2) f.set_nonholomorphic_correction(true);
      Coeff a0;
      if (k == 1) {
        if (a == 0 && b != 0)
          a0 = Coeff(half_ratio(N, b) * half);
        else if (a != 0)
          a0 = Coeff::rational(half - frac(a));
      } else if (a == 0) {
        a0 = Coeff(periodic_zeta_nonpos_exact(b, N, k));
      } else if (k == 2) {
        a0 = Coeff::rational(Rational(-1, 12));
      }
      if (!a0.is_zero()) f.add_coeff(0, a0);
      for (int pass = 0; pass < 2; ++pass) {
        long long ra = pass ? modN(-a, N) : a;
        long long tb = pass ? -b : b;
        Rational sg = pass ? Rational(sign) : Rational(1);
        for (long long m = (ra == 0 ? N : ra); m < Tnum; m += N) {
          for (long long n = 1; m * n < Tnum; ++n)
            f.add_coeff(m * n, Coeff(Cyclotomic::zeta_pow(static_cast<int>(N), tb * n) *
                                     (int_pow_rat(n, k - 1) * sg)));
        }
      }
      return f;
    }
    case Family::F: {
      FourierQSeries f(N, Tnum, N, k);
      Coeff a0;
      if (k == 1) {
        if (a == 0 && b != 0)
          a0 = Coeff(half_ratio(N, b) * half);
        else if (a != 0)
          a0 = Coeff::rational(half - frac(a));
      } else {
        a0 = Coeff::rational(-bernoulli_poly(k, frac(a)) / k);
      }
      if (!a0.is_zero()) f.add_coeff(0, a0);
      const Rational nk = Rational(1) / int_pow_rat(N, k - 1);
      for (int pass = 0; pass < 2; ++pass) {
        long long ra = pass ? modN(-a, N) : a;
        long long tb = pass ? -b : b;
        Rational sg = pass ? Rational(sign) * nk : nk;
        for (long long n = (ra == 0 ? N : ra); n < Tnum; n += N) {
          Rational w = int_pow_rat(n, k - 1) * sg;
          for (long long m = 1; m * n < Tnum; ++m)
            f.add_coeff(m * n, Coeff(Cyclotomic::zeta_pow(static_cast<int>(N), tb * m) * w));
        }
      }
      return f;
    }
  }
  throw invalid_spec("build_series: unknown family");
}

FourierQSeries atkin_lehner_partner(const EisensteinSpec& spec, long long Tnum) {
  if (spec.family == Family::G) {
    EisensteinSpec h{Family::H, spec.k, spec.a, spec.b, spec.N};
    Cyclotomic scalar = Cyclotomic::zeta_pow(4, spec.k) * Rational(1, spec.N);
    return build_series(h, Tnum).scaled(Coeff(scalar));
  }
  if (spec.family == Family::H) {
    EisensteinSpec g{Family::G, spec.k, spec.a, spec.b, spec.N};
    Cyclotomic scalar = Cyclotomic::zeta_pow(4, -spec.k) * Rational(spec.N);
    return build_series(g, Tnum).scaled(Coeff(scalar));
  }
  throw invalid_spec("atkin_lehner_partner: only the level-N^2 families G and H");
}

namespace {

// min |s tau + t| over the boundary of the sup-norm unit square
double lattice_gap(Complex tau) {
  double best = 1e300;
  for (int s : {-1, 1}) {
    Complex st = double(s) * tau;
    double t = std::clamp(-st.real(), -1.0, 1.0);
    best = std::min(best, std::abs(st + t));
  }
  double at2 = std::norm(tau);
  for (int t : {-1, 1}) {
    double sstar = std::clamp(-double(t) * tau.real() / at2, -1.0, 1.0);
    best = std::min(best, std::abs(sstar * tau + double(t)));
  }
  return best;
}

}  // namespace

ComplexValue kronecker_lattice_value(int k, Complex tau, Complex z, Complex u, int cutoff) {
  if (k < 3)
    throw convergence_error("kronecker_lattice_value: absolutely convergent only for k >= 3");
  if (tau.imag() <= 0) throw invalid_spec("kronecker_lattice_value: Im(tau) > 0 required");
  const double im = tau.imag();
  Complex acc(0, 0);
  double skip_scale = 1e-12 * (1.0 + std::abs(z));
  for (long long m = -cutoff; m <= cutoff; ++m) {
    for (long long n = -cutoff; n <= cutoff; ++n) {
      Complex w = double(m) * tau + double(n) + z;
      if (std::abs(w) < skip_scale) continue;  // the excluded point omega = -z
      double phase = 0.0;
      if (u != Complex(0, 0)) {
        Complex om = double(m) * tau + double(n);
        phase = (om * std::conj(u)).imag() / im;
      }
      Complex num = (phase == 0.0) ? Complex(1, 0) : std::exp(Complex(0, TWO_PI * phase));
      acc += num / cpow_int(w, k);
    }
  }
  double h = lattice_gap(tau);
  double c0 = std::abs(z) / h;
  double C = double(cutoff);
  if (C - c0 < 2.0)
    throw convergence_error("kronecker_lattice_value: cutoff too small for this z");
  double Cc = C - c0;
  double tail = 8.0 / std::pow(h, k) *
                (std::pow(Cc, 2.0 - k) / (k - 2) + std::pow(Cc, 1.0 - k) +
                 c0 * (std::pow(Cc, 1.0 - k) / (k - 1) + std::pow(Cc, -double(k))));
  Complex pref = factorial(k - 1) / cpow_int(Complex(0, -TWO_PI), k);
  double err = std::abs(pref) * tail + 1e-14 * std::abs(pref * acc) * cutoff;
  return {pref * acc, err};
}

ComplexValue atkin_lehner_numeric(const FourierQSeries& f, long long M, int k, Complex tau) {
  if (tau.imag() <= 0) throw invalid_spec("atkin_lehner_numeric: Im(tau) > 0 required");
  Complex target = -1.0 / (double(M) * tau);
  ComplexValue val = f.eval(target);
  Complex pref = ipow(k) * std::pow(double(M), -0.5 * k) / cpow_int(tau, k);
  return {pref * val.v, std::abs(pref) * val.err};
}

long long suggested_trunc(long long D, double im, int weight, double eps_target) {
  double lam = TWO_PI * im / double(D);
  double T = 64;
  for (int it = 0; it < 30; ++it)
    T = (std::log(1.0 / eps_target) + (weight + 2) * std::log(T + 2)) / lam + 8;
  long long out = static_cast<long long>(std::ceil(T));
  return std::min<long long>(std::max<long long>(out, 32), 60000);
}

double slash_check_F(int k, long long a, long long b, long long N, const std::array<long, 4>& g,
                     Complex tau) {
  if (g[0] * g[3] - g[1] * g[2] != 1) throw invalid_spec("slash_check_F: det(g) = 1 required");
  Complex num = double(g[0]) * tau + double(g[1]);
  Complex den = double(g[2]) * tau + double(g[3]);
  Complex gtau = num / den;
  long long a2 = modN(a * g[0] + b * g[2], N);
  long long b2 = modN(a * g[1] + b * g[3], N);

  double im_min = std::min(tau.imag(), gtau.imag());
  long long T = suggested_trunc(N, im_min, k);
  EisensteinSpec s1{Family::F, k, a, b, N};
  EisensteinSpec s2{Family::F, k, a2, b2, N};
  Complex lhs = build_series(s1, T).eval(gtau).v / cpow_int(den, k);
  Complex rhs = build_series(s2, T).eval(tau).v;
  return std::abs(lhs - rhs);
}

ComplexValue real_analytic_eval(const RealAnalyticSpec& spec, Complex tau, int cutoff) {
  if (spec.a < 0 || spec.b < 0) throw invalid_spec("real_analytic_eval: a, b >= 0 required");
  if (spec.a + spec.b < 1)
    throw convergence_error("real_analytic_eval: a + b >= 1 required for absolute convergence");
  if (tau.imag() <= 0) throw invalid_spec("real_analytic_eval: Im(tau) > 0 required");
  const long long N = spec.N;
  const bool congruence = spec.variant == RAVariant::E_series;
  const int L = 4;
  long long radii[L];
  // radii are multiples of N so successive ring sums sit in one residue
  // class and the 1/C tail expansion is smooth
  radii[L - 1] = cutoff - (cutoff % N);
  for (int j = L - 2; j >= 0; --j) {
    long long r = radii[j + 1] / 2;
    radii[j] = r - (r % N);
  }
  if (radii[0] < 4 * N) throw invalid_spec("real_analytic_eval: cutoff too small");

  std::complex<long double> bucket[L];
  for (auto& z : bucket) z = 0;
  long double l1 = 0;

  long long u1 = modN(spec.u1, N), u2 = modN(spec.u2, N);
  long long step = congruence ? N : 1;
  // iterate over the admissible residues in [-cutoff, cutoff]
  for (long long m = congruence ? (-cutoff + modN(u1 - (-cutoff), N)) : -cutoff; m <= cutoff;
       m += step) {
    for (long long n = congruence ? (-cutoff + modN(u2 - (-cutoff), N)) : -cutoff; n <= cutoff;
         n += step) {
      if (m == 0 && n == 0) continue;
      long long ring = std::max(std::llabs(m), std::llabs(n));
      int j = 0;
      while (j < L && radii[j] < ring) ++j;
      if (j >= L) continue;
      Complex w = double(m) * tau + double(n);
      Complex term = 1.0 / (cpow_int(w, spec.a + 1) * cpow_int(std::conj(w), spec.b + 1));
      if (!congruence) {
        double ang = TWO_PI * double(modN(m * u1 + n * u2, N)) / double(N);
        term *= Complex(std::cos(ang), std::sin(ang));
      }
      bucket[j] += std::complex<long double>(term.real(), term.imag());
      l1 += std::abs(term);
    }
  }
  // prefix sums: S(radii[j])
  std::complex<long double> partial[L];
  partial[0] = bucket[0];
  for (int j = 1; j < L; ++j) partial[j] = partial[j - 1] + bucket[j];

  // Neville extrapolation in x = 1/radius to x = 0
  long double xs[L];
  std::complex<long double> tb[L];
  for (int j = 0; j < L; ++j) {
    xs[j] = 1.0L / radii[j];
    tb[j] = partial[j];
  }
  std::complex<long double> prev_diag = tb[L - 1];
  for (int lev = 1; lev < L; ++lev) {
    for (int j = L - 1; j >= lev; --j)
      tb[j] = tb[j] + (tb[j] - tb[j - 1]) * (xs[j] / (xs[j - lev] - xs[j]));
    if (lev == L - 2) prev_diag = tb[L - 1];
  }
  Complex v(static_cast<double>(tb[L - 1].real()), static_cast<double>(tb[L - 1].imag()));
  double err = 4.0 * static_cast<double>(std::abs(tb[L - 1] - prev_diag)) +
               4e-18 * static_cast<double>(l1) + 1e-15 * std::abs(v);
  return {v, err};
}

ComplexValue real_analytic_fourier_eval(const RealAnalyticSpec& spec, Complex tau, double tol) {
  if (spec.a + spec.b < 1)
    throw convergence_error("real_analytic_fourier_eval: a + b >= 1 required");
  const long long N = spec.N;
  const int A = spec.a, B = spec.b;
  const long long u1 = modN(spec.u1, N), u2 = modN(spec.u2, N);
  const int AB = A + B;
  const Complex I(0, 1);
  const double PI = TWO_PI / 2;
  const Complex tt = tau - std::conj(tau);
  const double par = (AB % 2 == 0) ? 1.0 : -1.0;  // (-1)^{a+b}
  const bool isE = spec.variant == RAVariant::E_series;

  auto zz = [&](long long u, int s) {
    return isE ? hurwitz_zeta(FractionModOne::of(u, N), Complex(s, 0), tol).v
               : periodic_zeta(FractionModOne::of(u, N), Complex(s, 0), tol).v;
  };

  // constant block
  Complex c1 = zz(u2, AB + 2) + par * zz(-u2, AB + 2);
  if (isE) {
    c1 *= std::pow(double(N), -double(AB + 2));
    if (u1 != 0) c1 = 0;
  }

  // (tau - conj tau)^{-a-b-1} block
  Complex c2(0, 0);
  bool c2_on = isE || (u2 == 0);
  if (c2_on) {
    Complex bracket = zz(u1, AB + 1) + par * zz(-u1, AB + 1);
    double sgnb = (B % 2 == 0) ? 1.0 : -1.0;
    c2 = sgnb * 2.0 * I * PI * binomial(AB, A) * bracket * cpow_int(tt, -AB - 1);
    if (isE) c2 *= std::pow(double(N), -double(AB + 2));
  }

  // S-series blocks
  auto Sv = [&](int j, bool conjugated, bool swapped) -> Complex {
    // swapped selects the (-u1, u2) / (u1, u2) companion per the displays
    ArithmeticFunctionModN alpha =
        isE ? delta_fn(swapped ? -u1 : u1, N) : hat_delta_fn(swapped ? u1 : -u1, N);
    ArithmeticFunctionModN beta =
        isE ? hat_delta_fn(swapped ? u2 : -u2, N) : delta_fn(swapped ? u2 : -u2, N);
    DoubleSeriesSpec ds{Complex(j - AB - 1, 0), Complex(j, 0), alpha, beta, N};
    Complex v = S_eval_tau(ds, tau, tol).v;
    return conjugated ? std::conj(v) : v;
  };

  double facA = factorial(A), facB = factorial(B);
  double sgn = ((B + 1) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{b+1}
  Complex s_blocks(0, 0);
  for (int j = 0; j <= A; ++j) {
    double coef = factorial(AB - j) / (factorial(j) * factorial(A - j));
    Complex zfac = cpow_int(-2.0 * I * PI / double(N), j + 1);
    Complex tfac = cpow_int(tt, -AB - 1 + j);
    Complex sval = Sv(j, false, false) + par * Sv(j, false, true);
    if (!isE) sval *= double(N);
    s_blocks += (sgn / facB) * coef * zfac * tfac * sval;
  }
  for (int j = 0; j <= B; ++j) {
    double coef = factorial(AB - j) / (factorial(j) * factorial(B - j));
    Complex zfac = cpow_int(-2.0 * I * PI / double(N), j + 1);
    Complex tfac = cpow_int(tt, -AB - 1 + j);
    Complex sval;
    if (isE)
      sval = Sv(j, true, false) + par * Sv(j, true, true);
    else
      sval = Sv(j, true, true) + par * Sv(j, true, false);
    if (!isE) sval *= double(N);
    s_blocks += (sgn / facA) * coef * zfac * tfac * sval;
  }

  Complex total = c1 + c2 + s_blocks;
  return {total, tol * 20 + 1e-13 * std::abs(total)};
}

}  // namespace eisreg
