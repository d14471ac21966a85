#include "eisreg/zeta.hpp"

#include <atomic>
#include <mutex>
#include <vector>

#include "eisreg/detail/zeta_kernels.hpp"

namespace eisreg {

namespace {

std::atomic<int> g_prec_bits{64};

// run a kernel at the configured working precision, reporting a double bound
template <class F>
ComplexValue run_kernel(F&& f) {
  if (g_prec_bits.load() <= 53) {
    detail::ZEval<double> z = f(double{});
    return {z.v, z.err + 4 * ComplexValue::eps() * std::abs(z.v)};
  }
  detail::ZEval<long double> z = f((long double){});
  Complex v(static_cast<double>(z.v.real()), static_cast<double>(z.v.imag()));
  return {v, static_cast<double>(z.err) + 4 * ComplexValue::eps() * std::abs(v)};
}

bool is_real_integer(Complex s, long long& out) {
  if (s.imag() != 0.0) return false;
  double r = std::round(s.real());
  if (r != s.real()) return false;
  out = static_cast<long long>(r);
  return true;
}

}  // namespace

void set_zeta_working_precision(int bits) {
  if (bits != 53 && bits != 64) throw invalid_spec("working precision must be 53 or 64 bits");
  g_prec_bits.store(bits);
}
int zeta_working_precision() { return g_prec_bits.load(); }

Int binomial_int(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational bernoulli_number(int n) {
  if (n < 0) throw invalid_spec("bernoulli_number: n >= 0 required");
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    int m = static_cast<int>(cache.size());
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc(0);
    for (int j = 0; j < m; ++j) acc += Rational(binomial_int(m + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(binomial_int(m + 1, m)));
  }
  return cache[n];
}

Rational bernoulli_poly(int n, const Rational& x) {
  if (n < 0) throw invalid_spec("bernoulli_poly: n >= 0 required");
  Rational acc(0), xp(1);
  // B_n(x) = sum_k C(n,k) B_{n-k} x^k
  for (int k = 0; k <= n; ++k) {
    acc += Rational(binomial_int(n, k)) * bernoulli_number(n - k) * xp;
    xp *= x;
  }
  return acc;
}

Rational hurwitz_zeta_nonpos_exact(const FractionModOne& x, int n) {
  if (n < 1) throw invalid_spec("hurwitz_zeta_nonpos_exact: n >= 1 required");
  if (n == 1) return x.is_zero() ? Rational(-1, 2) : Rational(1, 2) - x.rational();
  return -bernoulli_poly(n, x.rational()) / n;
}

Cyclotomic periodic_zeta_nonpos_exact(long long u, long long N, int n) {
  if (N < 1) throw invalid_spec("periodic_zeta_nonpos_exact: N >= 1 required");
  u = ((u % N) + N) % N;
  if (n == 1 && u == 0) throw pole_error("zetahat(0, s) has a pole at s = 1");
  // N^{n-1} sum_x zeta_N^{xu} zeta(x/N, 1-n)
  Rational scale(1);
  for (int i = 1; i < n; ++i) scale *= N;
  Cyclotomic acc = Cyclotomic::rational(Rational(0)).promoted(static_cast<int>(N));
  for (long long x = 0; x < N; ++x)
    acc += Cyclotomic::zeta_pow(static_cast<int>(N), x * u) *
           hurwitz_zeta_nonpos_exact(FractionModOne::of(x, N), n);
  return acc * scale;
}

ComplexValue hurwitz_zeta(const FractionModOne& x, Complex s, double tol) {
  if (s == Complex(1.0, 0.0)) throw pole_error("hurwitz zeta: pole at s = 1");
  long long n1s;
  if (is_real_integer(s, n1s) && n1s <= 0) {
    Rational v = hurwitz_zeta_nonpos_exact(x, static_cast<int>(1 - n1s));
    double d = v.convert_to<double>();
    return {Complex(d, 0.0), 2 * ComplexValue::eps() * (std::abs(d) + 1e-30)};
  }
  ComplexValue r = run_kernel([&](auto tag) {
    using R = decltype(tag);
    R a = x.is_zero() ? R(1) : R(x.num) / R(x.den);
    return detail::hurwitz_em<R>(a, std::complex<R>(R(s.real()), R(s.imag())), false, R(tol));
  });
  if (r.err > std::max(tol, 1e-9) * 1e3) throw precision_error("hurwitz zeta: tolerance unachievable");
  return r;
}

ComplexValue hurwitz_zeta_star(const FractionModOne& x, Complex s, double tol) {
  return run_kernel([&](auto tag) {
    using R = decltype(tag);
    R a = x.is_zero() ? R(1) : R(x.num) / R(x.den);
    return detail::hurwitz_em<R>(a, std::complex<R>(R(s.real()), R(s.imag())), true, R(tol));
  });
}

ComplexValue periodic_zeta(const FractionModOne& x, Complex s, double tol) {
  if (x.is_zero()) return hurwitz_zeta(x, s, tol);
  long long n;
  if (is_real_integer(s, n) && n >= 2) {
    // at positive integers the finite Fourier splitting into Hurwitz zetas
    // with positive argument is perfectly conditioned, unlike the reflected
    // formula whose Hurwitz values at 1-n cancel catastrophically
    const long long q = x.den;
    const double two_pi = 6.283185307179586;
    Complex acc(0, 0);
    double err = 0;
    for (long long r = 0; r < q; ++r) {
      double ang = two_pi * double(((r * x.num) % q)) / double(q);
      ComplexValue z = hurwitz_zeta(FractionModOne::of(r, q), s, tol);
      acc += Complex(std::cos(ang), std::sin(ang)) * z.v;
      err += z.err;
    }
    double qs = std::pow(double(q), -double(n));
    return {qs * acc, qs * err + 8 * ComplexValue::eps() * std::abs(qs * acc)};
  }
  return run_kernel([&](auto tag) {
    using R = decltype(tag);
    R xr = R(x.num) / R(x.den);
    return detail::periodic_kernel<R>(xr, std::complex<R>(R(s.real()), R(s.imag())), R(tol));
  });
}

ComplexValue zeta_star_at_one(const FractionModOne& x, double tol) {
  return hurwitz_zeta_star(x, Complex(1.0, 0.0), tol);
}

double verify_hurwitz_formula(const FractionModOne& x, Complex s) {
  const double pi = 3.14159265358979323846;
  const Complex i(0.0, 1.0);
  ComplexValue lhs = hurwitz_zeta(x, Complex(1.0, 0.0) - s);
  ComplexValue zp = periodic_zeta(x, s);
  ComplexValue zm = periodic_zeta(x.negated(), s);
  Complex pref = cgamma(s) * std::exp(-s * std::log(Complex(2 * pi, 0.0)));
  Complex rhs = pref * (std::exp(-i * pi * s * 0.5) * zp.v + std::exp(i * pi * s * 0.5) * zm.v);
  return std::abs(lhs.v - rhs);
}

FourierRelationResidual finite_fourier_relation_check(long long N, long long u, Complex s) {
  if (N < 1) throw invalid_spec("finite_fourier_relation_check: N >= 1 required");
  const double two_pi = 6.283185307179586;
  auto zeta_N_pow = [&](long long e) {
    double a = two_pi * static_cast<double>(((e % N) + N) % N) / static_cast<double>(N);
    return Complex(std::cos(a), std::sin(a));
  };
  Complex lhs1(0, 0), lhs2(0, 0);
  for (long long x = 0; x < N; ++x) {
    Complex w = zeta_N_pow(x * u);
    lhs1 += w * hurwitz_zeta(FractionModOne::of(x, N), s).v;
    lhs2 += w * periodic_zeta(FractionModOne::of(x, N), s).v;
  }
  Complex Ns = std::exp(s * std::log(static_cast<double>(N)));
  Complex rhs1 = Ns * periodic_zeta(FractionModOne::of(u, N), s).v;
  Complex rhs2 = (static_cast<double>(N) / Ns) * hurwitz_zeta(FractionModOne::of(-u, N), s).v;
  return {std::abs(lhs1 - rhs1), std::abs(lhs2 - rhs2)};
}

}  // namespace eisreg
