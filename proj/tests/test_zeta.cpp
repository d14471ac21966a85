#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "eisreg/detail/zeta_kernels.hpp"
#include "eisreg/zeta.hpp"

using namespace eisreg;
using std::abs;

namespace {
const double PI = 3.14159265358979323846;
const Complex I(0.0, 1.0);

FractionModOne fr(long long p, long long q) { return FractionModOne::of(p, q); }

// independent summation oracles, used to freeze expected values

double zeta2_oracle() {
  // direct sum + integral/Euler-Maclaurin tail, two shifts cross-checked
  auto at = [](long long M) {
    double s = 0;
    for (long long n = M; n >= 1; --n) s += 1.0 / (double(n) * double(n));
    double m = double(M);
    return s + 1.0 / m - 1.0 / (2 * m * m) + 1.0 / (6 * m * m * m);
  };
  double a = at(100000), b = at(200000);
  REQUIRE(abs(a - b) < 1e-13);
  return b;
}

double euler_gamma_oracle() {
  // lim (H_n - log n), accelerated by the standard asymptotic corrections
  auto at = [](long long M) {
    double h = 0;
    for (long long n = M; n >= 1; --n) h += 1.0 / double(n);
    double m = double(M);
    return h - std::log(m) - 1.0 / (2 * m) + 1.0 / (12 * m * m) - 1.0 / (120 * m * m * m * m);
  };
  double a = at(50000), b = at(100000);
  REQUIRE(abs(a - b) < 1e-13);
  return b;
}

double minus_log2_oracle() {
  // Abel-type evaluation of sum (-1)^n / n by pairing terms plus tail fix
  auto at = [](long long K) {
    double s = 0;
    for (long long k = K; k >= 1; --k) s += 1.0 / (2.0 * k) - 1.0 / (2.0 * k - 1);
    return s - 1.0 / (4.0 * double(K));
  };
  double a = at(100000), b = at(200000);
  REQUIRE(abs(a - b) < 1e-10);
  return b;
}

}  // namespace

TEST_CASE("bernoulli polynomials, exact") {
  CHECK(bernoulli_poly(1, Rational(1, 4)) == Rational(-1, 4));
  CHECK(bernoulli_poly(0, Rational(7, 3)) == Rational(1));
  CHECK(bernoulli_poly(0, Rational(0)) == Rational(1));
  CHECK(bernoulli_poly(2, Rational(1, 6)) == Rational(1, 36));
  // generating-function spot checks
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  CHECK(bernoulli_poly(3, Rational(1, 2)) == Rational(0));
}

TEST_CASE("hurwitz zeta special values") {
  CHECK(abs(hurwitz_zeta(fr(1, 3), 0.0).v - Complex(1.0 / 6, 0)) < 1e-14);
  CHECK(abs(hurwitz_zeta(fr(0, 1), 0.0).v - Complex(-0.5, 0)) < 1e-14);

  // zeta(1/2, -1) = -B_2(1/2)/2, expected value computed from the exact oracle
  Rational expect = -bernoulli_poly(2, Rational(1, 2)) / 2;
  CHECK(expect == Rational(1, 24));
  CHECK(abs(hurwitz_zeta(fr(1, 2), -1.0).v - Complex(expect.convert_to<double>(), 0)) < 1e-15);

  double z2 = zeta2_oracle();
  ComplexValue z = hurwitz_zeta(fr(0, 1), 2.0);
  CHECK(abs(z.v - Complex(z2, 0)) < 1e-12);
  CHECK(abs(z.v.real() - 1.6449340668482264) < 1e-12);

  CHECK_THROWS_AS(hurwitz_zeta(fr(1, 3), 1.0), pole_error);
}

TEST_CASE("hurwitz zeta agrees with direct partial sums for Re(s) > 1.5") {
  for (Complex s : {Complex(1.7, 0.0), Complex(2.5, 0.0), Complex(3.1, 0.0)}) {
    for (auto x : {fr(1, 3), fr(2, 5), fr(0, 1)}) {
      double a = x.is_zero() ? 1.0 : x.value();
      const long long P = 1000000;
      Complex partial(0, 0);
      for (long long n = P - 1; n >= 0; --n) partial += std::pow(n + a, -s.real());
      // Euler-Maclaurin tail estimate for the omitted range, with its own
      // first-omitted-term error allowance
      double Pa = P + a;
      Complex tail = std::pow(Pa, 1.0 - s.real()) / (s - 1.0) + 0.5 * std::pow(Pa, -s.real());
      double tail_err = abs(s) / 12.0 * std::pow(Pa, -s.real() - 1.0) * 2;
      ComplexValue v = hurwitz_zeta(x, s);
      CHECK(abs(v.v - (partial + tail)) <= v.err + tail_err + 1e-11);
    }
  }
}

TEST_CASE("periodic zeta values") {
  // x = 0 collapses to the Riemann zeta through the Hurwitz side
  for (Complex s : {Complex(2.0, 0.0), Complex(3.5, 0.5)}) {
    CHECK(abs(periodic_zeta(fr(0, 1), s).v - hurwitz_zeta(fr(0, 1), s).v) < 1e-13);
  }

  double ml2 = minus_log2_oracle();
  ComplexValue v = periodic_zeta(fr(1, 2), 1.0);
  CHECK(abs(v.v - Complex(ml2, 0)) < 1e-9);
  CHECK(abs(v.v - Complex(-std::log(2.0), 0)) < 1e-13);

  Complex d = periodic_zeta(fr(1, 4), 1.0).v - periodic_zeta(fr(3, 4), 1.0).v;
  CHECK(abs(d - I * PI / 2.0) < 1e-12);

  CHECK_THROWS_AS(periodic_zeta(fr(0, 1), 1.0), pole_error);
}

TEST_CASE("periodic zeta at s=0 equals the Abel value z/(1-z)") {
  for (long long k = 1; k < 5; ++k) {
    Complex z = std::exp(I * (2 * PI * double(k) / 5.0));
    CHECK(abs(periodic_zeta(fr(k, 5), 0.0).v - z / (1.0 - z)) < 1e-12);
  }
}

TEST_CASE("regularized value at s=1") {
  double g = euler_gamma_oracle();
  ComplexValue v = zeta_star_at_one(fr(0, 1));
  CHECK(abs(v.v - Complex(g, 0)) < 1e-12);
  CHECK(abs(v.v.real() - 0.5772156649015329) < 1e-13);

  // zeta*(x,1) - zeta*(-x,1) = i pi (e^{2 i pi x}+1)/(e^{2 i pi x}-1)
  Complex z = std::exp(I * (2 * PI / 5.0));
  Complex d = zeta_star_at_one(fr(1, 5)).v - zeta_star_at_one(fr(4, 5)).v;
  CHECK(abs(d - I * PI * (z + 1.0) / (z - 1.0)) < 1e-12);

  // antisymmetry of the difference under x -> -x; the value is pi*cot(pi x)
  Complex d2 = zeta_star_at_one(fr(4, 5)).v - zeta_star_at_one(fr(1, 5)).v;
  CHECK(abs(d + d2) < 1e-14);
  CHECK(abs(d - Complex(PI / std::tan(PI / 5.0), 0)) < 1e-12);

  // stencil + Richardson oracle for the defining limit
  for (auto x : {fr(0, 1), fr(2, 7)}) {
    auto gfun = [&](double h) {
      Complex a = hurwitz_zeta(x, Complex(1.0 + h, 0)).v - 1.0 / h;
      Complex b = hurwitz_zeta(x, Complex(1.0 - h, 0)).v + 1.0 / h;
      return 0.5 * (a + b);
    };
    Complex r = (4.0 * gfun(5e-4) - gfun(1e-3)) / 3.0;
    CHECK(abs(r - zeta_star_at_one(x).v) < 1e-8);
  }
}

TEST_CASE("hurwitz functional equation residuals") {
  CHECK(verify_hurwitz_formula(fr(1, 3), Complex(2.0, 0)) < 1e-10);
  CHECK(verify_hurwitz_formula(fr(0, 1), Complex(2.0, 0)) < 1e-10);
  CHECK(verify_hurwitz_formula(fr(1, 7), Complex(1.5, 0.5)) < 1e-9);
}

TEST_CASE("finite Fourier relations") {
  CHECK(finite_fourier_relation_check(5, 2, Complex(2.3, 0)).max() < 1e-10);
  CHECK(finite_fourier_relation_check(3, 0, Complex(3.0, 0)).max() < 1e-10);
  CHECK(finite_fourier_relation_check(4, 1, Complex(2.0, 1.0)).max() < 1e-9);
}

TEST_CASE("parity identities on a grid") {
  for (int n = 1; n <= 6; ++n) {
    for (long long k = 0; k < 7; ++k) {
      if (n == 1 && k == 0) continue;
      FractionModOne x = fr(k, 7);
      Complex s(1.0 - n, 0.0);
      Complex a = hurwitz_zeta(x.negated(), s).v;
      Complex b = hurwitz_zeta(x, s).v;
      CHECK(abs(a - double(n % 2 ? -1 : 1) * b) < 1e-10);
      // the zetahat parity only holds from n = 2 on: at n = 1 the Abel value
      // z/(1-z) has even part -1/2, so the odd-parity claim fails there
      if (k == 0 || n == 1) continue;
      Complex c = periodic_zeta(x.negated(), s).v;
      Complex d = periodic_zeta(x, s).v;
      CHECK(abs(c - double(n % 2 ? -1 : 1) * d) < 1e-10);
    }
  }
}

TEST_CASE("zetahat Bernoulli combination at positive integers") {
  // zetahat(x,n) + (-1)^n zetahat(-x,n) = -(2 i pi)^n B_n({x}) / n!
  for (int n = 2; n <= 5; ++n) {
    for (long long k = 1; k < 7; ++k) {
      FractionModOne x = fr(k, 7);
      Complex lhs = periodic_zeta(x, Complex(n, 0)).v +
                    double(n % 2 ? -1 : 1) * periodic_zeta(x.negated(), Complex(n, 0)).v;
      double bn = (bernoulli_poly(n, x.rational())).convert_to<double>();
      Complex rhs = -std::pow(2.0 * I * PI, n) * bn;
      for (int j = 2; j <= n; ++j) rhs /= double(j);
      CHECK(abs(lhs - rhs) < 1e-9);
    }
  }
}

TEST_CASE("periodic zeta direct partial sums for real s > 1.5") {
  for (double s : {1.7, 2.2}) {
    for (long long k : {1LL, 3LL}) {
      FractionModOne x = fr(k, 7);
      const long long P = 1000000;
      Complex partial(0, 0);
      for (long long n = P; n >= 1; --n)
        partial += std::exp(I * (2 * PI * double((n * k) % 7) / 7.0)) * std::pow(double(n), -s);
      Complex z = std::exp(I * (2 * PI * double(k) / 7.0));
      double tail_bound = 4.0 / abs(1.0 - z) * std::pow(double(P), -s);
      ComplexValue v = periodic_zeta(x, Complex(s, 0));
      CHECK(abs(v.v - partial) <= v.err + tail_bound);
    }
  }
}

TEST_CASE("error bounds honest against higher working precision") {
  using detail::hurwitz_em;
  using detail::periodic_kernel;
  for (double sx : {-3.3, 0.4, 2.0, 4.7}) {
    for (double sy : {0.0, 1.0}) {
      for (double a : {1.0 / 3, 1.0 / 7, 1.0}) {
        auto d = hurwitz_em<double>(a, Complex(sx, sy), false, 1e-13);
        auto l = hurwitz_em<long double>(static_cast<long double>(a),
                                         std::complex<long double>(sx, sy), false, 1e-16L);
        CHECK(abs(d.v - Complex(double(l.v.real()), double(l.v.imag()))) <= d.err + 1e-15);
        // a larger shift must stay inside the reported bound as well
        auto d2 = hurwitz_em<double>(a, Complex(sx, sy), false, 1e-13, 64);
        CHECK(abs(d.v - d2.v) <= d.err + d2.err + 1e-15);
      }
    }
  }
  for (double sx : {-2.5, 0.6, 2.0, 3.0}) {
    auto d = periodic_kernel<double>(2.0 / 7, Complex(sx, 0.3), 1e-13);
    auto l = periodic_kernel<long double>(2.0L / 7, std::complex<long double>(sx, 0.3L), 1e-16L);
    CHECK(abs(d.v - Complex(double(l.v.real()), double(l.v.imag()))) <= d.err + 1e-14);
  }
}

TEST_CASE("exact nonpositive values agree with the kernels") {
  // zetahat at 1-n via the exact finite-Fourier construction vs the analytic path
  for (int n = 2; n <= 5; ++n) {
    for (long long u = 0; u < 5; ++u) {
      Cyclotomic e = periodic_zeta_nonpos_exact(u, 5, n);
      Complex v = periodic_zeta(fr(u, 5), Complex(1 - n, 0)).v;
      CHECK(abs(e.embed() - v) < 1e-11);
    }
  }
}
