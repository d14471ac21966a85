#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <sstream>

#include "eisreg/qseries.hpp"

using namespace eisreg;

namespace {
const double PI = 3.14159265358979323846;

FourierQSeries constant(const Rational& r, long long T = 50) {
  FourierQSeries f(1, T, 1, 0);
  f.add_coeff(0, Coeff::rational(r));
  return f;
}

FourierQSeries random_series(std::mt19937_64& rng, long long D, long long T, int maxterms) {
  FourierQSeries f(D, T, 1, 1);
  for (int i = 0; i < maxterms; ++i) {
    long long j = static_cast<long long>(rng() % static_cast<unsigned long long>(T));
    long long num = static_cast<long long>(rng() % 9) - 4;
    long long den = 1 + static_cast<long long>(rng() % 4);
    f.add_coeff(j, Coeff::rational(Rational(num, den)));
  }
  return f;
}

bool exact_equal(const FourierQSeries& a, const FourierQSeries& b, long long upto) {
  for (long long j = 0; j < upto; ++j) {
    Coeff d = a.coeff(j) - b.coeff(j);
    if (!(d.exact() && d.is_zero())) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("additive and multiplicative identities") {
  FourierQSeries one = constant(Rational(1));
  FourierQSeries zero = constant(Rational(0));

  FourierQSeries f(1, 50, 1, 1);
  f.add_coeff(0, Coeff::integer(1));
  f.add_coeff(1, Coeff::integer(1));  // 1 + q

  CHECK(exact_equal(f + zero, f, 50));
  CHECK(exact_equal(f * one, f, 50));

  FourierQSeries g(1, 50, 1, 1);
  g.add_coeff(0, Coeff::integer(1));
  g.add_coeff(1, Coeff::integer(-1));  // 1 - q

  FourierQSeries s = f + g;  // 2
  CHECK(s.coeff(0).cy().rational_part() == Rational(2));
  CHECK(s.coeff(1).is_zero());

  FourierQSeries p = f * g;  // 1 - q^2
  CHECK(p.coeff(0).cy().rational_part() == Rational(1));
  CHECK(p.coeff(1).is_zero());
  CHECK(p.coeff(2).cy().rational_part() == Rational(-2) / 2);
}

TEST_CASE("cauchy product counts factorizations") {
  // (sum_{m>=1} q^m)(sum_{n>=1} q^n): coefficient of q^4 is #{(m,n): m+n=4} = 3
  FourierQSeries a(1, 40, 1, 1);
  for (long long m = 1; m < 40; ++m) a.add_coeff(m, Coeff::integer(1));
  FourierQSeries p = a * a;
  long long brute = 0;
  for (long long m = 1; m <= 4; ++m)
    for (long long n = 1; n <= 4; ++n)
      if (m + n == 4) ++brute;
  CHECK(brute == 3);
  CHECK(p.coeff(4).cy().rational_part() == Rational(brute));
}

TEST_CASE("truncation propagation in products") {
  FourierQSeries a(1, 10, 1, 1);
  a.add_coeff(2, Coeff::integer(1));  // q^2, known below 10
  FourierQSeries b(1, 7, 1, 1);
  b.add_coeff(3, Coeff::integer(1));  // q^3, known below 7
  FourierQSeries p = a * b;
  CHECK(p.trunc_num() == std::min(10 + 3, 7 + 2));
  CHECK(p.coeff(5).cy().rational_part() == Rational(1));
}

TEST_CASE("star removes the constant term and is idempotent") {
  FourierQSeries f(1, 20, 1, 1);
  f.add_coeff(0, Coeff::rational(Rational(7, 2)));
  f.add_coeff(1, Coeff::integer(1));
  FourierQSeries s = f.star();
  CHECK(s.coeff(0).is_zero());
  CHECK(s.coeff(1).cy().rational_part() == Rational(1));
  CHECK(exact_equal(s.star(), s, 20));
  CHECK(constant(Rational(5)).star().is_exact_zero());
}

TEST_CASE("ring axioms on random exact instances") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 12; ++trial) {
    FourierQSeries a = random_series(rng, 3, 30, 6);
    FourierQSeries b = random_series(rng, 3, 30, 6);
    FourierQSeries c = random_series(rng, 3, 30, 6);
    long long upto = ((a + b) + c).trunc_num();
    CHECK(exact_equal((a + b) + c, a + (b + c), upto));
    CHECK(exact_equal(a + b, b + a, upto));
    long long upm = (a * b).trunc_num();
    CHECK(exact_equal(a * b, b * a, upm));
    FourierQSeries lhs = a * (b + c);
    FourierQSeries rhs = a * b + a * c;
    long long upd = std::min(lhs.trunc_num(), rhs.trunc_num());
    CHECK(exact_equal(lhs, rhs, upd));
    FourierQSeries assoc1 = (a * b) * c, assoc2 = a * (b * c);
    long long upa = std::min(assoc1.trunc_num(), assoc2.trunc_num());
    CHECK(exact_equal(assoc1, assoc2, upa));
  }
}

TEST_CASE("evaluation: constants and the geometric series") {
  Complex tau(0.0, 1.0);
  ComplexValue c = constant(Rational(5, 3)).eval(tau);
  CHECK(std::abs(c.v - Complex(5.0 / 3, 0)) < 1e-15);
  CHECK(c.err < 1e-14);

  // sum_{n >= 1} q^n at tau = i equals e^{-2 pi}/(1 - e^{-2 pi})
  FourierQSeries geo(1, 60, 1, 1);
  for (long long n = 1; n < 60; ++n) geo.add_coeff(n, Coeff::integer(1));
  double q = std::exp(-2 * PI);
  double expect = q / (1 - q);
  CHECK(std::abs(expect - 1.8709365986606446e-3) < 1e-15);
  ComplexValue v = geo.eval(tau);
  CHECK(std::abs(v.v - Complex(expect, 0)) <= v.err);
  CHECK(std::abs(v.v - Complex(expect, 0)) < 1e-12);
}

TEST_CASE("eval multiplicativity within combined error bounds") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    FourierQSeries a = random_series(rng, 2, 40, 8);
    FourierQSeries b = random_series(rng, 2, 40, 8);
    for (double y : {0.5, 1.0, 2.3}) {
      Complex tau(0.2 * trial - 0.5, y);
      ComplexValue va = a.eval(tau), vb = b.eval(tau), vp = (a * b).eval(tau);
      double bound = vp.err + std::abs(va.v) * vb.err + std::abs(vb.v) * va.err + va.err * vb.err + 1e-14;
      CHECK(std::abs(vp.v - va.v * vb.v) <= bound);
    }
  }
}

TEST_CASE("tail bound soundness: doubling the truncation stays inside the bound") {
  // divisor-like coefficients with known polynomial growth
  auto build = [](long long T) {
    FourierQSeries f(1, T, 1, 2);
    for (long long n = 1; n < T; ++n) {
      Rational s(0);
      for (long long d = 1; d <= n; ++d)
        if (n % d == 0) s += d;
      f.add_coeff(n, Coeff::rational(s));
    }
    return f;
  };
  FourierQSeries f1 = build(60), f2 = build(120);
  for (double y : {0.4, 0.8, 1.5}) {
    Complex tau(0.1, y);
    ComplexValue v1 = f1.eval(tau), v2 = f2.eval(tau);
    CHECK(std::abs(v1.v - v2.v) <= v1.err);
  }
  // too small Im(tau) for the stored truncation must be refused
  CHECK_THROWS_AS(f1.eval(Complex(0.0, 1e-4)), convergence_error);
}

TEST_CASE("dump format") {
  FourierQSeries f(5, 30, 5, 1);
  f.add_coeff(0, Coeff::rational(Rational(1, 10)));
  f.add_coeff(5, Coeff::rational(Rational(3)));
  f.add_coeff(7, Coeff(Complex(0.5, -0.25), 1e-16));
  std::ostringstream os;
  f.dump(os);
  std::istringstream is(os.str());
  std::string l1, l2, l3;
  std::getline(is, l1);
  std::getline(is, l2);
  std::getline(is, l3);
  CHECK(l1 == "0/1  1/10");
  CHECK(l2 == "1/1  3/1");
  CHECK(l3.substr(0, 4) == "7/5 ");
}
