#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "eisreg/quadrature.hpp"
#include "eisreg/rz.hpp"
#include "eisreg/zeta.hpp"

using namespace eisreg;

namespace {
const double PI = 3.14159265358979323846;

DoubleSeriesSpec spec_of(Complex t, Complex u, ArithmeticFunctionModN a, ArithmeticFunctionModN b,
                         long long N) {
  return DoubleSeriesSpec{t, u, std::move(a), std::move(b), N};
}

// weight of K as sum over factorizations K = m n
Complex factorization_weight(const ArithmeticFunctionModN& a, const ArithmeticFunctionModN& b,
                             Complex t, Complex u, long long K) {
  Complex acc(0, 0);
  for (long long m = 1; m <= K; ++m) {
    if (K % m) continue;
    long long n = K / m;
    acc += a.approx(m) * b.approx(n) * std::exp(t * std::log(double(m))) *
           std::exp(u * std::log(double(n)));
  }
  return acc;
}
}  // namespace

TEST_CASE("delta and hat-delta") {
  ArithmeticFunctionModN d0 = delta_fn(0, 3);
  CHECK(d0.at(0).rational_part() == Rational(1));
  CHECK(d0.at(1).is_zero());
  CHECK(d0.at(2).is_zero());

  ArithmeticFunctionModN h0 = hat_delta_fn(0, 5);
  for (long long n = 0; n < 5; ++n) CHECK(h0.at(n).rational_part() == Rational(1));

  // DFT of delta_u: sum_x delta_u(x) zeta_N^{-xn} = zeta_N^{-un} = hat_delta_u(n), exactly
  for (long long u = 0; u < 5; ++u) {
    ArithmeticFunctionModN du = delta_fn(u, 5);
    ArithmeticFunctionModN hu = hat_delta_fn(u, 5);
    for (long long n = 0; n < 5; ++n) {
      Cyclotomic dft;
      for (long long x = 0; x < 5; ++x) dft += du.at(x) * Cyclotomic::zeta_pow(5, -x * n);
      CHECK(dft == hu.at(n));
    }
  }
}

TEST_CASE("S_eval basics") {
  // zero alpha gives the zero function
  DoubleSeriesSpec z = spec_of(Complex(2, 0), Complex(1, 0), ArithmeticFunctionModN(4),
                               hat_delta_fn(0, 4), 4);
  CHECK(S_eval(z, 1.0, false, 100).v == Complex(0, 0));

  // all-ones alpha, beta; t = u = 0: S(iy) = sum d(K) e^{-2 pi K y / N}
  DoubleSeriesSpec ones = spec_of(Complex(0, 0), Complex(0, 0), hat_delta_fn(0, 4),
                                  hat_delta_fn(0, 4), 4);
  double y = 4.0;
  Complex brute(0, 0);
  for (long long K = 1; K <= 10000; ++K) {
    long long d = 0;
    for (long long m = 1; m * m <= K; ++m)
      if (K % m == 0) d += (m * m == K) ? 1 : 2;
    brute += double(d) * std::exp(-2 * PI * double(K) * y / 4.0);
  }
  ComplexValue v = S_eval(ones, y, false, 10000);
  CHECK(std::abs(v.v - brute) < 1e-12);

  // doubling the cutoff moves the value by less than the reported tail
  DoubleSeriesSpec s21 = spec_of(Complex(2, 0), Complex(1, 0), hat_delta_fn(1, 5), delta_fn(2, 5), 5);
  ComplexValue a = S_eval(s21, 1.0, false, 400);
  ComplexValue b = S_eval(s21, 1.0, false, 800);
  CHECK(std::abs(a.v - b.v) <= a.err);

  // a cutoff too small for the tail to close is refused
  CHECK_THROWS_AS(S_eval(s21, 1e-4, false, 32), convergence_error);
}

TEST_CASE("fast theta path agrees with the generic loop") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    long long N = (trial % 2) ? 5 : 3;
    DoubleSeriesSpec s = spec_of(Complex(double(rng() % 7) - 3.0, (trial % 3) * 0.5),
                                 Complex(double(rng() % 4), 0),
                                 hat_delta_fn(rng() % N, N) , delta_fn(rng() % N, N), N);
    for (double y : {0.07, 0.3, 1.1}) {
      ComplexValue fast = S_eval_tau(s, Complex(0, y), 1e-12);
      ComplexValue slow = S_eval(s, y, false, 6000);
      CHECK(std::abs(fast.v - slow.v) <= fast.err + slow.err + 1e-12);
    }
  }
}

TEST_CASE("conjugation and bilinearity") {
  long long N = 5;
  DoubleSeriesSpec s = spec_of(Complex(1, 0), Complex(2, 0), hat_delta_fn(2, N), delta_fn(3, N), N);
  // conj(S^{t,u}_{alpha,beta}(iy)) = S^{t,u}_{conj alpha, conj beta}(iy): exact at coefficients
  for (long long n = 0; n < N; ++n) {
    CHECK(s.alpha.at(n).conj() == hat_delta_fn(-2, N).at(n));
    CHECK(s.beta.at(n).conj() == s.beta.at(n));
  }
  double y = 0.8;
  DoubleSeriesSpec sc = spec_of(s.t, s.u, s.alpha.conj(), s.beta.conj(), N);
  CHECK(std::abs(std::conj(S_eval(s, y, false, 2000).v) - S_eval(sc, y, false, 2000).v) < 1e-13);

  // bilinearity in alpha
  DoubleSeriesSpec s1 = spec_of(s.t, s.u, hat_delta_fn(1, N), s.beta, N);
  DoubleSeriesSpec s2 = spec_of(s.t, s.u, delta_fn(2, N), s.beta, N);
  DoubleSeriesSpec ssum = spec_of(s.t, s.u, hat_delta_fn(1, N) + delta_fn(2, N), s.beta, N);
  Complex lhs = S_eval(ssum, y, false, 2000).v;
  Complex rhs = S_eval(s1, y, false, 2000).v + S_eval(s2, y, false, 2000).v;
  CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("Mellin closed form vs quadrature") {
  long long N = 5;
  DoubleSeriesSpec s = spec_of(Complex(0, 0), Complex(0, 0), delta_fn(1, N), hat_delta_fn(2, N), N);

  // L(delta_u, s) = N^{-s} zeta(u/N, s)
  for (Complex w : {Complex(2.4, 0), Complex(3.0, 1.0)}) {
    ComplexValue L = dirichlet_L_mod_fn(delta_fn(3, N), w);
    Complex expect = std::exp(-w * std::log(double(N))) * hurwitz_zeta(FractionModOne::of(3, N), w).v;
    CHECK(std::abs(L.v - expect) < 1e-12);
  }

  Complex sparam(5, 0);
  ComplexValue closed = mellin_S_closed(s, sparam, false);
  auto f = [&](double y) -> Complex {
    return S_eval_tau(s, Complex(0, y), 1e-13).v * std::pow(y, 4.0);
  };
  QuadResult q = de_finite(f, 1e-3, 42.0, 1e-12);
  // |S(iy)| <= c/y^2 near 0, so the dropped head is O(y_lo^{5-2}) ~ 1e-9 * c
  CHECK(std::abs(q.v - closed.v) < 1e-8);

  // inverted variant at s = -5 equals the straight transform at s = 5
  ComplexValue invv = mellin_S_closed(s, Complex(-5, 0), true);
  CHECK(std::abs(invv.v - closed.v) < 1e-12);
  auto g = [&](double y) -> Complex {
    return S_eval_tau(s, Complex(0, 1.0 / y), 1e-13).v * std::pow(y, -6.0);
  };
  QuadResult q2 = de_finite(g, 1.0 / 42.0, 1e3, 1e-12);
  CHECK(std::abs(q2.v - invv.v) < 1e-8);

  CHECK_THROWS_AS(mellin_S_closed(s, Complex(0.5, 0), false), convergence_error);
}

TEST_CASE("swap identity: zero input and s=0 brute force") {
  long long N = 3;
  // alpha1 = 0 makes both sides vanish
  DoubleSeriesSpec z1 = spec_of(Complex(1, 0), Complex(0, 0), ArithmeticFunctionModN(N),
                                delta_fn(1, N), N);
  DoubleSeriesSpec z2 = spec_of(Complex(0, 0), Complex(2, 0), delta_fn(1, N), delta_fn(2, N), N);
  CHECK(rz_swap_check(z1, z2, Complex(0, 0), 1e-9) < 1e-15);

  // s = 0: both sides equal the absolutely convergent 4-fold Bessel sum
  struct Inst {
    Complex t1, u1, t2, u2;
    ArithmeticFunctionModN a1, b1, a2, b2;
  };
  std::vector<Inst> insts;
  insts.push_back({Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(2, 0), delta_fn(1, N),
                   delta_fn(2, N), delta_fn(2, N), delta_fn(1, N)});
  insts.push_back({Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0), hat_delta_fn(1, N),
                   delta_fn(0, N), delta_fn(1, N), hat_delta_fn(2, N)});
  insts.push_back({Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(0, 0), delta_fn(2, N),
                   hat_delta_fn(1, N), hat_delta_fn(1, N), delta_fn(1, N)});
  for (const auto& in : insts) {
    DoubleSeriesSpec s1 = spec_of(in.t1, in.u1, in.a1, in.b1, N);
    DoubleSeriesSpec s2 = spec_of(in.t2, in.u2, in.a2, in.b2, N);

    Complex oracle(0, 0);
    const long long cap = 400;
    for (long long a = 1; a <= cap; ++a) {
      Complex w1 = factorization_weight(in.a1, in.b1, in.t1, in.u1, a);
      if (w1 == Complex(0, 0)) continue;
      for (long long b = 1; a * b <= cap; ++b) {
        Complex w2 = factorization_weight(in.a2, in.b2, in.t2, in.u2, b);
        if (w2 == Complex(0, 0)) continue;
        double arg = 4.0 * PI / double(N) * std::sqrt(double(a) * double(b));
        oracle += w1 * w2 * 2.0 * std::cyl_bessel_k(0.0, arg);
      }
    }
    ComplexValue lhs = S_product_integral(s1, s2, Complex(0, 0), 1e-11);
    DoubleSeriesSpec rs = spec_of(in.t1, in.t2, in.a1, in.a2, N);
    DoubleSeriesSpec ri = spec_of(in.u1, in.u2, in.b1, in.b2, N);
    ComplexValue rhs = S_product_integral(ri, rs, Complex(0, 0), 1e-11);
    CHECK(std::abs(lhs.v - oracle) < 1e-10);
    CHECK(std::abs(rhs.v - oracle) < 1e-10);
    CHECK(rz_swap_check(s1, s2, Complex(0, 0), 1e-11) < 1e-10);
  }
}

TEST_CASE("swap identity at complex s") {
  long long N = 5;
  DoubleSeriesSpec s1 = spec_of(Complex(-1, 0), Complex(3, 0),
                                hat_delta_fn(1, N) + hat_delta_fn(4, N), delta_fn(2, N), N);
  DoubleSeriesSpec s2 = spec_of(Complex(0, 0), Complex(0, 0), hat_delta_fn(3, N),
                                delta_fn(1, N) - delta_fn(4, N), N);
  CHECK(rz_swap_check(s1, s2, Complex(2, 1), 1e-9) < 1e-7);
}

TEST_CASE("seeded random swap draws") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    long long N = (rng() % 2) ? 3 : 5;
    auto rnd_fn = [&](void) {
      ArithmeticFunctionModN f =
          (rng() % 2) ? delta_fn(rng() % N, N) : hat_delta_fn(rng() % N, N);
      if (rng() % 3 == 0) f = f + delta_fn(rng() % N, N);
      return f;
    };
    DoubleSeriesSpec s1 = spec_of(Complex(double(rng() % 5) - 2, 0), Complex(double(rng() % 3), 0),
                                  rnd_fn(), rnd_fn(), N);
    DoubleSeriesSpec s2 = spec_of(Complex(double(rng() % 3), 0), Complex(double(rng() % 3), 0),
                                  rnd_fn(), rnd_fn(), N);
    Complex s(double(rng() % 5) - 2.0, double(rng() % 3) - 1.0);
    CHECK(rz_swap_check(s1, s2, s, 1e-9) < 1e-7);
  }
}
