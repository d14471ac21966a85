#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "eisreg/eisenstein.hpp"
#include "eisreg/gamma.hpp"
#include "eisreg/lfunc.hpp"
#include "eisreg/zeta.hpp"

using namespace eisreg;

namespace {
const double PI = 3.14159265358979323846;
const Complex I(0.0, 1.0);

EisensteinSpec sp(Family f, int k, long long a, long long b, long long N) {
  return EisensteinSpec{f, k, a, b, N};
}

Complex npow(double base, Complex e) { return std::exp(e * std::log(base)); }
}  // namespace

TEST_CASE("dirichlet series evaluation") {
  // all a_n = 1, weight metadata 1: L(s) = zeta(s)
  FourierQSeries ones(1, 20000, 1, 1);
  for (long long n = 1; n < 20000; ++n) ones.add_coeff(n, Coeff::integer(1));
  ComplexValue v = dirichlet_L(ones, Complex(3, 0));
  Complex z3 = hurwitz_zeta(FractionModOne::of(0, 1), Complex(3, 0)).v;
  CHECK(std::abs(z3 - Complex(1.2020569031595943, 0)) < 1e-12);
  CHECK(std::abs(v.v - z3) <= v.err);
  CHECK(std::abs(v.v - z3) < 1e-5);

  // single coefficient a_5 = 2
  FourierQSeries single(1, 100, 1, 1);
  single.add_coeff(5, Coeff::integer(2));
  Complex s(2.5, 0.5);
  CHECK(std::abs(dirichlet_L(single, s).v - 2.0 * npow(5.0, -s)) < 1e-13);

  CHECK_THROWS_AS(dirichlet_L(single, Complex(1.5, 0)), convergence_error);

  // L(H^{(3)}_{1,2}, 5) matches the closed form after the N^s (2pi)^{-s} Gamma(s)
  // factor (level N^2 makes (N^2)^{s/2} = N^s)
  long long N = 5;
  FourierQSeries h = build_series(sp(Family::H, 3, 1, 2, N), 4000).to_numeric();
  Complex sL(5, 0);
  Complex lhs = npow(double(N), sL) * npow(2 * PI, -sL) * cgamma(sL) * dirichlet_L(h, sL).v;
  Complex rhs = lambda_H_closed_form(3, 1, 2, N, sL).v;
  CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("completed Lambda: functional equation") {
  long long N = 5, M = N * N;
  int k = 1;
  FourierQSeries f = build_series(sp(Family::G, k, 1, 2, N), 300) +
                     build_series(sp(Family::G, k, 1, -2, N), 300);
  FourierQSeries wf = atkin_lehner_partner(sp(Family::G, k, 1, 2, N), 300) +
                      atkin_lehner_partner(sp(Family::G, k, 1, -2, N), 300);
  Complex s(0.7, 0);
  Complex lhs = completed_lambda(f, wf, M, k, s, 1e-12).value.v;
  // W(wf) = f, so the partner pair evaluates the other side
  Complex rhs = completed_lambda(wf, f, M, k, Complex(double(k), 0) - s, 1e-12).value.v;
  CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("entire Lambda interpolates holomorphically around s = 0") {
  long long N = 5, M = N * N;
  int k = 3;
  // both constant terms vanish: a0(G) = 0 for b != 0, a0(H^{(3)}_{.,b}) depends
  // only on b, so the difference of equal-b series kills it
  FourierQSeries f = build_series(sp(Family::G, k, 1, 2, N), 300) -
                     build_series(sp(Family::G, k, 4, 2, N), 300);
  FourierQSeries wf = atkin_lehner_partner(sp(Family::G, k, 1, 2, N), 300) -
                      atkin_lehner_partner(sp(Family::G, k, 4, 2, N), 300);
  CHECK(f.constant_term().is_zero());
  CHECK(wf.constant_term().approx() == Complex(0, 0));

  Complex center = completed_lambda(f, wf, M, k, Complex(0, 0), 1e-12).value.v;
  Complex mean(0, 0);
  const int K = 12;
  for (int m = 0; m < K; ++m) {
    double th = 2 * PI * m / K;
    Complex sm = 0.3 * Complex(std::cos(th), std::sin(th));
    mean += completed_lambda(f, wf, M, k, sm, 1e-12).value.v;
  }
  mean /= double(K);
  CHECK(std::abs(center - mean) < 1e-8);
}

TEST_CASE("regularized values") {
  long long N = 5, M = N * N;
  // a0(f) = 0: Lambda*(f,0) = Lambda(f,0)
  {
    int k = 3;
    FourierQSeries f = build_series(sp(Family::G, k, 1, 2, N), 300);
    FourierQSeries wf = atkin_lehner_partner(sp(Family::G, k, 1, 2, N), 300);
    CHECK(f.constant_term().is_zero());
    Complex direct = completed_lambda(f, wf, M, k, Complex(0, 0), 1e-12).value.v;
    LambdaValue st = lambda_star(f, wf, M, k, RegPoint::zero, 1e-12);
    CHECK(st.regularized);
    CHECK(std::abs(st.value.v - direct) < 1e-10);
  }
  // Lambda*(f,k) = Lambda*(Wf,0)
  {
    int k = 2;
    FourierQSeries f = build_series(sp(Family::G, k, 1, 0, N), 300);
    FourierQSeries wf = atkin_lehner_partner(sp(Family::G, k, 1, 0, N), 300);
    Complex lhs = lambda_star(f, wf, M, k, RegPoint::weight, 1e-12).value.v;
    Complex rhs = lambda_star(wf, f, M, k, RegPoint::zero, 1e-12).value.v;
    CHECK(std::abs(lhs - rhs) < 1e-10);

    // stencil limit of Lambda(f,s) + a0(f)/s agrees with the direct value
    Complex a0 = f.constant_term().approx();
    CHECK(a0 != Complex(0, 0));
    auto g = [&](double h) {
      Complex p = completed_lambda(f, wf, M, k, Complex(h, 0), 1e-13).value.v + a0 / h;
      Complex m = completed_lambda(f, wf, M, k, Complex(-h, 0), 1e-13).value.v - a0 / h;
      return 0.5 * (p + m);
    };
    Complex rich = (4.0 * g(5e-4) - g(1e-3)) / 3.0;
    Complex direct = lambda_star(f, wf, M, k, RegPoint::zero, 1e-13).value.v;
    CHECK(std::abs(rich - direct) < 1e-8);

    // poles where the constant terms are nonzero
    CHECK_THROWS_AS(completed_lambda(f, wf, M, k, Complex(0, 0), 1e-12), pole_error);
    CHECK_THROWS_AS(completed_lambda(f, wf, M, k, Complex(2, 0), 1e-12), pole_error);
  }
}

TEST_CASE("pole residues match the constant terms") {
  long long N = 5, M = N * N;
  int k = 2;
  FourierQSeries f = build_series(sp(Family::G, k, 1, 0, N), 300);
  FourierQSeries wf = atkin_lehner_partner(sp(Family::G, k, 1, 0, N), 300);
  Complex a0f = f.constant_term().approx();
  Complex a0w = wf.constant_term().approx();

  auto residue_at = [&](Complex c) {
    const int K = 8;
    Complex acc(0, 0);
    for (int m = 0; m < K; ++m) {
      double th = 2 * PI * m / K;
      Complex sm = c + 0.1 * Complex(std::cos(th), std::sin(th));
      acc += completed_lambda(f, wf, M, k, sm, 1e-13).value.v * (sm - c);
    }
    return acc / double(K);
  };
  CHECK(std::abs(residue_at(Complex(0, 0)) - (-a0f)) < 1e-8);
  CHECK(std::abs(residue_at(Complex(double(k), 0)) - a0w) < 1e-8);
}

TEST_CASE("quadrature agrees with the Dirichlet series for vanishing constant term") {
  long long N = 5, M = N * N;
  for (auto [k, a, b] : {std::tuple<int, long long, long long>{3, 1, 2}, {1, 1, 3}}) {
    FourierQSeries f = build_series(sp(Family::G, k, a, b, N), 6000);
    CHECK(f.constant_term().is_zero());
    FourierQSeries wf = atkin_lehner_partner(sp(Family::G, k, a, b, N), 400);
    Complex s(double(k) + 4.0, 0);
    Complex quad = completed_lambda(f, wf, M, k, s, 1e-12).value.v;
    Complex dir = npow(double(M), s * 0.5) * npow(2 * PI, -s) * cgamma(s) * dirichlet_L(f, s).v;
    CHECK(std::abs(quad - dir) < 1e-9);
    // at lower Re(s) the Dirichlet tail dominates but stays inside its bound
    Complex s2(double(k) + 1.5, 0);
    ComplexValue dirv = dirichlet_L(f, s2);
    Complex quad2 = completed_lambda(f, wf, M, k, s2, 1e-12).value.v;
    CHECK(std::abs(quad2 - npow(double(M), s2 * 0.5) * npow(2 * PI, -s2) * cgamma(s2) * dirv.v) <=
          std::abs(npow(double(M), s2 * 0.5) * npow(2 * PI, -s2) * cgamma(s2)) * dirv.err + 1e-9);
  }
}

TEST_CASE("closed form for Lambda(H)") {
  long long N = 5;
  // vanishing by odd-k antisymmetry at a = b = 0
  CHECK(std::abs(lambda_H_closed_form(1, 0, 0, N, Complex(4, 0)).v) < 1e-20);
  // against the Dirichlet route at integer s
  {
    FourierQSeries h = build_series(sp(Family::H, 3, 1, 2, N), 4000).to_numeric();
    Complex s(5, 0);
    Complex viaL = npow(double(N), s) * npow(2 * PI, -s) * cgamma(s) * dirichlet_L(h, s).v;
    CHECK(std::abs(lambda_H_closed_form(3, 1, 2, N, s).v - viaL) < 1e-9);
  }
  // against Mellin quadrature at s = 2.5 (level 25)
  {
    int k = 3;
    FourierQSeries h = build_series(sp(Family::H, k, 1, 2, N), 300);
    FourierQSeries wh = atkin_lehner_partner(sp(Family::H, k, 1, 2, N), 300);
    Complex s(2.5, 0);
    Complex quad = completed_lambda(h, wh, N * N, k, s, 1e-12).value.v;
    CHECK(std::abs(quad - lambda_H_closed_form(k, 1, 2, N, s).v) < 1e-8);
  }
  // conjugate symmetry at real s
  {
    Complex s(3.3, 0);
    Complex va = lambda_H_closed_form(3, 1, 2, 5, s).v;
    Complex vb = lambda_H_closed_form(3, -1, -2, 5, s).v;
    CHECK(std::abs(std::conj(va) - vb) < 1e-11);
  }
}

TEST_CASE("Rankin lemma: constant g degenerates to zero") {
  long long N = 5, M = N * N;
  int k = 1;
  FourierQSeries f = build_series(sp(Family::H, k, 1, 2, N), 200) +
                     build_series(sp(Family::H, k, 1, -2, N), 200);
  FourierQSeries wf = atkin_lehner_partner(sp(Family::H, k, 1, 2, N), 200) +
                      atkin_lehner_partner(sp(Family::H, k, 1, -2, N), 200);
  FourierQSeries c(1, 200, M, 0);
  c.add_coeff(0, Coeff::rational(Rational(3, 2)));
  // W of a constant is the constant itself (weight 0)
  RankinCheck r = rankin_integral_check(f, wf, c, c, M, k, 0, Complex(2, 0), 1e-11);
  CHECK(r.residual_generic < 1e-9);
}

TEST_CASE("Rankin lemma on a catalog pair") {
  long long N = 5, M = N * N;
  int k = 1, l = 2;
  FourierQSeries f = build_series(sp(Family::H, k, 1, 2, N), 400) +
                     build_series(sp(Family::H, k, 1, -2, N), 400);
  FourierQSeries wf = atkin_lehner_partner(sp(Family::H, k, 1, 2, N), 400) +
                      atkin_lehner_partner(sp(Family::H, k, 1, -2, N), 400);
  FourierQSeries g = build_series(sp(Family::G, l, 1, 3, N), 400) -
                     build_series(sp(Family::G, l, 1, 2, N), 400);
  FourierQSeries h = atkin_lehner_partner(sp(Family::G, l, 1, 3, N), 400) -
                     atkin_lehner_partner(sp(Family::G, l, 1, 2, N), 400);
  RankinCheck r = rankin_integral_check(f, wf, g, h, M, k, l, Complex(2, 0), 1e-11);
  CHECK(r.residual_generic < 1e-7);
  CHECK(r.residual_regularized < 1e-7);
}
