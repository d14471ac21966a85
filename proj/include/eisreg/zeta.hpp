#pragma once

// Hurwitz zeta, periodic zeta, Bernoulli polynomials, regularized values and
// the identities tying them together.  All x arguments are exact rationals
// mod 1; s is complex.  Every numeric result carries an absolute error bound.

#include <complex>

#include "eisreg/cyclotomic.hpp"
#include "eisreg/types.hpp"

namespace eisreg {

Rational bernoulli_number(int n);
Rational bernoulli_poly(int n, const Rational& x);
Int binomial_int(int n, int k);

// zeta(x, 1-n) for n >= 1, exact.
Rational hurwitz_zeta_nonpos_exact(const FractionModOne& x, int n);

// zetahat(u/N, 1-n) for n >= 1, exact in Q(zeta_N) via the finite Fourier
// relation; requires u != 0 mod N when n = 1.
Cyclotomic periodic_zeta_nonpos_exact(long long u, long long N, int n);

// Meromorphic continuation of zeta(x, s); PoleAtOne at s = 1.  Exact
// Bernoulli shortcut at nonpositive integer s.
ComplexValue hurwitz_zeta(const FractionModOne& x, Complex s, double tol = 1e-12);

// zeta(x, s) - 1/(s-1): the entire part, evaluable at s = 1 itself.
ComplexValue hurwitz_zeta_star(const FractionModOne& x, Complex s, double tol = 1e-12);

// Holomorphic continuation of zetahat(x, s); pole only at x = 0, s = 1.
ComplexValue periodic_zeta(const FractionModOne& x, Complex s, double tol = 1e-12);

// zeta*(x, 1) = lim_{s->1} (zeta(x, s) - 1/(s-1)).
ComplexValue zeta_star_at_one(const FractionModOne& x, double tol = 1e-12);

// | zeta(x, 1-s) - Gamma(s)(2 pi)^{-s} (e^{-i pi s/2} zetahat(x, s)
//                                        + e^{i pi s/2} zetahat(-x, s)) |
double verify_hurwitz_formula(const FractionModOne& x, Complex s);

struct FourierRelationResidual {
  double sum_to_hat;  // | sum_x zeta_N^{xu} zeta(x/N, s)    - N^s     zetahat(u/N, s) |
  double hat_to_sum;  // | sum_x zeta_N^{xu} zetahat(x/N, s) - N^{1-s} zeta(-u/N, s)   |
  double max() const { return sum_to_hat > hat_to_sum ? sum_to_hat : hat_to_sum; }
};
FourierRelationResidual finite_fourier_relation_check(long long N, long long u, Complex s);

// Working precision of the zeta kernels: 53 (double) or 64 (extended).
// Defaults to 64; the CLI exposes it as --prec.
void set_zeta_working_precision(int bits);
int zeta_working_precision();

}  // namespace eisreg
