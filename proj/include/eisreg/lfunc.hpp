#pragma once

// Completed L-functions by split Mellin quadrature:
//
//   Lambda(f,s) = M^{s/2} int_0^inf f*(iy) y^s dy/y
//               = M^{s/2} I_f(s) + M^{(k-s)/2} I_{Wf}(k-s)
//                 - a0(f)/s - a0(Wf)/(k-s),
//
// with both integrals taken over (1/sqrt(M), inf) where the q-expansions
// converge geometrically.  The caller supplies the Atkin-Lehner image wf of
// f; for the level-N^2 catalog families these are exact series.

#include <complex>
#include <utility>
#include <vector>

#include "eisreg/qseries.hpp"
#include "eisreg/types.hpp"

namespace eisreg {

enum class RegPoint { zero, weight };

struct LambdaValue {
  ComplexValue value;
  Complex s;
  bool regularized{false};
  // (pole location, residue coefficient) of the pole terms applied
  std::vector<std::pair<Complex, Complex>> pole_subtractions;
};

// sum a_n n^{-s} over the stored coefficients with a certified power tail;
// requires integer exponents and Re(s) > weight + 1
ComplexValue dirichlet_L(const FourierQSeries& f, Complex s);

LambdaValue completed_lambda(const FourierQSeries& f, const FourierQSeries& wf, long long M, int k,
                             Complex s, double tol = 1e-11);

// the regularized values Lambda*(f,0) and Lambda*(f,k)
LambdaValue lambda_star(const FourierQSeries& f, const FourierQSeries& wf, long long M, int k,
                        RegPoint at, double tol = 1e-11);

// Lambda(H^{(k)}_{a,b}, s) = N^s (2 pi)^{-s} Gamma(s)
//   ( zetahat(-a/N,s) zetahat(-b/N,s-k+1)
//     + (-1)^k zetahat(a/N,s) zetahat(b/N,s-k+1) )
ComplexValue lambda_H_closed_form(int k, long long a, long long b, long long N, Complex s);

struct RankinCheck {
  double residual_generic;      // at the given s
  double residual_regularized;  // the s = k variant with Lambda*
};

// both sides of
//  M^{s/2} int f*(iy) g*(i/(M y)) y^s dy/y
//    = Lambda(f h, s+l) - a0(f) Lambda(h, s+l) - a0(g) Lambda(f, s),
// h = W_M(g) supplied by the caller (wf = W_M(f) is needed to evaluate f
// near the cusp).
RankinCheck rankin_integral_check(const FourierQSeries& f, const FourierQSeries& wf,
                                  const FourierQSeries& g, const FourierQSeries& h, long long M,
                                  int k, int l, Complex s, double tol = 1e-10);

}  // namespace eisreg
