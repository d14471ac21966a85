#pragma once

// Numerical kernels for the Hurwitz zeta function and the periodic zeta
// function, templated on the working real type.  Conventions follow the
// congruence-sum normalization:
//
//   zeta(x, s)    = sum over y > 0, y = x mod 1, of y^{-s}
//   zetahat(x, s) = sum_{n >= 1} e^{2 pi i n x} n^{-s}
//
// zeta(x, .) is computed by Euler-Maclaurin with shift M and B_{2j}
// corrections; zetahat by the functional equation reflecting s to 1-s,
//
//   zetahat(x,s) = (2 pi)^s Gamma(1-s) / (-2 pi i)
//                  * ( e^{-i pi s/2} zeta(x,1-s) - e^{i pi s/2} zeta(-x,1-s) ),
//
// valid away from s = 1, 2, 3, ... where Gamma(1-s) has poles.  zetahat is
// entire there (for x != 0), so near positive integers the value is
// recovered by interpolating the reflected formula on a small circle of
// nodes around the integer.  Near s = 0 the two Hurwitz values sit near
// their pole at argument 1; the kernel switches to the pole-subtracted
// form, which is stable.

#include <cmath>
#include <complex>
#include <vector>

#include "eisreg/gamma.hpp"
#include "eisreg/types.hpp"

namespace eisreg::detail {

template <class R>
struct ZEval {
  std::complex<R> v{};
  R err{};
};

// B_{2j} / (2j)! for j = 1..16, enough for a depth-14 correction plus the
// remainder estimate from the first omitted term.
template <class R>
inline const R* b2j_over_fact() {
  static const R tab[17] = {
      R(0),
      R(1.0L / 6 / 2),                                    // B2/2!
      R(-1.0L / 30 / 24),                                 // B4/4!
      R(1.0L / 42 / 720),                                 // B6/6!
      R(-1.0L / 30 / 40320),                              // B8/8!
      R(5.0L / 66 / 3628800),                             // B10/10!
      R(-691.0L / 2730 / 479001600),                      // B12/12!
      R(7.0L / 6 / 87178291200.0L),                       // B14/14!
      R(-3617.0L / 510 / 20922789888000.0L),              // B16/16!
      R(43867.0L / 798 / 6402373705728000.0L),            // B18/18!
      R(-174611.0L / 330 / 2432902008176640000.0L),       // B20/20!
      R(854513.0L / 138 / 1124000727777607680000.0L),     // B22/22!
      R(-236364091.0L / 2730 / 620448401733239439360000.0L),
      R(8553103.0L / 6 / 403291461126605635584000000.0L),
      R(-23749461029.0L / 870 / 304888344611713860501504000000.0L),
      R(8615841276005.0L / 14322 / 265252859812191058636308480000000.0L),
      R(-7709321041217.0L / 510 / 263130836933693530167218012160000000.0L)};
  return tab;
}

template <class R>
inline std::complex<R> pw(R base, std::complex<R> e) {
  // base^e for base > 0
  return std::exp(e * std::log(base));
}

template <class R>
inline std::complex<R> expm1_over_w(std::complex<R> w) {
  // (e^w - 1)/w, stable near w = 0; equals 1 at w = 0
  if (std::abs(w) < R(0.5)) {
    std::complex<R> term(R(1), R(0)), acc(R(1), R(0));
    for (int k = 2; k < 40; ++k) {
      term *= w / R(k);
      acc += term;
      if (std::abs(term) < std::numeric_limits<R>::epsilon()) break;
    }
    return acc;
  }
  return (std::exp(w) - std::complex<R>(R(1), R(0))) / w;
}

// Euler-Maclaurin evaluation of sum_{n>=0} (n+a)^{-s} for 0 < a <= 1.
// With subtract_pole the entire function zeta_H(s,a) - 1/(s-1) is returned
// instead (usable at s = 1 itself).  min_shift forces a larger M, which the
// error-bound honesty tests use to cross-check reported bounds.
template <class R>
ZEval<R> hurwitz_em(R a, std::complex<R> s, bool subtract_pole, R tol, int min_shift = 0) {
  using C = std::complex<R>;
  const R* b2f = b2j_over_fact<R>();
  const int J = 14;
  const R eps = std::numeric_limits<R>::epsilon();

  if (s.real() + 2 * J + 1 <= R(2))
    throw precision_error("hurwitz_em: Re(s) too negative for the correction depth");

  // For Re(s) < 0 the direct terms (n+a)^{-s} grow with n and the partial sum
  // cancels against the (M+a)^{1-s}/(s-1) block, so keep the shift small
  // there; the correction depth absorbs the difference.
  int M = std::max(14, static_cast<int>(std::ceil(std::abs(s.imag()) * R(0.6))) + 10);
  if (s.real() < R(0))
    M = std::max(4, M + static_cast<int>(std::floor(static_cast<double>(s.real()))));
  M = std::max(M, min_shift);

  for (int attempt = 0;; ++attempt) {
    C sum(R(0), R(0));
    R magsum = R(0);
    for (int n = 0; n < M; ++n) {
      C t = pw(R(n) + a, -s);
      sum += t;
      magsum += std::abs(t);
    }
    const R Ma = R(M) + a;
    const R L = std::log(Ma);

    C t1;
    if (subtract_pole) {
      // [(M+a)^{1-s} - 1] / (s-1) = -L * (e^w - 1)/w,  w = (1-s) L
      C w = (C(R(1), R(0)) - s) * L;
      t1 = -L * expm1_over_w(w);
    } else {
      t1 = pw(Ma, C(R(1), R(0)) - s) / (s - C(R(1), R(0)));
    }
    C t2 = pw(Ma, -s) * R(0.5);

    C corr(R(0), R(0));
    C poch = s;  // (s)_{2j-1} for j = 1
    C last_scale;
    for (int j = 1; j <= J; ++j) {
      C term = b2f[j] * poch * pw(Ma, -(s + C(R(2 * j - 1), R(0))));
      corr += term;
      poch *= (s + C(R(2 * j - 1), R(0))) * (s + C(R(2 * j), R(0)));
      if (j == J) last_scale = poch;
    }
    // remainder bounded by the first omitted term times |s+2J+1|/(Re s+2J+1)
    C omitted = b2f[J + 1] * last_scale * pw(Ma, -(s + C(R(2 * J + 1), R(0))));
    R rem = std::abs(omitted) * std::max(R(1), std::abs(s + C(R(2 * J + 1), R(0))) / (s.real() + 2 * J + 1));

    C v = sum + t1 + t2 + corr;
    R rnd = eps * (magsum + std::abs(t1) + std::abs(t2) + std::abs(corr) + std::abs(v)) * R(4);
    if (rem <= tol * R(0.5) || attempt >= 5 || M >= 3000) return {v, rem + rnd};
    M *= 2;
  }
}

// Direct reflected formula for zetahat(x, s), x = p/q in (0,1).  Not valid
// within ~1/32 of a positive integer s (handled by the circle interpolation
// below).
template <class R>
ZEval<R> periodic_reflect(R x, std::complex<R> s, R tol, int min_shift = 0) {
  using C = std::complex<R>;
  const R pi = R(3.14159265358979323846264338327950288L);
  const C i(R(0), R(1));

  ZEval<R> z1, z2;
  C num;
  R num_err;
  C e1 = std::exp(-i * pi * s * R(0.5));
  C e2 = std::exp(i * pi * s * R(0.5));
  if (std::abs(s) < R(0.25)) {
    // zeta(x, 1-s) = zeta*(x, 1-s) - 1/s; the 1/s parts recombine stably
    z1 = hurwitz_em(x, C(R(1), R(0)) - s, true, tol, min_shift);
    z2 = hurwitz_em(R(1) - x, C(R(1), R(0)) - s, true, tol, min_shift);
    C sincpart;  // (e1 - e2)/s = -2i sin(pi s/2)/s
    if (std::abs(s) < R(1e-30))
      sincpart = -i * pi;
    else
      sincpart = -R(2) * i * std::sin(pi * s * R(0.5)) / s;
    num = e1 * z1.v - e2 * z2.v - sincpart;
    num_err = z1.err + z2.err;
  } else {
    z1 = hurwitz_em(x, C(R(1), R(0)) - s, false, tol, min_shift);
    z2 = hurwitz_em(R(1) - x, C(R(1), R(0)) - s, false, tol, min_shift);
    num = e1 * z1.v - e2 * z2.v;
    num_err = z1.err + z2.err;
  }
  C pref = pw(R(2) * pi, s) * tgamma_complex(C(R(1), R(0)) - s) / (-R(2) * i * pi);
  C v = pref * num;
  R err = std::abs(pref) * num_err + R(64) * std::numeric_limits<R>::epsilon() * std::abs(v);
  return {v, err};
}

// zetahat(x, s) with |s - n| small for a positive integer n: interpolate the
// entire function from reflected-formula values on the circle |s - n| = 1/8.
template <class R>
ZEval<R> periodic_near_integer(R x, std::complex<R> s, int n, R tol) {
  using C = std::complex<R>;
  const int K = 16;
  const R r = R(0.125);
  const R pi = R(3.14159265358979323846264338327950288L);

  std::vector<C> node(K);
  R node_err = R(0), maxg = R(0);
  for (int m = 0; m < K; ++m) {
    R th = R(2) * pi * R(m) / R(K);
    C sm = C(R(n), R(0)) + r * C(std::cos(th), std::sin(th));
    ZEval<R> g = periodic_reflect(x, sm, tol);
    node[m] = g.v;
    node_err += g.err / R(K);
    maxg = std::max(maxg, std::abs(g.v));
  }
  // DFT of the node values approximates the Taylor coefficients at n
  C d = (s - C(R(n), R(0))) / r;
  C acc(R(0), R(0)), dp(R(1), R(0));
  for (int j = 0; j < K; ++j) {
    C cj(R(0), R(0));
    for (int m = 0; m < K; ++m) {
      R th = -R(2) * pi * R(j) * R(m) / R(K);
      cj += node[m] * C(std::cos(th), std::sin(th));
    }
    cj /= R(K);
    acc += cj * dp;
    dp *= d;
  }
  // aliasing bound: coefficients of order >= K leak in with factor ~ (r/rho)^K
  R alias = maxg * R(50) * std::pow(r / R(0.8), R(K));
  return {acc, node_err + alias + R(16) * std::numeric_limits<R>::epsilon() * std::abs(acc)};
}

// Full dispatcher for zetahat(x, s), 0 < x < 1 exact rational p/q.
template <class R>
ZEval<R> periodic_kernel(R x, std::complex<R> s, R tol) {
  using C = std::complex<R>;
  const R pi = R(3.14159265358979323846264338327950288L);
  if (s.imag() == R(0) && s.real() == R(1)) {
    // -Log(1 - e^{2 pi i x}) with 1 - e^{2 pi i x} = 2 sin(pi x) e^{i(pi x - pi/2)}
    R v_re = -std::log(R(2) * std::sin(pi * x));
    R v_im = -(pi * x - pi / R(2));
    C v(v_re, v_im);
    return {v, R(8) * std::numeric_limits<R>::epsilon() * (R(1) + std::abs(v))};
  }
  long n = std::lround(static_cast<double>(s.real()));
  if (n >= 1 && std::abs(s - C(R(n), R(0))) < R(1) / R(32))
    return periodic_near_integer(x, s, static_cast<int>(n), tol);
  return periodic_reflect(x, s, tol);
}

}  // namespace eisreg::detail
