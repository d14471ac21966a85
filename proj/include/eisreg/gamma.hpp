#pragma once

// Complex gamma function, Lanczos approximation (g = 7, 9 terms) with
// reflection for Re z < 1/2.  Relative accuracy ~ 1e-14 in double, which is
// ample here: gamma factors enter completed L-functions and Mellin closed
// forms whose acceptance tolerances sit at 1e-8..1e-10.

#include <complex>

namespace eisreg {

template <class R>
std::complex<R> tgamma_complex(std::complex<R> z) {
  using C = std::complex<R>;
  static const R g = R(7);
  static const R c[9] = {
      R(0.99999999999980993L),  R(676.5203681218851L),   R(-1259.1392167224028L),
      R(771.32342877765313L),   R(-176.61502916214059L), R(12.507343278686905L),
      R(-0.13857109526572012L), R(9.9843695780195716e-6L), R(1.5056327351493116e-7L)};
  const R pi = R(3.14159265358979323846264338327950288L);

  if (z.real() < R(0.5)) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return pi / (std::sin(pi * z) * tgamma_complex(C(R(1), R(0)) - z));
  }
  z -= C(R(1), R(0));
  C x = c[0];
  for (int i = 1; i < 9; ++i) x += c[i] / (z + C(R(i), R(0)));
  C t = z + C(g + R(0.5), R(0));
  return std::sqrt(R(2) * pi) * std::pow(t, z + C(R(0.5), R(0))) * std::exp(-t) * x;
}

inline std::complex<double> cgamma(std::complex<double> z) { return tgamma_complex<double>(z); }

inline double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace eisreg
