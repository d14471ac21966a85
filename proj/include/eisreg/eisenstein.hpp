#pragma once

// The four Eisenstein q-series families and their exact constant terms:
//
//   E^{(k)}_{a,b} = a0 + sum_{m=a(N), n>=1} n^{k-1} z^{bn} q^{mn/N}
//                      + (-1)^k sum_{m=-a(N)} n^{k-1} z^{-bn} q^{mn/N}
//   F^{(k)}_{a,b} = a0 + N^{1-k} ( sum_{n=a(N)} z^{bm} n^{k-1} q^{mn/N}
//                      + (-1)^k sum_{n=-a(N)} z^{-bm} n^{k-1} q^{mn/N} )
//   G^{(k)}_{a,b} = a0 + sum_{m=a, n=b (N)} m^{k-1} q^{mn}
//                      + (-1)^k sum_{m=-a, n=-b (N)} m^{k-1} q^{mn}
//   H^{(k)}_{a,b} = a0 + sum_{m,n} (z^{-am-bn} + (-1)^k z^{am+bn}) n^{k-1} q^{mn}
//
// (z = zeta_N), plus the weight-k Eisenstein-Kronecker lattice sums they
// come from, the Atkin-Lehner numerics relating G and H at level N^2, and
// the real-analytic series used for the Fourier-expansion cross-checks.

#include <array>
#include <complex>

#include "eisreg/qseries.hpp"
#include "eisreg/types.hpp"

namespace eisreg {

enum class Family { E, F, G, H };

struct EisensteinSpec {
  Family family;
  int k;
  long long a, b;
  long long N;

  void validate() const;
  long long level() const { return (family == Family::G || family == Family::H) ? N * N : N; }
  long long series_denom() const { return (family == Family::G || family == Family::H) ? 1 : N; }
};

// q-expansion with exact coefficients, truncated below Tnum in units of
// q^{1/D}; the constant term follows the case tables exactly.
FourierQSeries build_series(const EisensteinSpec& spec, long long Tnum);

// (1 + zeta_N^x) / (1 - zeta_N^x), exact; x != 0 mod N
Cyclotomic half_ratio(long long N, long long x);

// Exact W_{N^2} image of a rational-family series:
//   W(G^{(k)}_{a,b}) = (i^k / N)  H^{(k)}_{a,b}
//   W(H^{(k)}_{a,b}) = (N / i^k)  G^{(k)}_{a,b}
FourierQSeries atkin_lehner_partner(const EisensteinSpec& spec, long long Tnum);

// K_k(k, tau, z, u): truncated lattice sum over |m|,|n| <= cutoff with a
// certified comparison tail; absolutely convergent for k >= 3 only.
ComplexValue kronecker_lattice_value(int k, Complex tau, Complex z, Complex u, int cutoff);

// i^k M^{-k/2} tau^{-k} f(-1/(M tau))
ComplexValue atkin_lehner_numeric(const FourierQSeries& f, long long M, int k, Complex tau);

// | (c tau + d)^{-k} F_{a,b}(g tau) - F_{(a,b)g}(tau) | for g in SL2(Z),
// g = {{g[0], g[1]}, {g[2], g[3]}}
double slash_check_F(int k, long long a, long long b, long long N, const std::array<long, 4>& g,
                     Complex tau);

enum class RAVariant { E_series, F_series };

struct RealAnalyticSpec {
  int a, b;          // exponents a+1, b+1 of the two linear factors
  long long u1, u2;  // residues mod N
  long long N;
  RAVariant variant;
};

// Truncated congruence-lattice sum with ring extrapolation; requires
// a + b >= 1 for absolute convergence.
ComplexValue real_analytic_eval(const RealAnalyticSpec& spec, Complex tau, int cutoff);

// The full Fourier expansion: zeta constants, the (tau - conj tau) block and
// the four S-series blocks.
ComplexValue real_analytic_fourier_eval(const RealAnalyticSpec& spec, Complex tau, double tol);

// truncation that keeps the series tail below ~eps_target at Im(tau) >= im
long long suggested_trunc(long long D, double im, int weight, double eps_target = 1e-13);

}  // namespace eisreg
