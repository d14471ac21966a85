#pragma once

// The double series S^{t,u}_{alpha,beta}(tau) = sum_{m,n >= 1} alpha(m)
// beta(n) m^t n^u q^{mn/N}, its Mellin transforms, and the
// summation-exchange identity
//
//   int_0^inf S^{t1,u1}_{a1,b1}(i/y) S^{t2,u2}_{a2,b2}(iy) y^s dy/y
// = int_0^inf S^{t1+s,t2}_{a1,a2}(iy) S^{u1,u2-s}_{b1,b2}(i/y) y^s dy/y.
//
// Complex exponents on positive integers use the principal branch (real log).

#include <complex>
#include <vector>

#include "eisreg/cyclotomic.hpp"
#include "eisreg/types.hpp"

namespace eisreg {

class ArithmeticFunctionModN {
 public:
  explicit ArithmeticFunctionModN(long long N)
      : N_(N), v_(static_cast<size_t>(N)), z_(static_cast<size_t>(N), Complex(0, 0)) {
    if (N < 1) throw invalid_spec("ArithmeticFunctionModN: N >= 1 required");
  }

  long long modulus() const { return N_; }
  const Cyclotomic& at(long long n) const { return v_[idx(n)]; }
  Complex approx(long long n) const { return z_[idx(n)]; }

  void set(long long n, Cyclotomic c) {
    z_[idx(n)] = c.embed();
    v_[idx(n)] = std::move(c);
  }

  ArithmeticFunctionModN operator+(const ArithmeticFunctionModN& o) const;
  ArithmeticFunctionModN operator-(const ArithmeticFunctionModN& o) const;
  ArithmeticFunctionModN scaled(const Cyclotomic& c) const;
  ArithmeticFunctionModN conj() const;

  double sup_norm() const;
  bool is_zero() const;

 private:
  size_t idx(long long n) const { return static_cast<size_t>(((n % N_) + N_) % N_); }
  long long N_;
  std::vector<Cyclotomic> v_;
  std::vector<Complex> z_;
};

// indicator of n = u mod N
ArithmeticFunctionModN delta_fn(long long u, long long N);
// twisted exponential zeta_N^{-u n}
ArithmeticFunctionModN hat_delta_fn(long long u, long long N);

struct DoubleSeriesSpec {
  Complex t, u;
  ArithmeticFunctionModN alpha, beta;
  long long N;
};

// Truncated sum over mn <= cutoff at tau = iy (or i/y when inverted), with a
// certified exponential tail bound.
ComplexValue S_eval(const DoubleSeriesSpec& spec, double y, bool inverted, long long cutoff);

// Adaptive evaluation at general tau in the upper half-plane; picks its own
// cutoff to meet tol and throws when the tail cannot be closed.
ComplexValue S_eval_tau(const DoubleSeriesSpec& spec, Complex tau, double tol);

// Closed Mellin transform:
//   straight: (2 pi/N)^{-s} Gamma(s)  L(alpha, s-t)  L(beta, s-u)
//   inverted: (2 pi/N)^{ s} Gamma(-s) L(alpha,-s-t)  L(beta,-s-u)
ComplexValue mellin_S_closed(const DoubleSeriesSpec& spec, Complex s, bool inverted);

// L(fn, w) = sum_{n >= 1} fn(n) n^{-w}, by splitting into Hurwitz zetas.
ComplexValue dirichlet_L_mod_fn(const ArithmeticFunctionModN& fn, Complex w);

// certified sup bound for |S(tau)| at Im tau = im
double bound_S(const DoubleSeriesSpec& spec, double im);

// int_0^inf S_inv(i/y) S_str(iy) y^s dy/y, adaptively clamped
ComplexValue S_product_integral(const DoubleSeriesSpec& inv, const DoubleSeriesSpec& str, Complex s,
                                double tol);

// |LHS - RHS| of the summation-exchange identity at parameter s
double rz_swap_check(const DoubleSeriesSpec& first, const DoubleSeriesSpec& second, Complex s,
                     double quad_tol);

}  // namespace eisreg
