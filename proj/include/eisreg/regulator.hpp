#pragma once

// The regulator pipeline: exact fiber integrals of the antisymmetrized
// psi-forms over the torus fibers z_i = i t_i y, the six-term closed form
// A..F of the regularized integral, the cancellation identities among
// B..F, both evaluation paths of the main closed-form theorem, and the
// direct-quadrature cross-check of the pre-exchange integral at Re(s) << 0.

#include <complex>
#include <map>
#include <string>

#include "eisreg/qseries.hpp"
#include "eisreg/types.hpp"

namespace eisreg {

struct RegulatorInput {
  int k1, k2;
  long long N;
  long long a1, b1, a2, b2;  // u1 = (a1, b1), u2 = (a2, b2) mod N

  void validate() const;  // u_i != 0 when k_i = 0; b_i != 0 when k_i = 1
  int k() const { return k1 + k2; }
};

enum class RightForm { psi_k2_0, psi_0_k2 };

// c * (4 pi / N)^p * y^q with c Gaussian-rational
struct FiberMonomial {
  Rational re{0}, im{0};
  int y_pow{0};
  int fourpi_over_N_pow{0};

  bool is_zero() const { return re == 0 && im == 0; }
  bool operator==(const FiberMonomial& o) const {
    if (is_zero() && o.is_zero()) return true;
    return re == o.re && im == o.im && y_pow == o.y_pow &&
           fourpi_over_N_pow == o.fourpi_over_N_pow;
  }
  Complex value(double y, long long N) const;
};

// integral over the unit cube of p1* psi_{a, k1-a} (optionally conjugated)
// wedge p2* psi_{k2,0} or p2* psi_{0,k2}, by permutation expansion
FiberMonomial fiber_integral_psi(int k1, int k2, int a, RightForm rf, bool conj_left);

// same for the Omega_ell combination (and its conjugate)
FiberMonomial fiber_integral_omega(int k1, int k2, int ell, RightForm rf, bool conj_omega);

ComplexValue term_A(const RegulatorInput& in, double tol = 1e-10);
ComplexValue term_B(const RegulatorInput& in);
ComplexValue term_C(const RegulatorInput& in);
ComplexValue term_D(const RegulatorInput& in);
ComplexValue term_E(const RegulatorInput& in);
ComplexValue term_F(const RegulatorInput& in);

// the single-wedge regularized integral: equals the A term
ComplexValue half_regulator_A(const RegulatorInput& in, double tol = 1e-10);

struct RegulatorReport {
  RegulatorInput input;
  ComplexValue A, B, C, D, E, F;
  ComplexValue lhs_via_A;    // half_A(k1,k2,u1,u2) + (-1)^{k1+k2+1} half_A(k2,k1,u2,u1)
  ComplexValue rhs_theorem;  // the closed-form right-hand side
  std::map<std::string, double> cancellation_residuals;
  double both_paths_residual{0};
};

RegulatorReport theorem_both_sides(const RegulatorInput& in, double tol = 1e-10);

// |LHS - RHS| of the pre-exchange identity at Re(s) <= -k-4
double pre_swap_integral_check(const RegulatorInput& in, Complex s, double tol = 1e-8);

}  // namespace eisreg
