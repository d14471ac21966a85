#pragma once

// Thin wrappers over double-exponential quadrature (tanh-sinh on finite
// intervals, exp-sinh on half-lines) for complex-valued integrands.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <limits>

#include "eisreg/types.hpp"

namespace eisreg {

struct QuadResult {
  Complex v{0.0, 0.0};
  double err{0.0};
};

template <class F>
QuadResult de_finite(F&& f, double a, double b, double tol) {
  if (!(a < b)) return {Complex(0, 0), 0.0};
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator(12);
  double error = 0, l1 = 0;
  Complex v;
  try {
    v = integrator.integrate(f, a, b, tol, &error, &l1);
  } catch (const std::exception& e) {
    throw convergence_error(std::string("tanh-sinh quadrature failure: ") + e.what());
  }
  return {v, error * (l1 > 0 ? l1 : 1.0) + tol * 0.5 * (l1 > 0 ? l1 : 1.0)};
}

template <class F>
QuadResult de_upper(F&& f, double a, double tol) {
  static thread_local boost::math::quadrature::exp_sinh<double> integrator(12);
  double error = 0, l1 = 0;
  Complex v;
  try {
    v = integrator.integrate(f, a, std::numeric_limits<double>::infinity(), tol, &error, &l1);
  } catch (const std::exception& e) {
    throw convergence_error(std::string("exp-sinh quadrature failure: ") + e.what());
  }
  return {v, error * (l1 > 0 ? l1 : 1.0) + tol * 0.5 * (l1 > 0 ? l1 : 1.0)};
}

}  // namespace eisreg
