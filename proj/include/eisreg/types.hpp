#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace eisreg {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Error taxonomy.  The CLI maps these onto exit codes: invalid_spec -> 2,
// pole_error -> 3, convergence_error -> 4.

struct invalid_spec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct pole_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Covers DivergentTail, NonConvergent, TailNotClosed, OutsideConvergence,
// OutsideStrip, QuadratureFailure: a numerical process whose certified tail
// or convergence condition cannot be met.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct precision_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Exact fraction x in Q/Z, reduced, 0 <= num < den.

struct FractionModOne {
  long long num{0};
  long long den{1};

  FractionModOne() = default;

  // p/q reduced mod 1; q != 0.
  static FractionModOne of(long long p, long long q) {
    if (q == 0) throw invalid_spec("FractionModOne: zero denominator");
    if (q < 0) { p = -p; q = -q; }
    p %= q;
    if (p < 0) p += q;
    long long g = std::gcd(p, q);
    if (g > 1) { p /= g; q /= g; }
    FractionModOne f;
    f.num = p;
    f.den = (p == 0) ? 1 : q;
    return f;
  }

  bool is_zero() const { return num == 0; }
  FractionModOne negated() const { return of(-num, den); }  // -x mod 1
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Rational rational() const { return Rational(num, den); }
  bool operator==(const FractionModOne& o) const { return num == o.num && den == o.den; }
};

// ---------------------------------------------------------------------------
// A complex number with an absolute error bound.

struct ComplexValue {
  Complex v{0.0, 0.0};
  double err{0.0};

  ComplexValue() = default;
  ComplexValue(Complex z, double e) : v(z), err(e) {}
  explicit ComplexValue(Complex z) : v(z), err(4.0 * eps() * std::abs(z)) {}
  explicit ComplexValue(double x) : ComplexValue(Complex(x, 0.0)) {}

  static double eps() { return 2.220446049250313e-16; }

  ComplexValue operator+(const ComplexValue& o) const {
    return {v + o.v, err + o.err + eps() * std::abs(v + o.v)};
  }
  ComplexValue operator-(const ComplexValue& o) const {
    return {v - o.v, err + o.err + eps() * std::abs(v - o.v)};
  }
  ComplexValue operator*(const ComplexValue& o) const {
    double e = std::abs(v) * o.err + std::abs(o.v) * err + err * o.err;
    return {v * o.v, e + 2.0 * eps() * std::abs(v * o.v)};
  }
  ComplexValue operator*(Complex c) const { return {v * c, err * std::abs(c) + eps() * std::abs(v * c)}; }
  ComplexValue operator*(double c) const { return *this * Complex(c, 0.0); }
  ComplexValue operator/(const ComplexValue& o) const {
    double ao = std::abs(o.v);
    if (ao == 0.0) throw pole_error("ComplexValue: division by zero");
    double e = (err + std::abs(v / o.v) * o.err) / ao;
    return {v / o.v, e + 2.0 * eps() * std::abs(v / o.v)};
  }
  ComplexValue operator-() const { return {-v, err}; }
};

inline ComplexValue operator*(Complex c, const ComplexValue& a) { return a * c; }
inline ComplexValue operator*(double c, const ComplexValue& a) { return a * c; }

// i^e for any integer e (e may be negative).
inline Complex ipow(long e) {
  switch (((e % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

inline long long llpow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace eisreg
