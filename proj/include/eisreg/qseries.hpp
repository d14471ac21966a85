#pragma once

// Truncated Fourier series in q^{1/D}.  Coefficients are exact elements of
// Q(zeta_N) whenever possible and complex doubles with an error bound
// otherwise; an operation stays exact iff both operands are exact.
// Exponents are stored by their numerator j (the exponent is j/D) and all
// stored exponents satisfy j < Tnum, i.e. the series is known below the
// truncation order Tnum/D.

#include <complex>
#include <iosfwd>
#include <map>
#include <vector>

#include "eisreg/cyclotomic.hpp"
#include "eisreg/types.hpp"

namespace eisreg {

class Coeff {
 public:
  Coeff() : exact_(true) {}
  explicit Coeff(Cyclotomic c) : exact_(true), c_(std::move(c)) { z_ = c_.embed(); }
  Coeff(Complex z, double err) : exact_(false), z_(z), err_(err) {}
  static Coeff rational(const Rational& r) { return Coeff(Cyclotomic::rational(r)); }
  static Coeff integer(long long v) { return rational(Rational(v)); }

  bool exact() const { return exact_; }
  const Cyclotomic& cy() const {
    if (!exact_) throw invalid_spec("Coeff: not exact");
    return c_;
  }
  Complex approx() const { return z_; }
  double err() const { return exact_ ? 0.0 : err_; }
  bool is_zero() const { return exact_ ? c_.is_zero() : (z_ == Complex(0, 0) && err_ == 0); }

  Coeff operator+(const Coeff& o) const {
    if (exact_ && o.exact_) return Coeff(c_ + o.c_);
    return Coeff(z_ + o.z_, err() + o.err() + ComplexValue::eps() * std::abs(z_ + o.z_));
  }
  Coeff operator-(const Coeff& o) const { return *this + (-o); }
  Coeff operator*(const Coeff& o) const {
    if (exact_ && o.exact_) return Coeff(c_ * o.c_);
    double e = std::abs(z_) * o.err() + std::abs(o.z_) * err() + err() * o.err();
    return Coeff(z_ * o.z_, e + 2 * ComplexValue::eps() * std::abs(z_ * o.z_));
  }
  Coeff operator-() const {
    if (exact_) return Coeff(-c_);
    return Coeff(-z_, err_);
  }
  Coeff conj() const {
    if (exact_) return Coeff(c_.conj());
    return Coeff(std::conj(z_), err_);
  }
  Coeff to_numeric() const { return Coeff(z_, err()); }

 private:
  bool exact_;
  Cyclotomic c_;
  Complex z_{0.0, 0.0};
  double err_{0.0};
};

class FourierQSeries {
 public:
  FourierQSeries(long long D, long long Tnum, long long level, int weight)
      : D_(D), Tnum_(Tnum), level_(level), weight_(weight) {
    if (D < 1 || Tnum < 1) throw invalid_spec("FourierQSeries: D >= 1 and T >= 1 required");
  }

  long long denom() const { return D_; }
  long long trunc_num() const { return Tnum_; }
  Rational truncation_order() const { return Rational(Tnum_, D_); }
  long long level() const { return level_; }
  int weight() const { return weight_; }
  bool nonholomorphic_correction() const { return im_corr_; }
  void set_nonholomorphic_correction(bool v) { im_corr_ = v; }

  void add_coeff(long long j, const Coeff& c);
  const Coeff& coeff(long long j) const;  // zero if absent
  Coeff constant_term() const { return coeff(0); }
  const std::map<long long, Coeff>& coeffs() const { return c_; }
  long long min_exponent_num() const;  // smallest j with a nonzero coefficient; Tnum if none

  FourierQSeries operator+(const FourierQSeries& o) const;
  FourierQSeries operator-(const FourierQSeries& o) const;
  FourierQSeries operator*(const FourierQSeries& o) const;
  FourierQSeries operator-() const { return scaled(Coeff::integer(-1)); }
  FourierQSeries scaled(const Coeff& c) const;
  FourierQSeries star() const;  // f - a_0(f)
  FourierQSeries to_numeric() const;
  FourierQSeries rescaled(long long newD) const;  // D | newD, same function
  // reinterpret f(tau) as g(tau) = f(m tau): exponents multiply by m
  FourierQSeries dilated(long long m) const;
  bool is_exact_zero() const;

  // evaluate at tau (Im tau > 0) with a certified geometric tail bound based
  // on the |c_j| <= C (j+1)^kappa growth model, kappa = max(weight, 0)
  ComplexValue eval(Complex tau) const;

  // coefficient lines of the dump format: "e_num/e_den  value"
  void dump(std::ostream& os, long long max_lines = -1) const;

 private:
  long long D_;
  long long Tnum_;
  long long level_;
  int weight_;
  bool im_corr_{false};
  std::map<long long, Coeff> c_;
};

// Flattened evaluator for quadrature loops: build once, evaluate many times.
class SeriesEval {
 public:
  explicit SeriesEval(const FourierQSeries& f);
  Complex eval(Complex tau) const;           // no tail accounting
  ComplexValue eval_certified(Complex tau) const;
  double tail_bound(double im_tau) const;    // certified truncation tail at Im tau
  double coeff_l1() const { return l1_; }
  long long min_exponent_num() const { return jmin_; }
  long long denom() const { return D_; }
  int weight() const { return weight_; }

 private:
  long long D_, Tnum_, jmin_;
  int weight_;
  double growth_c_;  // max |c_j| / (j+1)^kappa
  double l1_;
  std::vector<std::pair<long long, Complex>> t_;
  double coeff_err_;
};

}  // namespace eisreg
