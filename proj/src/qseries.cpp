#include "eisreg/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace eisreg {

namespace {
const Coeff kZero{};

// w^j by binary powering
Complex cpow_ll(Complex w, long long j) {
  Complex r(1, 0);
  while (j > 0) {
    if (j & 1) r *= w;
    w *= w;
    j >>= 1;
  }
  return r;
}
}  // namespace

void FourierQSeries::add_coeff(long long j, const Coeff& c) {
  if (j < 0) throw invalid_spec("FourierQSeries: negative exponent");
  if (j >= Tnum_) return;  // beyond the known range
  auto it = c_.find(j);
  if (it == c_.end()) {
    if (!c.is_zero()) c_.emplace(j, c);
  } else {
    Coeff s = it->second + c;
    if (s.exact() && s.is_zero())
      c_.erase(it);
    else
      it->second = s;
  }
}

const Coeff& FourierQSeries::coeff(long long j) const {
  auto it = c_.find(j);
  return it == c_.end() ? kZero : it->second;
}

long long FourierQSeries::min_exponent_num() const {
  for (const auto& [j, c] : c_)
    if (!c.is_zero()) return j;
  return Tnum_;
}

FourierQSeries FourierQSeries::rescaled(long long newD) const {
  if (newD % D_ != 0) throw invalid_spec("FourierQSeries: rescale denominator mismatch");
  long long m = newD / D_;
  if (m == 1) return *this;
  FourierQSeries r(newD, Tnum_ * m, level_, weight_);
  r.im_corr_ = im_corr_;
  for (const auto& [j, c] : c_) r.c_.emplace(j * m, c);
  return r;
}

FourierQSeries FourierQSeries::dilated(long long m) const {
  FourierQSeries r(D_, Tnum_ * m, level_, weight_);
  r.im_corr_ = im_corr_;
  for (const auto& [j, c] : c_) r.c_.emplace(j * m, c);
  return r;
}

FourierQSeries FourierQSeries::operator+(const FourierQSeries& o) const {
  long long D = std::lcm(D_, o.D_);
  FourierQSeries a = rescaled(D), b = o.rescaled(D);
  long long T = std::min(a.Tnum_, b.Tnum_);
  FourierQSeries r(D, T, std::max(level_, o.level_), std::max(weight_, o.weight_));
  r.im_corr_ = im_corr_ || o.im_corr_;
  for (const auto& [j, c] : a.c_)
    if (j < T) r.add_coeff(j, c);
  for (const auto& [j, c] : b.c_)
    if (j < T) r.add_coeff(j, c);
  return r;
}

FourierQSeries FourierQSeries::operator-(const FourierQSeries& o) const {
  return *this + o.scaled(Coeff::integer(-1));
}

FourierQSeries FourierQSeries::scaled(const Coeff& s) const {
  FourierQSeries r(D_, Tnum_, level_, weight_);
  r.im_corr_ = im_corr_;
  for (const auto& [j, c] : c_) {
    Coeff p = c * s;
    if (!p.is_zero()) r.c_.emplace(j, p);
  }
  return r;
}

FourierQSeries FourierQSeries::operator*(const FourierQSeries& o) const {
  long long D = std::lcm(D_, o.D_);
  FourierQSeries a = rescaled(D), b = o.rescaled(D);
  // truncation propagation: coefficients of the product are complete below
  // min(Ta + min_exp(b), Tb + min_exp(a))
  long long T = std::min(a.Tnum_ + b.min_exponent_num(), b.Tnum_ + a.min_exponent_num());
  FourierQSeries r(D, T, std::max(level_, o.level_), weight_ + o.weight_);
  for (const auto& [j1, c1] : a.c_) {
    if (c1.is_zero()) continue;
    for (const auto& [j2, c2] : b.c_) {
      long long j = j1 + j2;
      if (j >= T) break;
      r.add_coeff(j, c1 * c2);
    }
  }
  return r;
}

FourierQSeries FourierQSeries::star() const {
  FourierQSeries r = *this;
  r.c_.erase(0);
  return r;
}

FourierQSeries FourierQSeries::to_numeric() const {
  FourierQSeries r(D_, Tnum_, level_, weight_);
  r.im_corr_ = im_corr_;
  for (const auto& [j, c] : c_) r.c_.emplace(j, c.to_numeric());
  return r;
}

bool FourierQSeries::is_exact_zero() const {
  for (const auto& [j, c] : c_) {
    (void)j;
    if (!(c.exact() && c.is_zero())) return false;
  }
  return true;
}

ComplexValue FourierQSeries::eval(Complex tau) const { return SeriesEval(*this).eval_certified(tau); }

void FourierQSeries::dump(std::ostream& os, long long max_lines) const {
  long long count = 0;
  for (const auto& [j, c] : c_) {
    if (max_lines >= 0 && count >= max_lines) break;
    long long g = std::gcd(j, D_);
    long long en = j / (g ? g : 1), ed = D_ / (g ? g : 1);
    if (j == 0) { en = 0; ed = 1; }
    os << en << "/" << ed << "  ";
    if (c.exact() && c.cy().is_rational()) {
      Rational r = c.cy().rational_part();
      os << r.str();
      if (denominator(r) == 1) os << "/1";
    } else {
      Complex z = c.approx();
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g %.17g", z.real(), z.imag());
      os << buf;
    }
    os << "\n";
    ++count;
  }
}

SeriesEval::SeriesEval(const FourierQSeries& f)
    : D_(f.denom()), Tnum_(f.trunc_num()), jmin_(f.min_exponent_num()),
      weight_(std::max(f.weight(), 0)), growth_c_(0.0), l1_(0.0), coeff_err_(0.0) {
  t_.reserve(f.coeffs().size());
  for (const auto& [j, c] : f.coeffs()) {
    if (c.is_zero()) continue;
    Complex z = c.approx();
    t_.emplace_back(j, z);
    double m = std::abs(z);
    l1_ += m;
    coeff_err_ += c.err();
    if (j > 0) growth_c_ = std::max(growth_c_, m / std::pow(double(j + 1), double(weight_)));
  }
  if (t_.empty()) growth_c_ = 0.0;
}

Complex SeriesEval::eval(Complex tau) const {
  const double two_pi = 6.283185307179586;
  Complex w = std::exp(Complex(0, two_pi / double(D_)) * tau);
  Complex acc(0, 0), wj(1, 0);
  long long cur = 0;
  for (const auto& [j, z] : t_) {
    wj *= cpow_ll(w, j - cur);
    cur = j;
    acc += z * wj;
  }
  return acc;
}

double SeriesEval::tail_bound(double im_tau) const {
  // sum_{j >= T} C (j+1)^kappa x^j <= C (T+1)^kappa x^T / (1 - x e^{kappa/(T+1)})
  const double two_pi = 6.283185307179586;
  double x = std::exp(-two_pi * im_tau / double(D_));
  double kappa = double(weight_);
  double ratio = x * std::exp(kappa / double(Tnum_ + 1));
  if (ratio >= 1.0)
    throw convergence_error("FourierQSeries: divergent tail, Im(tau) too small for this truncation");
  return growth_c_ * std::pow(double(Tnum_ + 1), kappa) * std::pow(x, double(Tnum_)) / (1.0 - ratio);
}

ComplexValue SeriesEval::eval_certified(Complex tau) const {
  if (tau.imag() <= 0) throw invalid_spec("FourierQSeries: eval requires Im(tau) > 0");
  Complex v = eval(tau);
  double tail = tail_bound(tau.imag());
  double rnd = ComplexValue::eps() * (l1_ + std::abs(v)) * 4;
  return {v, tail + coeff_err_ + rnd};
}

}  // namespace eisreg
