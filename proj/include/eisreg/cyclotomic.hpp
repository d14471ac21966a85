#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n), represented as
// Q[x] / Phi_n(x) on the power basis 1, x, ..., x^{phi(n)-1}.  The
// representation is canonical, so equality of vectors is equality in the
// field.  Mixed-conductor operations promote both operands to the lcm.

#include <complex>
#include <string>
#include <vector>

#include "eisreg/types.hpp"

namespace eisreg {

class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, Rational(0)) {}

  static Cyclotomic rational(const Rational& r) {
    Cyclotomic z;
    z.c_[0] = r;
    return z;
  }
  static Cyclotomic integer(long long v) { return rational(Rational(v)); }

  // zeta_n^e, e arbitrary (reduced mod n).
  static Cyclotomic zeta_pow(int n, long long e);

  int conductor() const { return n_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;        // lies in Q (power basis makes this a coefficient test)
  Rational rational_part() const;  // requires is_rational()

  Cyclotomic promoted(int L) const;  // conductor() must divide L

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Rational& r) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }

  Cyclotomic conj() const;     // zeta -> zeta^{-1}
  Cyclotomic inverse() const;  // field inverse, throws pole_error on zero

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::complex<double> embed() const;  // zeta_n -> exp(2 pi i / n)

  std::string str() const;

 private:
  int n_;
  std::vector<Rational> c_;

  explicit Cyclotomic(int n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  static const struct CycloTable& table(int n);
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& z) { return z * r; }

}  // namespace eisreg
