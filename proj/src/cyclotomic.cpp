#include "eisreg/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace eisreg {

namespace {

// Integer polynomials, ascending coefficients, for computing Phi_n.
using IPoly = std::vector<Int>;

IPoly ipoly_div_exact(const IPoly& a, const IPoly& b) {
  // exact division, b monic-up-to-sign with integer quotient guaranteed
  IPoly r = a;
  IPoly q(a.size() - b.size() + 1, Int(0));
  const Int lead = b.back();
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Int coef = r[i + b.size() - 1] / lead;
    q[i] = coef;
    if (coef != 0)
      for (size_t j = 0; j < b.size(); ++j) r[i + j] -= coef * b[j];
  }
  return q;
}

IPoly cyclotomic_polynomial(int n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d
  IPoly num(n + 1, Int(0));
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = ipoly_div_exact(num, cyclotomic_polynomial(d));
  }
  return num;
}

}  // namespace

struct CycloTable {
  int n;
  int phi;
  std::vector<Rational> modulus;               // Phi_n, ascending, monic
  std::vector<std::vector<Rational>> pow_mod;  // x^j mod Phi_n for j in [0, 2n)
  std::vector<std::complex<double>> roots;     // zeta_n^j, j in [0, n)
};

const CycloTable& Cyclotomic::table(int n) {
  static std::map<int, CycloTable> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  CycloTable t;
  t.n = n;
  IPoly phi = cyclotomic_polynomial(n);
  t.phi = static_cast<int>(phi.size()) - 1;
  t.modulus.assign(phi.begin(), phi.end());

  t.pow_mod.resize(2 * n);
  // x^j for j < phi is a basis vector; beyond that reduce with the monic modulus
  for (int j = 0; j < 2 * n; ++j) {
    std::vector<Rational> v(t.phi, Rational(0));
    if (j < t.phi) {
      v[j] = 1;
    } else {
      // x * pow_mod[j-1], reduced
      const auto& prev = t.pow_mod[j - 1];
      std::vector<Rational> shifted(t.phi + 1, Rational(0));
      for (int i = 0; i < t.phi; ++i) shifted[i + 1] = prev[i];
      Rational top = shifted[t.phi];
      for (int i = 0; i < t.phi; ++i) v[i] = shifted[i] - top * t.modulus[i];
    }
    t.pow_mod[j] = std::move(v);
  }

  t.roots.resize(n);
  const long double two_pi = 6.283185307179586476925286766559L;
  for (int j = 0; j < n; ++j) {
    long double a = two_pi * j / n;
    t.roots[j] = {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
  }

  return cache.emplace(n, std::move(t)).first->second;
}

Cyclotomic Cyclotomic::zeta_pow(int n, long long e) {
  if (n < 1) throw invalid_spec("Cyclotomic: conductor must be >= 1");
  e = ((e % n) + n) % n;
  const CycloTable& t = table(n);
  return Cyclotomic(n, t.pow_mod[static_cast<size_t>(e)]);
}

bool Cyclotomic::is_zero() const {
  for (const auto& r : c_)
    if (r != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t j = 1; j < c_.size(); ++j)
    if (c_[j] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_part() const {
  if (!is_rational()) throw invalid_spec("Cyclotomic: value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::promoted(int L) const {
  if (L == n_) return *this;
  if (L % n_ != 0) throw invalid_spec("Cyclotomic: promotion conductor mismatch");
  const CycloTable& t = table(L);
  std::vector<Rational> out(t.phi, Rational(0));
  const long long stride = L / n_;
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& base = t.pow_mod[static_cast<size_t>((j * stride) % L)];
    for (int i = 0; i < t.phi; ++i) out[i] += c_[j] * base[i];
  }
  return Cyclotomic(L, std::move(out));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  int L = static_cast<int>(std::lcm(n_, o.n_));
  Cyclotomic a = promoted(L), b = o.promoted(L);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
  Cyclotomic z = *this;
  for (auto& x : z.c_) x *= r;
  return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  int L = static_cast<int>(std::lcm(n_, o.n_));
  Cyclotomic a = promoted(L), b = o.promoted(L);
  const CycloTable& t = table(L);
  const int phi = t.phi;
  std::vector<Rational> conv(2 * phi - 1, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      conv[i + j] += a.c_[i] * b.c_[j];
    }
  }
  std::vector<Rational> out(phi, Rational(0));
  for (int d = 0; d < 2 * phi - 1; ++d) {
    if (conv[d] == 0) continue;
    if (d < phi) {
      out[d] += conv[d];
    } else {
      const auto& base = t.pow_mod[d];
      for (int i = 0; i < phi; ++i) out[i] += conv[d] * base[i];
    }
  }
  return Cyclotomic(L, std::move(out));
}

Cyclotomic Cyclotomic::conj() const {
  const CycloTable& t = table(n_);
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& base = t.pow_mod[static_cast<size_t>((n_ - static_cast<long long>(j)) % n_)];
    for (int i = 0; i < t.phi; ++i) out[i] += c_[j] * base[i];
  }
  return Cyclotomic(n_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw pole_error("Cyclotomic: inverse of zero");
  // extended Euclid in Q[x]: u * this + v * Phi_n = gcd = const
  using QPoly = std::vector<Rational>;
  auto deg = [](const QPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (p[i] != 0) return i;
    return -1;
  };
  const CycloTable& t = table(n_);
  QPoly r0(t.modulus.begin(), t.modulus.end());
  QPoly r1 = c_;
  QPoly s0{Rational(0)}, s1{Rational(1)};  // coefficients of `this` in r0, r1
  while (deg(r1) > 0) {
    int d0 = deg(r0), d1 = deg(r1);
    QPoly q(d0 - d1 + 1, Rational(0));
    QPoly rem = r0;
    for (int i = d0 - d1; i >= 0; --i) {
      Rational coef = rem[i + d1] / r1[d1];
      q[i] = coef;
      if (coef != 0)
        for (int j = 0; j <= d1; ++j) rem[i + j] -= coef * r1[j];
    }
    // s_next = s0 - q*s1
    QPoly snext(std::max(s0.size(), q.size() + s1.size()), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) snext[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }
  int d = deg(r1);
  if (d != 0) throw pole_error("Cyclotomic: inverse of zero divisor");
  // deg(s1) < deg(Phi_n) by the Euclid invariants, so a plain copy reduces it
  Rational lead = r1[0];
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t i = 0; i < s1.size(); ++i) {
    if (s1[i] == 0) continue;
    if (i >= static_cast<size_t>(t.phi)) throw precision_error("Cyclotomic: inverse degree overflow");
    out[i] = s1[i] / lead;
  }
  return Cyclotomic(n_, std::move(out));
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  int L = static_cast<int>(std::lcm(n_, o.n_));
  Cyclotomic a = promoted(L), b = o.promoted(L);
  return a.c_ == b.c_;
}

std::complex<double> Cyclotomic::embed() const {
  const CycloTable& t = table(n_);
  std::complex<long double> acc(0.0L, 0.0L);
  for (size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    long double w = c_[j].convert_to<long double>();
    const auto& r = t.roots[j % static_cast<size_t>(n_)];
    acc += w * std::complex<long double>(r.real(), r.imag());
  }
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

std::string Cyclotomic::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t j = 0; j < c_.size(); ++j) {
    if (j) os << ", ";
    os << c_[j];
  }
  os << " | z" << n_ << ")";
  return os.str();
}

}  // namespace eisreg
