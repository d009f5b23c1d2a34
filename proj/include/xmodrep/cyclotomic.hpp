#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace xmodrep {

using Rational = mpq_class;

namespace detail {

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
/// Built by dividing x^n - 1 by Phi_d for every proper divisor d; cached.
inline const std::vector<long long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1
  std::vector<long long> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    const auto& den = cyclotomic_polynomial(d);  // monic
    const std::size_t dd = den.size() - 1;
    std::vector<long long> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      long long c = num[k];
      quot[k - dd] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

inline int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

inline int lcm_int(int a, int b) { return std::lcm(a, b); }

/// Reduce a polynomial in zeta_n modulo Phi_n and trim trailing zeros.
inline void reduce_mod_phi(std::vector<Rational>& p, int n) {
  const auto& phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > deg;) {
    if (p[k] == 0) continue;
    Rational c = p[k];
    for (std::size_t j = 0; j < deg; ++j)
      if (phi[j] != 0) p[k - deg + j] -= c * static_cast<long>(phi[j]);
    p[k] = 0;
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace detail

/// Exact element of the cyclotomic field Q(zeta_n), stored as the reduced
/// polynomial in zeta_n modulo Phi_n. Values whose only coefficient is the
/// constant term are kept at conductor 1.
class Cyclotomic {
public:
  Cyclotomic() = default;
  Cyclotomic(long v) : conductor_(1) {  // NOLINT(google-explicit-constructor)
    if (v != 0) coeffs_.emplace_back(v);
  }
  Cyclotomic(const Rational& q) : conductor_(1) {  // NOLINT(google-explicit-constructor)
    if (q != 0) {
      coeffs_.push_back(q);
      coeffs_.back().canonicalize();
    }
  }
  Cyclotomic(int v) : Cyclotomic(static_cast<long>(v)) {}  // NOLINT

  static Cyclotomic from_coeffs(int conductor, std::vector<Rational> coeffs) {
    if (conductor < 1) fail("InvalidConductor", "conductor must be positive", {conductor});
    Cyclotomic out;
    out.conductor_ = conductor;
    out.coeffs_ = std::move(coeffs);
    for (auto& c : out.coeffs_) c.canonicalize();
    detail::reduce_mod_phi(out.coeffs_, conductor);
    out.normalize();
    return out;
  }

  /// zeta_n^k for any integer k.
  static Cyclotomic root_of_unity(int n, long k) {
    if (n < 1) fail("InvalidConductor", "root_of_unity needs n >= 1", {n});
    long e = ((k % n) + n) % n;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
    c[static_cast<std::size_t>(e)] = 1;
    return from_coeffs(n, std::move(c));
  }

  int conductor() const noexcept { return conductor_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_rational() const noexcept { return conductor_ == 1; }

  Rational rational_value() const {
    if (!is_rational()) fail("NotRational", "value is not rational: " + to_string());
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
  }

  bool is_integer() const {
    if (!is_rational()) return false;
    return rational_value().get_den() == 1;
  }

  /// Coefficient vector of this value written in conductor m (n must divide m).
  std::vector<Rational> lifted(int m) const {
    if (m % conductor_) fail("InvalidConductor", "lift target must be a multiple", {conductor_, m});
    const int step = m / conductor_;
    std::vector<Rational> p;
    if (!coeffs_.empty()) p.assign((coeffs_.size() - 1) * static_cast<std::size_t>(step) + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * static_cast<std::size_t>(step)] = coeffs_[k];
    detail::reduce_mod_phi(p, m);
    return p;
  }

  Cyclotomic operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = add(*this, o, false); }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = add(*this, o, true); }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, false); }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return add(a, b, true); }
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_rational()) return b.scaled(a.coeffs_[0]);
    if (b.is_rational()) return a.scaled(b.coeffs_[0]);
    const int m = detail::lcm_int(a.conductor_, b.conductor_);
    const auto pa = a.conductor_ == m ? a.coeffs_ : a.lifted(m);
    const auto pb = b.conductor_ == m ? b.coeffs_ : b.lifted(m);
    std::vector<Rational> prod(pa.size() + pb.size() - 1, Rational(0));
    for (std::size_t i = 0; i < pa.size(); ++i) {
      if (pa[i] == 0) continue;
      for (std::size_t j = 0; j < pb.size(); ++j)
        if (pb[j] != 0) prod[i + j] += pa[i] * pb[j];
    }
    Cyclotomic out;
    out.conductor_ = m;
    out.coeffs_ = std::move(prod);
    detail::reduce_mod_phi(out.coeffs_, m);
    out.normalize();
    return out;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    if (a.is_rational() || b.is_rational()) return false;  // rationals are always stored at conductor 1
    const int m = detail::lcm_int(a.conductor_, b.conductor_);
    return a.lifted(m) == b.lifted(m);
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic scaled(const Rational& q) const {
    if (q == 0) return {};
    Rational r = q;
    r.canonicalize();  // GMP arithmetic assumes canonical operands
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
  }

  /// Complex conjugation: zeta -> zeta^{-1}.
  Cyclotomic conj() const {
    if (is_rational()) return *this;
    const int n = conductor_;
    std::vector<Rational> p(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      p[static_cast<std::size_t>((n - static_cast<int>(k)) % n)] += coeffs_[k];
    return from_coeffs(n, std::move(p));
  }

  /// Multiplicative inverse; solves the linear system of multiplication by
  /// this value in the power basis of Q(zeta_n).
  Cyclotomic inverse() const {
    if (is_zero()) fail("DivisionByZero", "inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    const int n = conductor_;
    const auto phi = static_cast<std::size_t>(detail::euler_phi(n));
    // column j = this * zeta^j
    std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1, Rational(0)));
    for (std::size_t j = 0; j < phi; ++j) {
      std::vector<Rational> col(coeffs_.size() + j, Rational(0));
      for (std::size_t k = 0; k < coeffs_.size(); ++k) col[k + j] = coeffs_[k];
      detail::reduce_mod_phi(col, n);
      for (std::size_t r = 0; r < col.size(); ++r) a[r][j] = col[r];
    }
    a[0][phi] = 1;
    for (std::size_t c = 0; c < phi; ++c) {
      std::size_t piv = c;
      while (piv < phi && a[piv][c] == 0) ++piv;
      if (piv == phi) fail("DivisionByZero", "singular multiplication map");
      std::swap(a[piv], a[c]);
      Rational inv = 1 / a[c][c];
      for (std::size_t k = c; k <= phi; ++k) a[c][k] *= inv;
      for (std::size_t r = 0; r < phi; ++r) {
        if (r == c || a[r][c] == 0) continue;
        Rational f = a[r][c];
        for (std::size_t k = c; k <= phi; ++k) a[r][k] -= f * a[c][k];
      }
    }
    std::vector<Rational> sol(phi);
    for (std::size_t r = 0; r < phi; ++r) sol[r] = a[r][phi];
    return from_coeffs(n, std::move(sol));
  }

  std::complex<double> to_complex() const {
    std::complex<double> z{0.0, 0.0};
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      double ang = 2.0 * std::numbers::pi * static_cast<double>(k) / conductor_;
      z += coeffs_[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return z;
  }

  /// Human-readable form using E(n)^k for zeta_n^k, e.g. "-1", "E(3)^2", "1/2+E(4)".
  std::string to_string() const {
    if (is_zero()) return "0";
    if (is_rational()) return coeffs_[0].get_str();
    for (long k = 1; k < conductor_; ++k) {
      const auto root = root_of_unity(conductor_, k);
      const std::string tail = "E(" + std::to_string(conductor_) + ")" + (k > 1 ? "^" + std::to_string(k) : "");
      if (root == *this) return tail;
      if (-root == *this) return "-" + tail;
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Rational& c = coeffs_[k];
      if (c == 0) continue;
      const bool neg = c < 0;
      Rational mag = neg ? Rational(-c) : c;
      if (neg) os << '-';
      else if (!first) os << '+';
      first = false;
      if (k == 0) {
        os << mag.get_str();
        continue;
      }
      if (mag != 1) os << mag.get_str() << '*';
      os << "E(" << conductor_ << ')';
      if (k > 1) os << '^' << k;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.to_string(); }

private:
  static Cyclotomic add(const Cyclotomic& a, const Cyclotomic& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    const int m = detail::lcm_int(a.conductor_, b.conductor_);
    auto pa = a.conductor_ == m ? a.coeffs_ : a.lifted(m);
    const auto pb = b.conductor_ == m ? b.coeffs_ : b.lifted(m);
    if (pa.size() < pb.size()) pa.resize(pb.size(), Rational(0));
    for (std::size_t k = 0; k < pb.size(); ++k) {
      if (subtract) pa[k] -= pb[k];
      else pa[k] += pb[k];
    }
    Cyclotomic out;
    out.conductor_ = m;
    out.coeffs_ = std::move(pa);
    while (!out.coeffs_.empty() && out.coeffs_.back() == 0) out.coeffs_.pop_back();
    out.normalize();
    return out;
  }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() <= 1) conductor_ = 1;
  }

  int conductor_ = 1;
  std::vector<Rational> coeffs_;
};

inline Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }

}  // namespace xmodrep
