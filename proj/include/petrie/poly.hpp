#pragma once

#include "petrie/types.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace petrie {

/// Dense univariate polynomial, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last coefficient is
/// nonzero.
template <typename Scalar>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Poly constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }
  static Poly x() { return Poly(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
  /// x^d
  static Poly monomial(int d, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(static_cast<std::size_t>(d) + 1, Scalar(0));
    v.back() = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Scalar(0);
  }
  const Scalar& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Scalar(1); }

  Scalar operator()(const Scalar& at) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  template <typename To>
  Poly<To> cast() const {
    std::vector<To> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(To(c));
    return Poly<To>(std::move(v));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Human-readable form, highest degree first: "x^2 - x - 1".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
      Scalar c = c_[d];
      if (c == Scalar(0)) continue;
      bool negative = c < Scalar(0);
      Scalar mag = negative ? Scalar(-c) : c;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      bool unit = mag == Scalar(1);
      if (d == 0) {
        os << mag;
        continue;
      }
      if (!unit) os << mag;
      os << var;
      if (d > 1) os << "^" << d;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Poly<Scalar>& p) {
  return os << p.to_string();
}

/// Quotient and remainder of a by b. The divisor's leading coefficient must be
/// invertible in Scalar (always true over a field).
template <typename Scalar>
std::pair<Poly<Scalar>, Poly<Scalar>> divmod(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<Scalar>(), a};
  std::vector<Scalar> quo(static_cast<std::size_t>(a.degree() - db) + 1, Scalar(0));
  const Scalar& lead = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    Scalar q = rem[d] / lead;
    if (q == Scalar(0)) continue;
    quo[d - db] = q;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= q * b.coeffs()[i];
  }
  return {Poly<Scalar>(std::move(quo)), Poly<Scalar>(std::move(rem))};
}

/// Scales a nonzero polynomial over a field to leading coefficient 1.
template <typename Scalar>
Poly<Scalar> monic(const Poly<Scalar>& p) {
  if (p.is_zero()) return p;
  return p * (Scalar(1) / p.leading());
}

/// Monic greatest common divisor over a field; gcd(0, 0) = 0.
template <typename Scalar>
Poly<Scalar> gcd(Poly<Scalar> a, Poly<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <typename Scalar>
bool divides(const Poly<Scalar>& d, const Poly<Scalar>& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).second.is_zero();
}

}  // namespace petrie
