#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace petrie {

// Expression templates are off so that the scalars compose with Eigen's own
// expression machinery.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Element of the field with two elements.
class Gf2 {
 public:
  constexpr Gf2() = default;
  constexpr Gf2(int v) : bit_(v & 1) {}  // NOLINT(google-explicit-constructor)

  constexpr bool bit() const { return bit_; }

  friend constexpr Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.bit_ ^ b.bit_); }
  friend constexpr Gf2 operator-(Gf2 a, Gf2 b) { return a + b; }
  friend constexpr Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.bit_ & b.bit_); }
  friend constexpr Gf2 operator/(Gf2 a, Gf2 b) {
    if (!b.bit_) throw std::domain_error("Gf2: division by zero");
    return a;
  }
  constexpr Gf2 operator-() const { return *this; }
  constexpr Gf2& operator+=(Gf2 o) { return *this = *this + o; }
  constexpr Gf2& operator-=(Gf2 o) { return *this = *this - o; }
  constexpr Gf2& operator*=(Gf2 o) { return *this = *this * o; }
  friend constexpr bool operator==(Gf2 a, Gf2 b) { return a.bit_ == b.bit_; }
  friend constexpr bool operator!=(Gf2 a, Gf2 b) { return a.bit_ != b.bit_; }

  friend std::ostream& operator<<(std::ostream& os, Gf2 v) { return os << int(v.bit_); }

 private:
  bool bit_ = false;
};

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using RowVector = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using Gf2Matrix = Matrix<Gf2>;
using IntRowVector = RowVector<Integer>;
using RatRowVector = RowVector<Rational>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Raised when a map assumes the same value at two consecutive points.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// A constructor was called with parameters outside its documented range.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace petrie

namespace Eigen {

template <>
struct NumTraits<petrie::Gf2> : GenericNumTraits<petrie::Gf2> {
  using Real = petrie::Gf2;
  using NonInteger = petrie::Gf2;
  using Literal = petrie::Gf2;
  using Nested = petrie::Gf2;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 0,
    ReadCost = 1,
    AddCost = 1,
    MulCost = 1
  };
  static inline petrie::Gf2 epsilon() { return petrie::Gf2(0); }
  static inline petrie::Gf2 dummy_precision() { return petrie::Gf2(0); }
  static inline petrie::Gf2 highest() { return petrie::Gf2(1); }
  static inline petrie::Gf2 lowest() { return petrie::Gf2(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
