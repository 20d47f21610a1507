#pragma once

#include "petrie/poly.hpp"
#include "petrie/types.hpp"

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace petrie {

namespace detail {
template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols())
    throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", expected square");
}
}  // namespace detail

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact, so the routine works over any integral domain whose Scalar supports
/// exact division of multiples. A zero pivot is replaced by swapping in a
/// lower row with a nonzero entry in the same column.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(a, "det");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  Scalar prev(1);
  bool negate = false;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && m(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      m.row(k).swap(m.row(p));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = Scalar(0);
    }
    prev = m(k, k);
  }
  return negate ? Scalar(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "trace");
  typename Derived::Scalar t(0);
  for (Eigen::Index i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// det(xI - A) by Berkowitz's division-free algorithm. Only ring operations
/// are used, so integer input yields integer coefficients.
template <typename Derived>
Poly<typename Derived::Scalar> charpoly(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  detail::require_square(a, "charpoly");
  const Eigen::Index n = a.rows();
  if (n == 0) return Poly<Scalar>::constant(Scalar(1));

  // Coefficients of the leading principal minor's charpoly, highest first.
  std::vector<Scalar> v{Scalar(1), Scalar(-a(0, 0))};
  std::vector<Scalar> toeplitz;
  for (Eigen::Index r = 1; r < n; ++r) {
    const auto lead = a.topLeftCorner(r, r);
    const RowVector<Scalar> row = a.row(r).head(r);
    Matrix<Scalar> col = a.col(r).head(r);

    // First column of the (r+2) x (r+1) lower-triangular Toeplitz matrix.
    toeplitz.assign(static_cast<std::size_t>(r) + 2, Scalar(0));
    toeplitz[0] = Scalar(1);
    toeplitz[1] = -a(r, r);
    for (Eigen::Index i = 2; i <= r + 1; ++i) {
      toeplitz[i] = -(row * col)(0, 0);
      if (i <= r) col = lead * col;
    }

    std::vector<Scalar> next(static_cast<std::size_t>(r) + 2, Scalar(0));
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t j = 0; j < v.size() && j <= i; ++j) next[i] += toeplitz[i - j] * v[j];
    }
    v = std::move(next);
  }
  return Poly<Scalar>(std::vector<Scalar>(v.rbegin(), v.rend()));
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
Gf2Matrix gf2_mul(const Gf2Matrix& a, const Gf2Matrix& b);

/// Nonunit invariant factors of xI - A over Q[x], each monic and dividing the
/// next. Their product is charpoly(A); the last one is the minimal polynomial.
std::vector<RatPoly> invariant_factors(const RatMatrix& a);
std::vector<RatPoly> invariant_factors(const IntMatrix& a);

RatPoly minpoly(const IntMatrix& a);
RatPoly minpoly(const RatMatrix& a);

/// Similarity over Q: equal invariant factor chains.
bool similar(const IntMatrix& a, const IntMatrix& b);

bool is_invertible_q(const IntMatrix& a);

/// Solves x * A = b for the row vector x. Throws SingularMatrixError when A is
/// not invertible over Q.
RatRowVector solve_rational(const RatMatrix& a, const RatRowVector& b);
RatRowVector solve_rational(const IntMatrix& a, const RatRowVector& b);

/// Solves X * A = B, one row of B at a time.
RatMatrix solve_rational_rows(const RatMatrix& a, const RatMatrix& b);

RatMatrix inverse(const RatMatrix& a);

RatMatrix to_rational(const IntMatrix& a);
Gf2Matrix to_gf2(const IntMatrix& a);
RatPoly to_rational(const IntPoly& p);

}  // namespace petrie
