#include "petrie/algebra.hpp"

#include <algorithm>

namespace petrie {

namespace {

void require_same_dims(const auto& a, const auto& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw DimensionMismatch(std::string(what) + ": operands must be square of equal size");
}

using PolyMatrix = std::vector<std::vector<RatPoly>>;

// Smith reduction of a square polynomial matrix over Q[x]. Returns the
// monic diagonal, ordered so that each entry divides the next.
std::vector<RatPoly> smith_diagonal(PolyMatrix m) {
  const std::size_t n = m.size();
  std::vector<RatPoly> diag;
  diag.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // Nonzero entry of least degree in the trailing block becomes the pivot.
      std::size_t pr = n, pc = n;
      int best = -1;
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (m[i][j].is_zero()) continue;
          if (best < 0 || m[i][j].degree() < best) {
            best = m[i][j].degree();
            pr = i;
            pc = j;
          }
        }
      }
      if (best < 0) {
        // Trailing block is zero.
        for (std::size_t r = k; r < n; ++r) diag.emplace_back();
        return diag;
      }
      std::swap(m[k], m[pr]);
      if (pc != k) {
        for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][pc]);
      }

      bool clean = true;
      const RatPoly pivot = m[k][k];
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].is_zero()) continue;
        auto [q, r] = divmod(m[i][k], pivot);
        for (std::size_t j = k; j < n; ++j) {
          if (!m[k][j].is_zero()) m[i][j] -= q * m[k][j];
        }
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j].is_zero()) continue;
        auto [q, r] = divmod(m[k][j], pivot);
        for (std::size_t i = k; i < n; ++i) {
          if (!m[i][k].is_zero()) m[i][j] -= q * m[i][k];
        }
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row into row k and reduce again.
      bool divisible = true;
      for (std::size_t i = k + 1; i < n && divisible; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!m[i][j].is_zero() && !divides(pivot, m[i][j])) {
            for (std::size_t c = k; c < n; ++c) m[k][c] += m[i][c];
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    diag.push_back(monic(m[k][k]));
  }
  return diag;
}

}  // namespace

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  require_same_dims(a, b, "mat_mul");
  return a * b;
}

Gf2Matrix gf2_mul(const Gf2Matrix& a, const Gf2Matrix& b) {
  require_same_dims(a, b, "gf2_mul");
  return a * b;
}

std::vector<RatPoly> invariant_factors(const RatMatrix& a) {
  detail::require_square(a, "invariant_factors");
  const auto n = static_cast<std::size_t>(a.rows());
  PolyMatrix m(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& e = a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      m[i][j] = i == j ? RatPoly{Rational(-e), Rational(1)} : RatPoly::constant(Rational(-e));
    }
  }
  std::vector<RatPoly> diag = smith_diagonal(std::move(m));
  std::vector<RatPoly> out;
  for (auto& d : diag) {
    if (d.degree() >= 1) out.push_back(std::move(d));
  }
  return out;
}

std::vector<RatPoly> invariant_factors(const IntMatrix& a) { return invariant_factors(to_rational(a)); }

RatPoly minpoly(const RatMatrix& a) {
  auto f = invariant_factors(a);
  return f.empty() ? RatPoly::constant(Rational(1)) : f.back();
}

RatPoly minpoly(const IntMatrix& a) { return minpoly(to_rational(a)); }

bool similar(const IntMatrix& a, const IntMatrix& b) {
  require_same_dims(a, b, "similar");
  if (trace(a) != trace(b)) return false;
  if (charpoly(a) != charpoly(b)) return false;
  return invariant_factors(a) == invariant_factors(b);
}

bool is_invertible_q(const IntMatrix& a) { return det(a) != Integer(0); }

RatMatrix solve_rational_rows(const RatMatrix& a, const RatMatrix& b) {
  detail::require_square(a, "solve_rational");
  if (b.cols() != a.rows()) throw DimensionMismatch("solve_rational: right-hand side has wrong length");
  // X * A = B  <=>  A^T * X^T = B^T; eliminate on [A^T | B^T].
  const Eigen::Index n = a.rows();
  const Eigen::Index k = b.rows();
  RatMatrix aug(n, n + k);
  aug.leftCols(n) = a.transpose();
  aug.rightCols(k) = b.transpose();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && aug(p, col) == Rational(0)) ++p;
    if (p == n) throw SingularMatrixError("solve_rational: matrix is singular over Q");
    if (p != col) aug.row(p).swap(aug.row(col));
    const Rational inv = Rational(1) / aug(col, col);
    aug.row(col) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || aug(r, col) == Rational(0)) continue;
      const Rational f = aug(r, col);
      aug.row(r) -= f * aug.row(col);
    }
  }
  return aug.rightCols(k).transpose();
}

RatRowVector solve_rational(const RatMatrix& a, const RatRowVector& b) {
  RatMatrix rhs = b;
  return solve_rational_rows(a, rhs).row(0);
}

RatRowVector solve_rational(const IntMatrix& a, const RatRowVector& b) {
  return solve_rational(to_rational(a), b);
}

RatMatrix inverse(const RatMatrix& a) {
  detail::require_square(a, "inverse");
  // X * A = I
  return solve_rational_rows(a, RatMatrix::Identity(a.rows(), a.cols()));
}

RatMatrix to_rational(const IntMatrix& a) { return a.cast<Rational>(); }

Gf2Matrix to_gf2(const IntMatrix& a) {
  Gf2Matrix g(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      Integer r = a(i, j) % 2;
      g(i, j) = Gf2(r == 0 ? 0 : 1);
    }
  }
  return g;
}

RatPoly to_rational(const IntPoly& p) { return p.cast<Rational>(); }

}  // namespace petrie
