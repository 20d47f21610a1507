#include "petrie/petrie.hpp"

#include "petrie/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace petrie {

IntMatrix petrie_matrix(const StepMap& f) {
  const int n = f.degree();
  if (n < 2) throw AdmissibilityError("Petrie matrix needs degree >= 2");
  IntMatrix m = IntMatrix::Zero(n - 1, n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    const int lo = std::min(f(i), f(i + 1));
    const int hi = std::max(f(i), f(i + 1));
    for (int j = lo; j < hi; ++j) m(i - 1, j - 1) = 1;
  }
  return m;
}

Gf2Matrix petrie_matrix_gf2(const StepMap& f) { return to_gf2(petrie_matrix(f)); }

RatRowVector phi_apply(const StepMap& f, const RatRowVector& v) {
  if (v.cols() != f.degree() - 1)
    throw DimensionMismatch("phi_apply: vector has dim " + std::to_string(v.cols()) + ", map needs " +
                            std::to_string(f.degree() - 1));
  return v * to_rational(petrie_matrix(f));
}

RatRowVector phi_power(const StepMap& f, const RatRowVector& v, int times) {
  if (times < 0) throw PreconditionError("phi_power: negative exponent");
  RatMatrix m = to_rational(petrie_matrix(f));
  if (v.cols() != m.rows()) throw DimensionMismatch("phi_power: dimension mismatch");
  RatRowVector out = v;
  for (int i = 0; i < times; ++i) out = out * m;
  return out;
}

RatRowVector interval_element(int j, int k, int m) {
  if (m < 1 || j < 1 || j >= k || k > m + 1)
    throw PreconditionError("interval_element: need 1 <= j < k <= m+1 (got j=" + std::to_string(j) +
                            ", k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
  RatRowVector v = RatRowVector::Zero(m);
  for (int i = j; i < k; ++i) v(i - 1) = 1;
  return v;
}

RatRowVector interval_between(int a, int b, int m) {
  if (a == b) throw PreconditionError("interval_between: endpoints coincide");
  return interval_element(std::min(a, b), std::max(a, b), m);
}

RatRowVector basis_vector(int i, int m) { return interval_element(i, i + 1, m); }

BasisMatrix::BasisMatrix(const std::vector<RatRowVector>& rows) {
  if (rows.empty()) throw DimensionMismatch("basis_matrix: no rows");
  const Eigen::Index d = rows.front().cols();
  m_.resize(static_cast<Eigen::Index>(rows.size()), d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].cols() != d) throw DimensionMismatch("basis_matrix: rows of unequal dimension");
    m_.row(static_cast<Eigen::Index>(i)) = rows[i];
  }
}

BasisMatrix::BasisMatrix(RatMatrix m) : m_(std::move(m)) {}

Rational BasisMatrix::det() const {
  if (m_.rows() != m_.cols())
    throw DimensionMismatch("basis matrix has " + std::to_string(m_.rows()) + " rows in dimension " +
                            std::to_string(m_.cols()));
  return petrie::det(m_);
}

bool BasisMatrix::is_basis() const { return m_.rows() == m_.cols() && det() != 0; }

bool BasisMatrix::is_integral() const {
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
      if (denominator(m_(i, j)) != 1) return false;
  return true;
}

IntMatrix BasisMatrix::as_int() const {
  if (!is_integral()) throw PreconditionError("basis matrix has non-integer entries");
  IntMatrix out(m_.rows(), m_.cols());
  for (Eigen::Index i = 0; i < m_.rows(); ++i)
    for (Eigen::Index j = 0; j < m_.cols(); ++j) out(i, j) = Integer(numerator(m_(i, j)));
  return out;
}

BasisMatrix basis_matrix(const std::vector<RatRowVector>& rows) {
  BasisMatrix b(rows);
  if (b.matrix().rows() != b.matrix().cols())
    throw DimensionMismatch("basis_matrix: " + std::to_string(rows.size()) + " vectors in dimension " +
                            std::to_string(b.dim()));
  return b;
}

bool is_petrie(const IntMatrix& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    int runs = 0;
    bool in_run = false;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Integer& e = a(i, j);
      if (e != 0 && e != 1) return false;
      if (e == 1 && !in_run) ++runs;
      in_run = e == 1;
    }
    if (runs > 1) return false;
  }
  return true;
}

std::string export_digraph(const StepMap& f, const std::string& name) {
  const IntMatrix m = petrie_matrix(f);
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) os << "  J" << i + 1 << ";\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) == 1) os << "  J" << i + 1 << " -> J" << j + 1 << ";\n";
  os << "}\n";
  return os.str();
}

IntMatrix reversal(Eigen::Index size) {
  IntMatrix r = IntMatrix::Zero(size, size);
  for (Eigen::Index i = 0; i < size; ++i) r(i, size - 1 - i) = 1;
  return r;
}

}  // namespace petrie
