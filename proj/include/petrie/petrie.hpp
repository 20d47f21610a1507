#pragma once

#include "petrie/perm.hpp"
#include "petrie/types.hpp"

#include <string>
#include <vector>

namespace petrie {

/// Transition matrix of f on the interval basis J_1..J_{n-1}: row i has ones
/// in columns min(f(i), f(i+1)) .. max(f(i), f(i+1)) - 1.
///
/// Row-vector convention: the coordinates of phi_f(v) are v * M. Hence the
/// matrix of phi_g o phi_f is M_f * M_g.
IntMatrix petrie_matrix(const StepMap& f);
Gf2Matrix petrie_matrix_gf2(const StepMap& f);

/// v * M_f.
RatRowVector phi_apply(const StepMap& f, const RatRowVector& v);
/// phi_f applied `times` times.
RatRowVector phi_power(const StepMap& f, const RatRowVector& v, int times);

/// [j, k] = J_j + ... + J_{k-1} in dimension m; requires 1 <= j < k <= m + 1.
RatRowVector interval_element(int j, int k, int m);
/// [min(a,b), max(a,b)]; requires a != b.
RatRowVector interval_between(int a, int b, int m);
/// Standard basis vector J_i in dimension m.
RatRowVector basis_vector(int i, int m);

/// Rows stacked into a matrix M(V | B).
class BasisMatrix {
 public:
  explicit BasisMatrix(const std::vector<RatRowVector>& rows);
  explicit BasisMatrix(RatMatrix m);

  const RatMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.cols(); }
  Rational det() const;
  bool is_basis() const;
  bool is_integral() const;
  /// Throws PreconditionError unless every entry is an integer.
  IntMatrix as_int() const;

 private:
  RatMatrix m_;
};

BasisMatrix basis_matrix(const std::vector<RatRowVector>& rows);

/// Entries in {0, 1} and the ones of each row consecutive.
bool is_petrie(const IntMatrix& a);

/// Transition digraph in DOT: nodes J1..J{n-1}, edge Ji -> Jj iff M[i][j] = 1.
std::string export_digraph(const StepMap& f, const std::string& name = "petrie");

/// Anti-diagonal reversal matrix of the given size.
IntMatrix reversal(Eigen::Index size);

}  // namespace petrie
