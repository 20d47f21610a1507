#pragma once

#include "petrie/types.hpp"

#include <compare>
#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace petrie {

/// A map from {1..n} into itself that never takes the same value at two
/// consecutive points. Positions and values are 1-based.
class StepMap {
 public:
  StepMap() = default;
  explicit StepMap(std::vector<int> images);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }
  bool is_bijective() const;

  friend bool operator==(const StepMap&, const StepMap&) = default;

 private:
  std::vector<int> images_;
};

/// Bijection of {1..n}, n >= 1, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  /// Builds the permutation of degree n sending chain[0] -> chain[1] -> ... ->
  /// chain.back() -> chain[0]; points not on the chain are fixed.
  static Permutation from_cycle(std::span<const int> chain, int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& images() const { return images_; }

  operator StepMap() const { return StepMap(images_); }  // NOLINT(google-explicit-constructor)

  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Accepts an image list ("3 1 4 5 2", commas and brackets allowed) or cycle
/// notation ("(1 3 4)(2 5)", "(134)", "()@3"). In cycle notation the degree
/// is the largest mentioned point unless an "@n" suffix says otherwise. A
/// cycle written without separators is read one digit per point.
Permutation parse_permutation(std::string_view text);

/// Canonical form: space-separated image list.
std::string to_string(const Permutation& p);
/// Cycle notation with fixed points omitted; "@n" is appended whenever the
/// largest moved point is below the degree.
std::string to_cycle_string(const Permutation& p);

/// outer o inner, pointwise. Throws DimensionMismatch on unequal degrees and
/// AdmissibilityError if the result repeats a value at consecutive points.
StepMap compose(const StepMap& outer, const StepMap& inner);
Permutation compose(const Permutation& outer, const Permutation& inner);

/// p*(i) = n + 1 - p(n + 1 - i)
Permutation dual(const Permutation& p);

bool is_cyclic(const Permutation& p);

/// All permutations of degree n in lexicographic image-list order.
std::vector<Permutation> all_permutations(int n);

/// Permutation of the contiguous range {first, ..., first + size - 1};
/// images are absolute points of that range.
struct RangePermutation {
  int first = 1;
  std::vector<int> images;

  int last() const { return first + static_cast<int>(images.size()) - 1; }
  int operator()(int x) const { return images[static_cast<std::size_t>(x - first)]; }
  bool valid() const;
};

// Named families.

/// sigma_{n,k} for k >= 4 and 2 <= n <= k. n = 2 is the rotation i -> i+1,
/// n = k the rotation i -> i-1.
Permutation family_sigma_nk(int n, int k);

/// (alpha_k, theta_k), k >= 5:
///   alpha: 1 -> 3 -> 2 -> 5 -> 6 -> ... -> k -> 4 -> 1
///   theta: 1 -> k -> k-1 -> ... -> 5 -> 2 -> 3 -> 4 -> 1
std::pair<Permutation, Permutation> family_thm12(int k);

/// (beta_k, delta_k), k >= 5:
///   beta:  1 -> 3 -> 2 -> 4 -> 5 -> ... -> k -> 1
///   delta: 1 -> k -> k-1 -> ... -> 5 -> 3 -> 2 -> 4 -> 1
std::pair<Permutation, Permutation> family_thm13(int k);

struct Cor11Family {
  Permutation sigma, rho, mu, nu;
};

/// The four right extensions built from pi on P_j with
/// pi(j-1) < pi(j) < j, for k >= j + 2.
Cor11Family family_cor11(const Permutation& pi, int k);

struct Thm4Family {
  Permutation sigma_xi, sigma_eta, rho_eta;
};

/// Splices sigma_l / rho_l (on P_l) with xi / eta (on {l-1..k}).
/// Requires l >= 4, k >= l + 1, sigma_l(l) = l-1, sigma_l(l-1) < l-1,
/// xi(l) = l-1, eta(l-1) = l and eta(l) > l.
Thm4Family family_thm4_combine(const Permutation& sigma_l, const Permutation& rho_l,
                               const RangePermutation& xi, const RangePermutation& eta, int k);

}  // namespace petrie
