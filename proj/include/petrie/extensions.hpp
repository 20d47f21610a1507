#pragma once

#include "petrie/perm.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace petrie {

/// R(sigma_k, beta, t): beta permutes {k+1..k+n}, k+1 <= t <= k+n.
struct RightSpec {
  RangePermutation filler;
  int slot = 0;

  int base_degree() const { return filler.first - 1; }
  int size() const { return static_cast<int>(filler.images.size()); }
  friend bool operator==(const RightSpec& a, const RightSpec& b) {
    return a.filler.first == b.filler.first && a.filler.images == b.filler.images && a.slot == b.slot;
  }
};

/// L(alpha_m, sigma_k, s): alpha permutes {1..m}, 1 <= s <= m.
struct LeftSpec {
  Permutation filler;
  int slot = 0;

  int size() const { return filler.degree(); }
  friend bool operator==(const LeftSpec&, const LeftSpec&) = default;
};

/// T(alpha_m, sigma_k, beta, s, t); right.filler permutes {m+k+1..m+k+n}.
struct TwoSidedSpec {
  LeftSpec left;
  RightSpec right;

  friend bool operator==(const TwoSidedSpec&, const TwoSidedSpec&) = default;
};

using ExtensionSpec = std::variant<RightSpec, LeftSpec, TwoSidedSpec>;

enum class Mode { Right, Left, TwoSided };

std::string to_string(Mode mode);
/// Accepts "right", "left", "two-sided" (also "two_sided", "twosided").
Mode parse_mode(std::string_view text);

Permutation right_extend(const Permutation& base, const RightSpec& spec);
Permutation left_extend(const Permutation& base, const LeftSpec& spec);
Permutation two_sided_extend(const Permutation& base, const TwoSidedSpec& spec);
Permutation extend(const Permutation& base, const ExtensionSpec& spec);

struct RightDecomposition {
  Permutation base;
  RightSpec spec;
};
struct LeftDecomposition {
  Permutation base;
  LeftSpec spec;
};
struct TwoSidedDecomposition {
  Permutation base;
  TwoSidedSpec spec;
};

/// The unique (base of degree k, spec) with right_extend(base, spec) = tau,
/// or nullopt when tau is not a right extension of a degree-k permutation.
std::optional<RightDecomposition> decompose_right(const Permutation& tau, int k);
/// Same for left extensions with a left block of size m.
std::optional<LeftDecomposition> decompose_left(const Permutation& tau, int m);
/// Two-sided with left block m and base degree k.
std::optional<TwoSidedDecomposition> decompose_two_sided(const Permutation& tau, int m, int k);

/// Spec S' with extend(dual(base), S') = dual(extend(base, S)).
/// A right spec becomes a left spec and vice versa.
ExtensionSpec mirror(const ExtensionSpec& spec, int base_degree);

/// Number of specs of one shape: n!*n (right or left), product for two-sided.
unsigned long long count_specs(int size);

/// Lazily enumerates all right specs of size n over a degree-k base.
/// Fillers run in lexicographic order, slots ascending within a filler.
class RightSpecStream {
 public:
  RightSpecStream(int k, int n);
  std::optional<RightSpec> next();

 private:
  int k_, n_;
  std::vector<int> filler_;
  int slot_;
  bool done_ = false;
};

class LeftSpecStream {
 public:
  explicit LeftSpecStream(int m);
  std::optional<LeftSpec> next();

 private:
  int m_;
  std::vector<int> filler_;
  int slot_ = 1;
  bool done_ = false;
};

/// Left spec outermost, then right spec.
class TwoSidedSpecStream {
 public:
  TwoSidedSpecStream(int m, int k, int n);
  std::optional<TwoSidedSpec> next();

 private:
  int m_, k_, n_;
  LeftSpecStream left_;
  std::optional<LeftSpec> cur_left_;
  RightSpecStream right_;
};

/// One synchronized extension: both bases extended by the same spec.
struct SynchronizedPair {
  ExtensionSpec spec;
  Permutation sigma, rho;
};

/// Synchronized extensions of a pair for a single shape (size n for one-sided,
/// (m, n) for two-sided).
class SynchronizedStream {
 public:
  SynchronizedStream(const Permutation& sigma, const Permutation& rho, Mode mode, int m, int n);
  std::optional<SynchronizedPair> next();

 private:
  Permutation sigma_, rho_;
  Mode mode_;
  std::variant<RightSpecStream, LeftSpecStream, TwoSidedSpecStream> specs_;
};

SynchronizedStream enumerate_synchronized_right(const Permutation& sigma, const Permutation& rho, int n);
SynchronizedStream enumerate_synchronized_left(const Permutation& sigma, const Permutation& rho, int m);
SynchronizedStream enumerate_synchronized_two_sided(const Permutation& sigma, const Permutation& rho, int m, int n);

/// Extension shapes up to a bound, in search order: sizes 1..bound for
/// one-sided; (m, n) ordered by m + n, then m, for two-sided.
struct Shape {
  int m = 0;  // left block, 0 for right
  int n = 0;  // right block, 0 for left
  friend bool operator==(const Shape&, const Shape&) = default;
};
std::vector<Shape> shapes_up_to(Mode mode, int bound_m, int bound_n);

// JSON: {"kind":"right","filler":[...],"slot":t}, fillers as absolute values.
nlohmann::json to_json(const ExtensionSpec& spec);
ExtensionSpec spec_from_json(const nlohmann::json& j);
/// Human-readable, e.g. "right filler [5 6] slot 6".
std::string describe(const ExtensionSpec& spec);

}  // namespace petrie
