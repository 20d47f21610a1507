#pragma once

#include "petrie/extensions.hpp"
#include "petrie/petrie.hpp"
#include "petrie/types.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace petrie {

/// Raised by lift_thm5 when 1 is an eigenvalue of M_rho, so the bridging
/// equation (phi_rho - Id) x = b has no unique solution.
class EigenvalueOneError : public Error {
 public:
  using Error::Error;
};

/// A conjugacy h o phi_source = phi_target o h. Row i of H holds the
/// coordinates of h(J_i), so the identity reads M_source * H = H * M_target.
struct ConjugacyWitness {
  std::string theorem;
  nlohmann::json params = nlohmann::json::object();
  Permutation source, target;
  RatMatrix H;
  bool verified = false;
};

/// True iff H is invertible and M_rho * H = H * M_sigma.
bool verify_conjugacy(const RatMatrix& H, const IntMatrix& m_sigma, const IntMatrix& m_rho);
/// Recomputes the Petrie matrices of the witness's permutations and checks it.
bool verify(const ConjugacyWitness& w);

/// Throws std::logic_error when a recipe that should always verify does not.
void require_verified(ConjugacyWitness& w);

// thm7 ---------------------------------------------------------------

struct Thm7Params {
  int m = 1;
  int n = 0;
  int s = 1;
  int t = 0;                // m+5 <= t <= m+n+4 when n >= 1; ignored for n = 0
  std::vector<int> low;     // permutation of {1..m}: values at 1..m+1 minus s, in order
  std::vector<int> high;    // permutation of {m+5..m+n+4}: values at m+4..m+n+4 minus t
};

struct Thm7Instance {
  Permutation sigma, rho;
  ConjugacyWitness witness;  // source rho, target sigma
};

/// Empty low/high mean identity order.
Thm7Instance build_thm7(Thm7Params p);
/// Parameters p with build_thm7(p) = (sigma, rho), if any.
std::optional<Thm7Params> match_thm7(const Permutation& sigma, const Permutation& rho);

// thm8 ---------------------------------------------------------------

/// Witness from sigma_{n,k} to sigma_{n+1,k}, 3 <= n <= k-2 (a thm7 pair).
ConjugacyWitness sigma_nk_step(int n, int k);
/// Product of the steps: h o phi_{sigma_{k-1,k}} = phi_{sigma_{3,k}} o h.
ConjugacyWitness sigma_nk_chain(int k);

// lemma9 -----------------------------------------------------------------

struct Lemma9Result {
  BasisMatrix basis;
  Rational det;
  bool sum_identity = false;   // sum J_1..J_{k-1} = phi^{k-2}(J_{k-2})
  bool same_lattice = false;   // S and {phi^{k-2}(J_i)} span the same Z-lattice
};

Lemma9Result build_lemma9_basis(const Permutation& mu, int k);

// thm10 --------------------------------------------------------------

/// Throws PreconditionError naming the first failing clause (a)-(e).
void check_thm10_clauses(const Permutation& sigma, const Permutation& rho, int j);
/// (sigma, mu) of the cor11 construction: a thm10 pair for any
/// k > j = deg(pi).
std::pair<Permutation, Permutation> thm10_pair_from_pi(const Permutation& pi, int k);

enum class Thm10Variant { TailIndexI, TailIndexJ };

/// Witness for the synchronized right extension of (sigma, rho) by spec.
/// source sigma_{k+n}, target rho_{k+n}.
ConjugacyWitness build_thm10(const Permutation& sigma, const Permutation& rho, int j, const RightSpec& spec,
                             Thm10Variant variant = Thm10Variant::TailIndexI);

// thm12, thm13 ------------------------------------------------------

/// spec == nullopt means n = 0 (the base pair itself).
/// source alpha_{k+n}, target theta_{k+n}.
ConjugacyWitness build_thm12(int k, const std::optional<RightSpec>& spec);
/// source beta_{k+n}, target delta_{k+n}; needs n >= 1.
ConjugacyWitness build_thm13(int k, const RightSpec& spec);

// thm5 ---------------------------------------------------------------

/// Direct-sum extension: alpha on {1..m} (values <= m), the base shifted by m,
/// then beta on {m+k+1..m+k+n}. Either side may be empty.
struct DirectSumShape {
  std::vector<int> left;   // permutation of {1..m}
  RangePermutation right;  // permutation of {m+k+1..m+k+n}; images empty for n = 0
};

Permutation direct_sum(const Permutation& base, const DirectSumShape& shape);

/// Given G with M_sigma * G = G * M_rho (source sigma, target rho), builds the
/// witness for the extended pair. Throws EigenvalueOneError when M_rho - I is
/// singular, PreconditionError when G does not verify.
ConjugacyWitness lift_thm5(const Permutation& sigma, const Permutation& rho, const RatMatrix& G,
                           const DirectSumShape& shape);

/// Witness for the base pair (13), (13)(24) on P_4: rows J1, J3, J1+J2+J3.
RatMatrix thm5_remark_base_witness();

// Two-sided S_4 pair {(134), (142)} ----------------------------------------

/// Witness for the synchronized two-sided extension of (134), (142) by spec.
/// h maps the basis S listed for this pair to J_1, J_2, ... in order;
/// source (142)-extension, target (134)-extension.
ConjugacyWitness build_s4_two_sided(const TwoSidedSpec& spec);

// Registry ----------------------------------------------------------------

struct Certificate {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  std::size_t witnesses = 0;  // extension witnesses built and verified
};

/// Tries the known families on (sigma, rho) in the given mode. Succeeds only
/// if the family covers the pair and a verified witness is produced for every
/// synchronized extension of every shape up to the bounds.
std::optional<Certificate> find_certificate(const Permutation& sigma, const Permutation& rho, Mode mode,
                                            int bound_m, int bound_n);

// JSON --------------------------------------------------------------------

/// {schema_version, theorem, params, source, target, H (row-major rational
/// strings), verified}
nlohmann::json to_json(const ConjugacyWitness& w);
ConjugacyWitness witness_from_json(const nlohmann::json& j);

}  // namespace petrie
