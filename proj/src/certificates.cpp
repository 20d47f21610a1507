#include "petrie/certificates.hpp"

#include "petrie/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace petrie {

namespace {

RatMatrix rmat(const StepMap& f) { return to_rational(petrie_matrix(f)); }

RatRowVector e(int i, int d) { return basis_vector(i, d); }

RatRowVector span_sum(int from, int to, int d) {
  // J_from + ... + J_to; empty when from > to
  RatRowVector v = RatRowVector::Zero(d);
  for (int i = from; i <= to; ++i) v(i - 1) = 1;
  return v;
}

RatRowVector power(const RatMatrix& m, RatRowVector v, int times) {
  for (int i = 0; i < times; ++i) v = v * m;
  return v;
}

RatMatrix stack(const std::vector<RatRowVector>& rows) { return BasisMatrix(rows).matrix(); }

ConjugacyWitness make_witness(std::string theorem, nlohmann::json params, Permutation source, Permutation target,
                              RatMatrix H) {
  ConjugacyWitness w{std::move(theorem), std::move(params), std::move(source), std::move(target), std::move(H), false};
  w.verified = verify(w);
  return w;
}

bool is_perm_of_range(const std::vector<int>& v, int first) {
  RangePermutation r{first, v};
  return v.empty() || r.valid();
}

nlohmann::json spec_json(const std::optional<RightSpec>& spec) {
  return spec ? to_json(ExtensionSpec(*spec)) : nlohmann::json(nullptr);
}

}  // namespace

bool verify_conjugacy(const RatMatrix& H, const IntMatrix& m_sigma, const IntMatrix& m_rho) {
  if (H.rows() != H.cols() || m_sigma.rows() != H.rows() || m_rho.rows() != H.rows() ||
      m_sigma.cols() != H.cols() || m_rho.cols() != H.cols())
    throw DimensionMismatch("verify_conjugacy: matrices must be square of equal size");
  if (det(H) == 0) return false;
  return to_rational(m_rho) * H == H * to_rational(m_sigma);
}

bool verify(const ConjugacyWitness& w) {
  if (w.source.degree() != w.target.degree() || w.H.rows() != w.source.degree() - 1) return false;
  // M_source * H = H * M_target
  return verify_conjugacy(w.H, petrie_matrix(w.target), petrie_matrix(w.source));
}

void require_verified(ConjugacyWitness& w) {
  w.verified = verify(w);
  if (!w.verified)
    throw std::logic_error("internal error: " + w.theorem + " witness failed verification for " +
                           to_string(w.source) + " / " + to_string(w.target));
}

// thm7 ---------------------------------------------------------------

Thm7Instance build_thm7(Thm7Params p) {
  const int m = p.m, n = p.n, s = p.s;
  if (m < 1 || n < 0) throw PreconditionError("thm7 needs m >= 1 and n >= 0");
  if (s < 1 || s > m) throw PreconditionError("thm7 needs 1 <= s <= m");
  if (n >= 1 && (p.t < m + 5 || p.t > m + n + 4))
    throw PreconditionError("thm7 needs m+5 <= t <= m+n+4 when n >= 1");
  if (p.low.empty()) {
    p.low.resize(static_cast<std::size_t>(m));
    std::iota(p.low.begin(), p.low.end(), 1);
  }
  if (p.high.empty() && n >= 1) {
    p.high.resize(static_cast<std::size_t>(n));
    std::iota(p.high.begin(), p.high.end(), m + 5);
  }
  if (static_cast<int>(p.low.size()) != m || !is_perm_of_range(p.low, 1))
    throw PreconditionError("thm7: low filler must permute {1..m}");
  if (static_cast<int>(p.high.size()) != n || !is_perm_of_range(p.high, m + 5))
    throw PreconditionError("thm7: high filler must permute {m+5..m+n+4}");

  const int total = m + n + 4;
  std::vector<int> sv(static_cast<std::size_t>(total), 0);
  sv[m + 1] = m + 3;  // sigma(m+2)
  sv[m + 2] = m + 4;  // sigma(m+3)
  sv[s - 1] = m + 2;
  for (int i = 1, c = 0; i <= m + 1; ++i)
    if (i != s) sv[i - 1] = p.low[c++];
  if (n >= 1) {
    sv[p.t - 1] = m + 1;
    for (int j = m + 4, c = 0; j <= m + n + 4; ++j)
      if (j != p.t) sv[j - 1] = p.high[c++];
  } else {
    sv[m + 3] = m + 1;
  }
  std::vector<int> rv = sv;
  rv[m + 1] = m + 1;
  rv[m + 2] = m + 4;
  rv[s - 1] = m + 3;
  rv[(n >= 1 ? p.t : m + 4) - 1] = m + 2;

  Permutation sigma(std::move(sv)), rho(std::move(rv));
  const int d = total - 1;
  const RatMatrix mr = rmat(rho);
  std::vector<RatRowVector> rows;
  for (int i = 1; i <= m; ++i) rows.push_back(e(i, d));
  rows.push_back(e(m + 1, d) + e(m + 2, d));
  rows.push_back(e(m + 3, d));
  for (int i = m + 3; i <= m + n + 3; ++i) rows.push_back(e(i, d) * mr);
  // h(S_i) = J_i, so S * H = I.
  RatMatrix H = inverse(stack(rows));

  nlohmann::json params = {{"m", m}, {"n", n}, {"s", s}, {"low", p.low}, {"high", p.high}};
  if (n >= 1) params["t"] = p.t;
  ConjugacyWitness w = make_witness("theorem-7", params, rho, sigma, std::move(H));
  require_verified(w);
  return {sigma, rho, std::move(w)};
}

std::optional<Thm7Params> match_thm7(const Permutation& sigma, const Permutation& rho) {
  const int total = sigma.degree();
  if (rho.degree() != total || total < 5) return std::nullopt;
  const Permutation inv = sigma.inverse();
  for (int m = 1; m <= total - 4; ++m) {
    Thm7Params p;
    p.m = m;
    p.n = total - m - 4;
    p.s = inv(m + 2);
    if (p.s > m) continue;
    if (p.n >= 1) p.t = inv(m + 1);
    for (int i = 1; i <= m + 1; ++i)
      if (i != p.s) p.low.push_back(sigma(i));
    if (p.n >= 1)
      for (int j = m + 4; j <= total; ++j)
        if (j != p.t) p.high.push_back(sigma(j));
    try {
      auto inst = build_thm7(p);
      if (inst.sigma == sigma && inst.rho == rho) return p;
    } catch (const PreconditionError&) {
    }
  }
  return std::nullopt;
}

// thm8 ---------------------------------------------------------------

ConjugacyWitness sigma_nk_step(int n, int k) {
  if (n < 3 || n > k - 2) throw PreconditionError("sigma_nk_step needs 3 <= n <= k-2");
  Thm7Params p;
  p.m = n - 2;
  p.n = k - n - 2;
  p.s = 1;
  p.t = p.n >= 1 ? k : 0;
  auto inst = build_thm7(p);
  if (!(inst.sigma == family_sigma_nk(n, k)) || !(inst.rho == family_sigma_nk(n + 1, k)))
    throw std::logic_error("internal error: sigma_{n,k} step does not match thm7 instance");
  inst.witness.theorem = "theorem-8-step";
  inst.witness.params = {{"n", n}, {"k", k}, {"thm7", inst.witness.params}};
  return inst.witness;
}

ConjugacyWitness sigma_nk_chain(int k) {
  if (k < 5) throw PreconditionError("sigma_nk_chain needs k >= 5");
  RatMatrix H = RatMatrix::Identity(k - 1, k - 1);
  for (int n = 3; n <= k - 2; ++n) H = sigma_nk_step(n, k).H * H;
  ConjugacyWitness w = make_witness("theorem-8-chain", {{"k", k}}, family_sigma_nk(k - 1, k),
                                    family_sigma_nk(3, k), std::move(H));
  require_verified(w);
  return w;
}

// lemma9 -----------------------------------------------------------------

Lemma9Result build_lemma9_basis(const Permutation& mu, int k) {
  const int total = mu.degree();
  const int n = total - k;
  if (k < 3 || n < 3) throw PreconditionError("lemma9 needs k >= 3 and n >= 3");
  for (int i = 2; i <= k - 1; ++i)
    if (mu(i) != i - 1) throw PreconditionError("lemma9 needs mu(i) = i-1 for 2 <= i <= k-1");
  if (mu(1) != k || !(k < mu(k))) throw PreconditionError("lemma9 needs mu(1) = k < mu(k)");

  const int d = total - 1;
  const RatMatrix mm = rmat(mu);
  std::vector<RatRowVector> rows;
  rows.push_back(span_sum(1, k - 1, d));
  const RatRowVector top = interval_between(k, mu(k), d);
  for (int i = 0; i <= k - 3; ++i) rows.push_back(power(mm, top, i));
  for (int i = k; i <= k + n - 1; ++i) rows.push_back(power(mm, e(i, d), k - 2));
  BasisMatrix S = basis_matrix(rows);

  std::vector<RatRowVector> trows;
  for (int i = 1; i <= d; ++i) trows.push_back(power(mm, e(i, d), k - 2));
  const RatMatrix T = stack(trows);

  Lemma9Result r{S, S.det()};
  r.sum_identity = power(mm, e(k - 2, d), k - 2) == span_sum(1, k - 1, d);
  try {
    BasisMatrix X(solve_rational_rows(T, S.matrix()));  // X * T = S
    r.same_lattice = X.is_integral() && (X.det() == 1 || X.det() == -1);
  } catch (const SingularMatrixError&) {
    r.same_lattice = false;
  }
  return r;
}

// thm10 --------------------------------------------------------------

void check_thm10_clauses(const Permutation& sigma, const Permutation& rho, int j) {
  const int k = sigma.degree();
  if (rho.degree() != k) throw DimensionMismatch("thm10: degrees differ");
  if (!(k > j && j >= 3)) throw PreconditionError("thm10 needs k > j >= 3");
  int s = 0;
  for (int x = 1; x <= j - 2; ++x)
    if (sigma(x) == j && rho(x) == k) s = x;
  if (!s) throw PreconditionError("thm10 clause (a): no s <= j-2 with sigma(s) = j and rho(s) = k");
  for (int x = 1; x <= j - 1; ++x)
    if (x != s && !(sigma(x) == rho(x) && sigma(x) <= j - 1))
      throw PreconditionError("thm10 clause (b) fails at x = " + std::to_string(x));
  for (int x = j; x <= k - 1; ++x)
    if (sigma(x) != x + 1) throw PreconditionError("thm10 clause (c) fails at x = " + std::to_string(x));
  for (int x = j + 1; x <= k; ++x)
    if (rho(x) != x - 1) throw PreconditionError("thm10 clause (d) fails at x = " + std::to_string(x));
  if (!(sigma(j - 1) == rho(j - 1) && sigma(k) == rho(j) && sigma(j - 1) < sigma(k) && sigma(k) <= j - 1))
    throw PreconditionError("thm10 clause (e): need sigma(j-1) = rho(j-1) < sigma(k) = rho(j) <= j-1");
}

std::pair<Permutation, Permutation> thm10_pair_from_pi(const Permutation& pi, int k) {
  const int j = pi.degree();
  if (j < 3) throw PreconditionError("thm10_pair_from_pi needs deg(pi) >= 3");
  if (!(pi(j - 1) < pi(j) && pi(j) < j)) throw PreconditionError("thm10_pair_from_pi needs pi(j-1) < pi(j) < j");
  if (k <= j) throw PreconditionError("thm10_pair_from_pi needs k > deg(pi)");
  std::vector<int> sv(static_cast<std::size_t>(k)), mv(sv.size());
  for (int x = 1; x <= k; ++x) {
    if (x <= j - 1) sv[x - 1] = pi(x);
    else if (x <= k - 1) sv[x - 1] = x + 1;
    else sv[x - 1] = pi(j);
    if (x <= j) mv[x - 1] = pi(x) != j ? pi(x) : k;
    else mv[x - 1] = x - 1;
  }
  return {Permutation(std::move(sv)), Permutation(std::move(mv))};
}

ConjugacyWitness build_thm10(const Permutation& sigma, const Permutation& rho, int j, const RightSpec& spec,
                             Thm10Variant variant) {
  check_thm10_clauses(sigma, rho, j);
  const int k = sigma.degree();
  const Permutation se = right_extend(sigma, spec);
  const Permutation re = right_extend(rho, spec);
  const int n = spec.size();
  const int d = k + n - 1;
  const RatMatrix mr = rmat(re);
  std::vector<RatRowVector> rows;
  for (int i = 1; i <= j - 2; ++i) rows.push_back(e(i, d));
  rows.push_back(span_sum(j - 1, k - 1, d));
  const RatRowVector top = interval_between(k, re(k), d);
  for (int i = 0; i <= k - j - 1; ++i) rows.push_back(power(mr, top, i));
  for (int i = k; i <= k + n - 1; ++i)
    rows.push_back(power(mr, e(variant == Thm10Variant::TailIndexI ? i : j, d), k - j));
  nlohmann::json params = {{"j", j},
                           {"k", k},
                           {"spec", to_json(ExtensionSpec(spec))},
                           {"tail_index", variant == Thm10Variant::TailIndexI ? "i" : "j"}};
  return make_witness("theorem-10", params, se, re, stack(rows));
}

// thm12, thm13 ------------------------------------------------------

ConjugacyWitness build_thm12(int k, const std::optional<RightSpec>& spec) {
  auto [alpha, theta] = family_thm12(k);
  const Permutation ae = spec ? right_extend(alpha, *spec) : alpha;
  const Permutation te = spec ? right_extend(theta, *spec) : theta;
  const int n = spec ? spec->size() : 0;
  const int d = k + n - 1;
  const RatMatrix mt = rmat(te);
  std::vector<RatRowVector> rows;
  rows.push_back(e(1, d) + e(2, d));
  rows.push_back(e(1, d) + e(2, d) + e(3, d));
  rows.push_back(e(3, d) - e(2, d));
  rows.push_back(span_sum(2, k - 1, d));
  const RatRowVector top = k + 1 <= te.degree() || te(k) != k ? interval_between(k, te(k), d) : RatRowVector();
  for (int i = 0; i <= k - 6; ++i) rows.push_back(power(mt, top, i));
  for (int jj = k; jj <= k + n - 1; ++jj) rows.push_back(power(mt, e(jj, d), k - 5));
  return make_witness("theorem-12", {{"k", k}, {"n", n}, {"spec", spec_json(spec)}}, ae, te, stack(rows));
}

ConjugacyWitness build_thm13(int k, const RightSpec& spec) {
  auto [beta, delta] = family_thm13(k);
  const Permutation be = right_extend(beta, spec);
  const Permutation de = right_extend(delta, spec);
  const int n = spec.size();
  const int d = k + n - 1;
  const RatMatrix md = rmat(de);
  std::vector<RatRowVector> rows;
  rows.push_back(e(1, d));
  rows.push_back(e(1, d) + e(2, d) + e(3, d));
  rows.push_back(span_sum(4, k - 1, d));
  const RatRowVector top = interval_between(k, de(k), d);
  for (int i = 0; i <= k - 5; ++i) rows.push_back(power(md, top, i));
  for (int jj = k; jj <= k + n - 1; ++jj) rows.push_back(power(md, e(jj, d), k - 4));
  return make_witness("theorem-13", {{"k", k}, {"n", n}, {"spec", to_json(ExtensionSpec(spec))}}, be, de,
                      stack(rows));
}

// thm5 ---------------------------------------------------------------

Permutation direct_sum(const Permutation& base, const DirectSumShape& shape) {
  const int k = base.degree();
  const int m = static_cast<int>(shape.left.size());
  const int n = static_cast<int>(shape.right.images.size());
  if (!is_perm_of_range(shape.left, 1)) throw PreconditionError("direct sum: left block must permute {1..m}");
  if (n > 0 && (shape.right.first != m + k + 1 || !shape.right.valid()))
    throw PreconditionError("direct sum: right block must permute {m+k+1..m+k+n}");
  std::vector<int> v = shape.left;
  for (int j = 1; j <= k; ++j) v.push_back(m + base(j));
  v.insert(v.end(), shape.right.images.begin(), shape.right.images.end());
  return Permutation(std::move(v));
}

ConjugacyWitness lift_thm5(const Permutation& sigma, const Permutation& rho, const RatMatrix& G,
                           const DirectSumShape& shape) {
  const int k = sigma.degree();
  if (rho.degree() != k) throw DimensionMismatch("lift_thm5: base degrees differ");
  if (k < 3) throw PreconditionError("lift_thm5 needs k >= 3");
  const int m = static_cast<int>(shape.left.size());
  const int n = static_cast<int>(shape.right.images.size());
  if (m + n < 1) throw PreconditionError("lift_thm5 needs m + n >= 1");
  const IntMatrix ms = petrie_matrix(sigma), mr = petrie_matrix(rho);
  if (G.rows() != k - 1 || G.cols() != k - 1) throw DimensionMismatch("lift_thm5: base witness has wrong size");
  // M_sigma * G = G * M_rho
  if (!verify_conjugacy(G, mr, ms)) throw PreconditionError("lift_thm5: base witness does not verify");

  const RatMatrix shifted = to_rational(mr) - RatMatrix::Identity(k - 1, k - 1);
  if (det(shifted) == 0)
    throw EigenvalueOneError("lift_thm5: 1 is an eigenvalue of the Petrie matrix of " + to_cycle_string(rho) +
                             "; the bridging equation has no unique solution");

  const Permutation se = direct_sum(sigma, shape);
  const Permutation re = direct_sum(rho, shape);
  const int d = m + k + n - 1;
  RatMatrix H = RatMatrix::Identity(d, d);
  H.block(m, m, k - 1, k - 1) = G;
  if (m >= 1) {
    RatRowVector rhs = span_sum(1, sigma(1) - 1, k - 1) * G - span_sum(1, rho(1) - 1, k - 1);
    H.block(m - 1, m, 1, k - 1) += solve_rational(shifted, rhs);
  }
  if (n >= 1) {
    RatRowVector rhs = span_sum(sigma(k), k - 1, k - 1) * G - span_sum(rho(k), k - 1, k - 1);
    H.block(m + k - 1, m, 1, k - 1) += solve_rational(shifted, rhs);
  }
  nlohmann::json params = {{"m", m},
                           {"n", n},
                           {"base_sigma", sigma.images()},
                           {"base_rho", rho.images()},
                           {"left", shape.left},
                           {"right", shape.right.images}};
  ConjugacyWitness w = make_witness("theorem-5-lift", params, se, re, std::move(H));
  require_verified(w);
  return w;
}

RatMatrix thm5_remark_base_witness() {
  return stack({e(1, 3), e(3, 3), span_sum(1, 3, 3)});
}

// Two-sided S_4 pair ------------------------------------------------------

ConjugacyWitness build_s4_two_sided(const TwoSidedSpec& spec) {
  const Permutation sigma = parse_permutation("(134)@4");
  const Permutation rho = parse_permutation("(142)@4");
  const Permutation se = two_sided_extend(sigma, spec);
  const Permutation re = two_sided_extend(rho, spec);
  const int m = spec.left.size();
  const int n = spec.right.size();
  const int d = m + n + 3;
  const RatMatrix mr = rmat(re);
  std::vector<RatRowVector> rows;
  for (int i = 1; i <= m; ++i) rows.push_back(e(i, d));
  rows.push_back(e(m + 1, d) + e(m + 2, d));
  rows.push_back(e(m + 3, d));
  rows.push_back(interval_between(m + 4, re(m + 4), d));
  for (int i = m + 4; i <= m + n + 3; ++i) rows.push_back(e(i, d) * mr);
  RatMatrix H = inverse(stack(rows));
  ConjugacyWitness w = make_witness("s4-two-sided-134-142", {{"spec", to_json(ExtensionSpec(spec))}}, re, se,
                                    std::move(H));
  require_verified(w);
  return w;
}

// Registry ----------------------------------------------------------------

namespace {

using Prover = std::function<std::optional<ConjugacyWitness>(const SynchronizedPair&)>;

struct Family {
  std::string name;
  nlohmann::json params;
  Prover prove;
};

RatMatrix mirror_matrix(const RatMatrix& H) {
  const RatMatrix R = to_rational(reversal(H.rows()));
  return R * H * R;
}

std::optional<ConjugacyWitness> thm7_any(const Permutation& a, const Permutation& b) {
  for (int flip = 0; flip < 2; ++flip) {
    const Permutation& x = flip ? b : a;
    const Permutation& y = flip ? a : b;
    if (auto p = match_thm7(x, y)) return build_thm7(*p).witness;
    if (auto p = match_thm7(dual(x), dual(y))) {
      auto w = build_thm7(*p).witness;
      ConjugacyWitness out{"theorem-7-dual", w.params, dual(w.source), dual(w.target), mirror_matrix(w.H), false};
      require_verified(out);
      return out;
    }
  }
  return std::nullopt;
}

std::vector<Family> families(const Permutation& sigma, const Permutation& rho, Mode mode) {
  std::vector<Family> out;
  const int k = sigma.degree();
  auto unordered_eq = [&](const Permutation& a, const Permutation& b) {
    return (sigma == a && rho == b) || (sigma == b && rho == a);
  };
  if (mode == Mode::Right && k >= 5) {
    auto [alpha, theta] = family_thm12(k);
    if (unordered_eq(alpha, theta))
      out.push_back({"theorem-12", {{"k", k}}, [k](const SynchronizedPair& p) -> std::optional<ConjugacyWitness> {
                       auto w = build_thm12(k, std::get<RightSpec>(p.spec));
                       if (!w.verified) return std::nullopt;
                       return w;
                     }});
    auto [beta, delta] = family_thm13(k);
    if (unordered_eq(beta, delta))
      out.push_back({"theorem-13", {{"k", k}}, [k](const SynchronizedPair& p) -> std::optional<ConjugacyWitness> {
                       auto w = build_thm13(k, std::get<RightSpec>(p.spec));
                       if (!w.verified) return std::nullopt;
                       return w;
                     }});
  }
  if (mode == Mode::Right) {
    for (int flip = 0; flip < 2; ++flip) {
      const Permutation& a = flip ? rho : sigma;
      const Permutation& b = flip ? sigma : rho;
      for (int j = 3; j < k; ++j) {
        try {
          check_thm10_clauses(a, b, j);
        } catch (const PreconditionError&) {
          continue;
        }
        out.push_back({"theorem-10", {{"j", j}, {"k", k}},
                       [a, b, j](const SynchronizedPair& p) -> std::optional<ConjugacyWitness> {
                         auto w = build_thm10(a, b, j, std::get<RightSpec>(p.spec));
                         if (!w.verified) return std::nullopt;
                         return w;
                       }});
      }
    }
  }
  if (mode == Mode::TwoSided && unordered_eq(parse_permutation("(134)@4"), parse_permutation("(142)@4")))
    out.push_back({"s4-two-sided-134-142", nlohmann::json::object(),
                   [](const SynchronizedPair& p) -> std::optional<ConjugacyWitness> {
                     return build_s4_two_sided(std::get<TwoSidedSpec>(p.spec));
                   }});
  out.push_back({"theorem-7", nlohmann::json::object(),
                 [](const SynchronizedPair& p) { return thm7_any(p.sigma, p.rho); }});
  return out;
}

}  // namespace

std::optional<Certificate> find_certificate(const Permutation& sigma, const Permutation& rho, Mode mode,
                                            int bound_m, int bound_n) {
  if (sigma.degree() != rho.degree()) throw DimensionMismatch("find_certificate: degrees differ");
  if (sigma == rho) return Certificate{"identity", nlohmann::json::object(), 0};
  if (mode == Mode::Left) {
    auto c = find_certificate(dual(sigma), dual(rho), Mode::Right, bound_n, bound_m);
    if (!c) return std::nullopt;
    c->name = "mirror-of-" + c->name;
    return c;
  }
  const auto shapes = shapes_up_to(mode, bound_m, bound_n);
  for (const auto& fam : families(sigma, rho, mode)) {
    std::size_t count = 0;
    bool ok = true;
    for (const Shape& sh : shapes) {
      SynchronizedStream stream(sigma, rho, mode, sh.m, sh.n);
      while (auto pair = stream.next()) {
        std::optional<ConjugacyWitness> w;
        try {
          w = fam.prove(*pair);
        } catch (const PreconditionError&) {
          w.reset();
        }
        if (!w || !w->verified) {
          ok = false;
          break;
        }
        ++count;
      }
      if (!ok) break;
    }
    if (ok && count > 0) return Certificate{fam.name, fam.params, count};
  }
  return std::nullopt;
}

// JSON --------------------------------------------------------------------

nlohmann::json to_json(const ConjugacyWitness& w) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < w.H.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < w.H.cols(); ++j) row.push_back(w.H(i, j).str());
    rows.push_back(row);
  }
  return {{"schema_version", 1},
          {"theorem", w.theorem},
          {"params", w.params},
          {"source", w.source.images()},
          {"target", w.target.images()},
          {"H", rows},
          {"verified", w.verified}};
}

ConjugacyWitness witness_from_json(const nlohmann::json& j) {
  try {
    ConjugacyWitness w;
    w.theorem = j.at("theorem").get<std::string>();
    w.params = j.at("params");
    w.source = Permutation(j.at("source").get<std::vector<int>>());
    w.target = Permutation(j.at("target").get<std::vector<int>>());
    const auto& rows = j.at("H");
    const auto d = static_cast<Eigen::Index>(rows.size());
    w.H.resize(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
      const auto& row = rows.at(static_cast<std::size_t>(r));
      if (static_cast<Eigen::Index>(row.size()) != d) throw ParseError("witness H is not square");
      for (Eigen::Index c = 0; c < d; ++c) w.H(r, c) = Rational(row.at(static_cast<std::size_t>(c)).get<std::string>());
    }
    w.verified = j.at("verified").get<bool>();
    return w;
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed witness JSON: ") + ex.what());
  } catch (const PreconditionError& ex) {
    throw ParseError(std::string("malformed witness JSON: ") + ex.what());
  }
}

}  // namespace petrie
