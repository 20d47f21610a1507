#include "doctest.h"
#include "oracles.hpp"

#include "petrie/certificates.hpp"

#include <algorithm>
#include <random>

using namespace petrie;

namespace {

// M_source * H = H * M_target with the oracle's matrices, plus det H != 0.
bool oracle_conjugate(const ConjugacyWitness& w) {
  const RatMatrix ms = to_rational(oracle::petrie(w.source));
  const RatMatrix mt = to_rational(oracle::petrie(w.target));
  if (w.H.rows() != ms.rows() || w.H.cols() != ms.cols()) return false;
  if (det(w.H) == 0) return false;
  return ms * w.H == w.H * mt;
}

void check_witness(const ConjugacyWitness& w) {
  CHECK(w.verified);
  CHECK(verify(w));
  CHECK(oracle_conjugate(w));
  CHECK(similar(oracle::petrie(w.source), oracle::petrie(w.target)));
}

std::vector<int> shuffled(int first, int count, std::mt19937& rng) {
  std::vector<int> v(static_cast<std::size_t>(count));
  std::iota(v.begin(), v.end(), first);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

RightSpec random_right(int k, int n, std::mt19937& rng) {
  return {RangePermutation{k + 1, shuffled(k + 1, n, rng)}, k + 1 + static_cast<int>(rng() % n)};
}

}  // namespace

TEST_CASE("verify_conjugacy basics") {
  const IntMatrix a = petrie_matrix(parse_permutation("(1 3 2 5 4)"));
  const IntMatrix b = petrie_matrix(parse_permutation("(1 2 3 4 5)"));
  const RatMatrix id = RatMatrix::Identity(4, 4);
  CHECK(verify_conjugacy(id, a, a));
  CHECK_FALSE(verify_conjugacy(id, a, b));
  CHECK_FALSE(verify_conjugacy(RatMatrix::Zero(4, 4), a, a));
  CHECK_THROWS_AS(verify_conjugacy(RatMatrix::Identity(3, 3), a, a), DimensionMismatch);
}

TEST_CASE("thm7 smallest instance") {
  const auto inst = build_thm7({});
  CHECK(inst.sigma.degree() == 5);
  check_witness(inst.witness);
  CHECK(inst.witness.source == inst.rho);
  CHECK(inst.witness.target == inst.sigma);
  // h(J_{m+1} + J_{m+2}) = J_{m+1}: rows m+1 and m+2 of H sum to e_{m+1}.
  const RatRowVector sum = inst.witness.H.row(1) + inst.witness.H.row(2);
  CHECK(sum == basis_vector(2, 4));
  CHECK(abs(det(inst.witness.H)) == 1);
  auto back = match_thm7(inst.sigma, inst.rho);
  REQUIRE(back.has_value());
  CHECK(back->m == 1);
}

TEST_CASE("thm7 sweep over m, n, s, t and random fillers") {
  std::mt19937 rng(7);
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (int s = 1; s <= m; ++s) {
        std::vector<int> ts{0};
        if (n >= 1) {
          ts.clear();
          for (int t = m + 5; t <= m + n + 4; ++t) ts.push_back(t);
        }
        for (int t : ts)
          for (int trial = 0; trial < 20; ++trial) {
            Thm7Params p;
            p.m = m;
            p.n = n;
            p.s = s;
            p.t = t;
            p.low = shuffled(1, m, rng);
            if (n >= 1) p.high = shuffled(m + 5, n, rng);
            const auto inst = build_thm7(p);
            CHECK(inst.sigma.degree() == m + n + 4);
            CHECK(oracle_conjugate(inst.witness));
            CHECK(abs(det(inst.witness.H)) == 1);
            CHECK(similar(petrie_matrix(inst.sigma), petrie_matrix(inst.rho)));
            CHECK(match_thm7(inst.sigma, inst.rho).has_value());
          }
      }
}

TEST_CASE("thm7 parameter errors") {
  Thm7Params p;
  p.s = 2;
  CHECK_THROWS_AS(build_thm7(p), PreconditionError);
  p = {};
  p.n = 1;
  p.t = 3;
  CHECK_THROWS_AS(build_thm7(p), PreconditionError);
  p = {};
  p.low = {2};
  CHECK_THROWS_AS(build_thm7(p), PreconditionError);
}

TEST_CASE("sigma_{n,k} steps and chain") {
  for (int k = 5; k <= 8; ++k) {
    for (int n = 3; n <= k - 2; ++n) {
      const auto w = sigma_nk_step(n, k);
      check_witness(w);
    }
    const auto chain = sigma_nk_chain(k);
    check_witness(chain);
    CHECK(chain.source == family_sigma_nk(k - 1, k));
    CHECK(chain.target == family_sigma_nk(3, k));
  }
  CHECK_THROWS(sigma_nk_step(2, 6));
  CHECK_THROWS(sigma_nk_step(5, 6));
}

TEST_CASE("lemma9 basis") {
  for (int k = 3; k <= 6; ++k)
    for (int n = 3; n <= 4; ++n) {
      std::vector<int> v(static_cast<std::size_t>(k + n));
      v[0] = k;
      for (int i = 2; i <= k - 1; ++i) v[i - 1] = i - 1;
      v[k - 1] = k + n;
      v[k] = k - 1;
      for (int i = k + 2; i <= k + n; ++i) v[i - 1] = i - 1;
      const Permutation mu(v);
      const auto r = build_lemma9_basis(mu, k);
      CHECK(r.basis.matrix().rows() == k + n - 1);
      CHECK(abs(r.det) == 1);
      CHECK(r.sum_identity);
      CHECK(r.same_lattice);
    }
  CHECK_THROWS_AS(build_lemma9_basis(Permutation::identity(7), 3), PreconditionError);
}

TEST_CASE("thm10 witnesses") {
  std::mt19937 rng(10);
  for (const auto* text : {"3 1 2", "4 1 2 3", "1 4 2 3"}) {
    const Permutation pi = parse_permutation(text);
    const int j = pi.degree();
    for (int k = j + 1; k <= j + 3; ++k) {
      const auto [sigma, rho] = thm10_pair_from_pi(pi, k);
      CHECK_NOTHROW(check_thm10_clauses(sigma, rho, j));
      for (int n = 1; n <= 3; ++n)
        for (int trial = 0; trial < 5; ++trial) {
          const auto w = build_thm10(sigma, rho, j, random_right(k, n, rng));
          check_witness(w);
          CHECK(abs(det(w.H)) == 1);
        }
    }
  }
}

TEST_CASE("thm10 clause (e) counterexample") {
  for (int k = 5; k <= 7; ++k) {
    std::vector<int> s(static_cast<std::size_t>(k)), r(s.size());
    // 1 -> 3 -> 2 -> 4 -> 5 -> ... -> k -> 1
    s[0] = 3, s[2] = 2, s[1] = 4;
    for (int x = 4; x < k; ++x) s[x - 1] = x + 1;
    s[k - 1] = 1;
    // 1 -> 3 -> 2 -> k -> k-1 -> ... -> 4 -> 1
    r[0] = 3, r[2] = 2, r[1] = k;
    for (int x = 5; x <= k; ++x) r[x - 1] = x - 1;
    r[3] = 1;
    const Permutation sigma(s), rho(r);
    try {
      check_thm10_clauses(sigma, rho, 4);
      FAIL("clauses accepted");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("(e)") != std::string::npos);
    }
    const RightSpec spec{RangePermutation{k + 1, {k + 1}}, k + 1};
    CHECK_THROWS_AS(build_thm10(sigma, rho, 4, spec), PreconditionError);
    // Their size-1 right extensions have determinants of opposite sign.
    // Computed: (-1)^k for the sigma side, (-1)^(k+1) for the rho side.
    const Integer ds = oracle::det(oracle::petrie(right_extend(sigma, spec)));
    const Integer dr = oracle::det(oracle::petrie(right_extend(rho, spec)));
    CHECK(ds == -dr);
    CHECK(ds == (k % 2 == 0 ? 1 : -1));
  }
}

TEST_CASE("thm12") {
  auto w5 = build_thm12(5, std::nullopt);
  check_witness(w5);
  std::mt19937 rng(12);
  for (int k = 5; k <= 8; ++k)
    for (int n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 6; ++trial) check_witness(build_thm12(k, random_right(k, n, rng)));
  for (int k = 6; k <= 8; ++k) {
    const auto [alpha, theta] = family_thm12(k);
    CHECK(oracle::petrie(alpha).trace() != oracle::petrie(theta).trace());
    CHECK_FALSE(similar(petrie_matrix(alpha), petrie_matrix(theta)));
  }
}

TEST_CASE("thm13") {
  check_witness(build_thm13(5, RightSpec{RangePermutation{6, {6}}, 6}));
  std::mt19937 rng(13);
  for (int k = 5; k <= 8; ++k)
    for (int n = 1; n <= 3; ++n)
      for (int trial = 0; trial < 6; ++trial) check_witness(build_thm13(k, random_right(k, n, rng)));
}

TEST_CASE("thm5 lifting") {
  const RatMatrix g = thm5_remark_base_witness();
  const Permutation a = parse_permutation("(13)@4"), b = parse_permutation("(13)(24)");
  CHECK(verify_conjugacy(g, petrie_matrix(b), petrie_matrix(a)));
  CHECK_THROWS_AS(lift_thm5(a, b, g, DirectSumShape{{}, RangePermutation{5, {6, 5}}}), EigenvalueOneError);

  const auto step = sigma_nk_step(3, 5);
  const std::vector<DirectSumShape> shapes{
      {{1}, RangePermutation{7, {}}},
      {{2, 1}, RangePermutation{8, {9, 8}}},
      {{}, RangePermutation{6, {6}}},
  };
  for (const auto& shape : shapes) {
    const auto lifted = lift_thm5(step.source, step.target, step.H, shape);
    check_witness(lifted);
    CHECK(lifted.source == direct_sum(step.source, shape));
    CHECK(lifted.target == direct_sum(step.target, shape));
  }
  CHECK_THROWS_AS(lift_thm5(step.source, step.target, RatMatrix::Identity(4, 4), shapes[0]), PreconditionError);
}

TEST_CASE("two-sided S4 pair") {
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= 2; ++n) {
      TwoSidedSpecStream specs(m, 4, n);
      while (auto spec = specs.next()) {
        const auto w = build_s4_two_sided(*spec);
        check_witness(w);
        CHECK(w.target == two_sided_extend(parse_permutation("(134)"), *spec));
      }
    }
}

TEST_CASE("certificate registry") {
  auto c = find_certificate(parse_permutation("(134)"), parse_permutation("(142)"), Mode::TwoSided, 2, 2);
  REQUIRE(c.has_value());
  CHECK(c->witnesses == 25);
  const auto [a6, t6] = family_thm12(6);
  c = find_certificate(a6, t6, Mode::Right, 0, 3);
  REQUIRE(c.has_value());
  CHECK(c->name == "theorem-12");
  c = find_certificate(family_sigma_nk(3, 6), family_sigma_nk(4, 6), Mode::Left, 3, 0);
  REQUIRE(c.has_value());
  CHECK(c->name.rfind("mirror-of-", 0) == 0);
  CHECK_FALSE(find_certificate(parse_permutation("(1234)"), parse_permutation("(1432)"), Mode::TwoSided, 2, 2));
  CHECK_FALSE(find_certificate(parse_permutation("(34)"), parse_permutation("(12)(34)"), Mode::Right, 0, 2));
}

TEST_CASE("witness JSON round trip") {
  const auto w = build_thm12(6, RightSpec{RangePermutation{7, {8, 7}}, 8});
  const auto j = to_json(w);
  CHECK(j.at("verified") == true);
  const auto back = witness_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.theorem == w.theorem);
  CHECK(back.source == w.source);
  CHECK(back.target == w.target);
  CHECK(back.H == w.H);
  CHECK(verify(back));
}
