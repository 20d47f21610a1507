#include "doctest.h"
#include "oracles.hpp"

#include "petrie/algebra.hpp"
#include "petrie/petrie.hpp"

#include <random>

using namespace petrie;

TEST_CASE("sigma_7 matrix and characteristic polynomial") {
  const IntMatrix m = petrie_matrix(parse_permutation("(1 6 5 7 2 3 4)"));
  const int expected[6][6] = {{0, 0, 1, 1, 1, 0}, {0, 0, 1, 0, 0, 0}, {1, 1, 1, 0, 0, 0},
                              {1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 1, 1}, {0, 1, 1, 1, 0, 0}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(m(i, j) == expected[i][j]);
  CHECK(charpoly(m).to_string() == "x^6 - 3x^5 - x^4 + 5x^3 - 3x^2 - x + 1");
}

TEST_CASE("identity has identity matrix") {
  const IntMatrix m = petrie_matrix(Permutation::identity(3));
  CHECK(m == IntMatrix::Identity(2, 2));
  CHECK(charpoly(m).to_string() == "x^2 - 2x + 1");
}

TEST_CASE("matrix agrees with the interval picture") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      const IntMatrix m = petrie_matrix(p);
      CHECK(m == oracle::petrie(p));
      CHECK(is_petrie(m));
    }
}

TEST_CASE("determinant is +-1 up to S6") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      const Integer d = det(petrie_matrix(p));
      CHECK((d == 1 || d == -1));
    }
}

TEST_CASE("GF(2) functoriality on S4 and random step maps") {
  for (const auto& s : all_permutations(4))
    for (const auto& r : all_permutations(4)) {
      StepMap c;
      try {
        c = compose(StepMap(r), StepMap(s));
      } catch (const AdmissibilityError&) {
        continue;
      }
      CHECK(gf2_mul(petrie_matrix_gf2(s), petrie_matrix_gf2(r)) == petrie_matrix_gf2(c));
    }
  std::mt19937 rng(5);
  int tested = 0;
  while (tested < 300) {
    std::vector<int> a(5), b(5);
    for (auto& x : a) x = 1 + static_cast<int>(rng() % 5);
    for (auto& x : b) x = 1 + static_cast<int>(rng() % 5);
    try {
      const StepMap f(a), g(b);
      const StepMap c = compose(g, f);
      CHECK(gf2_mul(petrie_matrix_gf2(f), petrie_matrix_gf2(g)) == petrie_matrix_gf2(c));
      ++tested;
    } catch (const AdmissibilityError&) {
    }
  }
}

TEST_CASE("characteristic polynomial of cyclic permutations has odd coefficients") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& p : all_permutations(n)) {
      if (!is_cyclic(p)) continue;
      const IntPoly c = charpoly(petrie_matrix(p));
      for (const auto& coef : c.coeffs()) CHECK(abs(coef) % 2 == 1);
    }
}

TEST_CASE("dual reversal identity over S6") {
  for (int n = 2; n <= 6; ++n) {
    const IntMatrix r = reversal(n - 1);
    for (const auto& p : all_permutations(n))
      CHECK(petrie_matrix(dual(p)) == mat_mul(mat_mul(r, petrie_matrix(p)), r));
  }
}

TEST_CASE("phi and interval elements") {
  const auto p = parse_permutation("(1 6 5 7 2 3 4)");
  const RatRowVector j1 = basis_vector(1, 6);
  CHECK(phi_apply(p, j1) == interval_element(3, 6, 6));
  CHECK(phi_power(p, j1, 2) == phi_apply(p, phi_apply(p, j1)));
  CHECK(interval_between(6, 3, 6) == interval_element(3, 6, 6));
  CHECK_THROWS(interval_element(3, 3, 6));
  CHECK_THROWS(interval_between(2, 2, 6));
}

TEST_CASE("basis matrices") {
  BasisMatrix b = basis_matrix({basis_vector(1, 2), basis_vector(1, 2) + basis_vector(2, 2)});
  CHECK(b.det() == 1);
  CHECK(b.is_basis());
  CHECK(b.is_integral());
  CHECK(b.as_int() == (IntMatrix(2, 2) << 1, 0, 1, 1).finished());
  BasisMatrix half(RatMatrix::Identity(2, 2) * Rational(1, 2));
  CHECK_FALSE(half.is_integral());
  CHECK_THROWS_AS(half.as_int(), PreconditionError);
  CHECK_FALSE(basis_matrix({basis_vector(1, 2), basis_vector(1, 2)}).is_basis());
}

TEST_CASE("is_petrie") {
  CHECK(is_petrie((IntMatrix(2, 2) << 1, 1, 0, 1).finished()));
  CHECK_FALSE(is_petrie((IntMatrix(1, 3) << 1, 0, 1).finished()));
  CHECK_FALSE(is_petrie((IntMatrix(1, 2) << 2, 0).finished()));
}

TEST_CASE("digraph export") {
  const std::string dot = export_digraph(Permutation::identity(3), "id");
  CHECK(dot.find("J1 -> J1;") != std::string::npos);
  CHECK(dot.find("J2 -> J2;") != std::string::npos);
  CHECK(dot.find("J1 -> J2") == std::string::npos);
}

TEST_CASE("degenerate input") {
  CHECK_THROWS_AS(petrie_matrix(Permutation::identity(1)), AdmissibilityError);
}
