#include "doctest.h"
#include "oracles.hpp"

#include "petrie/extensions.hpp"

using namespace petrie;

namespace {

RightSpec rspec(int first, std::vector<int> images, int slot) { return {RangePermutation{first, std::move(images)}, slot}; }

bool is_right_extension(const Permutation& tau, const Permutation& base) {
  const int k = base.degree(), total = tau.degree();
  for (int i = 1; i <= k - 1; ++i)
    if (tau(i) != base(i)) return false;
  int low = 0;
  for (int j = k; j <= total; ++j) {
    if (tau(j) > k) continue;
    if (j == k || low || tau(j) != base(k)) return false;
    low = j;
  }
  return low != 0;
}

bool is_left_extension(const Permutation& tau, const Permutation& base, int m) {
  const int k = base.degree();
  for (int i = 2; i <= k; ++i)
    if (tau(m + i) != m + base(i)) return false;
  int high = 0;
  for (int j = 1; j <= m + 1; ++j) {
    if (tau(j) < m + 1) continue;
    if (j == m + 1 || high || tau(j) != m + base(1)) return false;
    high = j;
  }
  return high != 0;
}

}  // namespace

TEST_CASE("right extensions from the S4 discussion") {
  const RightSpec spec = rspec(5, {5}, 5);
  CHECK(right_extend(parse_permutation("(34)"), spec) == parse_permutation("(345)"));
  CHECK(right_extend(parse_permutation("(12)(34)"), spec) == parse_permutation("(12)(345)"));
  auto d = decompose_right(parse_permutation("(345)"), 4);
  REQUIRE(d.has_value());
  CHECK(d->base == parse_permutation("(34)"));
  CHECK(d->spec.slot == 5);
}

TEST_CASE("decompose_right rejects non-extensions") {
  CHECK_FALSE(decompose_right(Permutation::identity(5), 4).has_value());
  CHECK_FALSE(decompose_right(parse_permutation("(15)"), 4).has_value());
  // (45) is the right extension of the identity on P4 with t = 5
  auto d = decompose_right(parse_permutation("(45)"), 4);
  REQUIRE(d.has_value());
  CHECK(d->base == Permutation::identity(4));
}

TEST_CASE("left extension by hand") {
  const LeftSpec spec{Permutation::identity(1), 1};
  CHECK(left_extend(parse_permutation("(123)"), spec).images() == std::vector<int>{3, 1, 4, 2});
}

TEST_CASE("malformed specs") {
  const auto base = Permutation::identity(4);
  CHECK_THROWS(right_extend(base, rspec(6, {6}, 6)));
  CHECK_THROWS(right_extend(base, rspec(5, {5, 5}, 5)));
  CHECK_THROWS(right_extend(base, rspec(5, {5, 6}, 7)));
  CHECK_THROWS(left_extend(base, LeftSpec{Permutation::identity(2), 3}));
}

TEST_CASE("constructors satisfy the defining clauses and round-trip over S4") {
  for (const auto& base : all_permutations(4)) {
    for (int n = 1; n <= 3; ++n) {
      RightSpecStream rs(4, n);
      while (auto spec = rs.next()) {
        const auto tau = right_extend(base, *spec);
        CHECK(is_right_extension(tau, base));
        auto d = decompose_right(tau, 4);
        REQUIRE(d.has_value());
        CHECK(d->base == base);
        CHECK(d->spec == *spec);
        CHECK(spec_from_json(to_json(ExtensionSpec(*spec))) == ExtensionSpec(*spec));
      }
      LeftSpecStream ls(n);
      while (auto spec = ls.next()) {
        const auto tau = left_extend(base, *spec);
        CHECK(is_left_extension(tau, base, n));
        auto d = decompose_left(tau, n);
        REQUIRE(d.has_value());
        CHECK(d->base == base);
        CHECK(d->spec == *spec);
      }
    }
    for (int m = 1; m <= 2; ++m)
      for (int n = 1; n <= 2; ++n) {
        TwoSidedSpecStream ts(m, 4, n);
        while (auto spec = ts.next()) {
          const auto tau = two_sided_extend(base, *spec);
          auto d = decompose_two_sided(tau, m, 4);
          REQUIRE(d.has_value());
          CHECK(d->base == base);
          CHECK(d->spec == *spec);
          // Left after right: the right filler shifted down by m.
          RightSpec inner = spec->right;
          inner.filler.first -= m;
          for (int& x : inner.filler.images) x -= m;
          inner.slot -= m;
          CHECK(tau == left_extend(right_extend(base, inner), spec->left));
          CHECK(spec_from_json(to_json(ExtensionSpec(*spec))) == ExtensionSpec(*spec));
        }
      }
  }
}

TEST_CASE("two-sided extension keeps the middle block") {
  const auto sigma5 = parse_permutation("(1 3 2 5 4)");
  TwoSidedSpecStream ts(1, 5, 1);
  while (auto spec = ts.next()) {
    const auto tau = two_sided_extend(sigma5, *spec);
    CHECK(tau.degree() == 7);
    for (int i = 2; i <= 4; ++i) CHECK(tau(1 + i) == 1 + sigma5(i));
  }
}

TEST_CASE("mirror relates left and right through the dual") {
  for (const auto& base : all_permutations(4)) {
    for (int n = 1; n <= 2; ++n) {
      RightSpecStream rs(4, n);
      while (auto spec = rs.next()) {
        const ExtensionSpec s(*spec);
        const ExtensionSpec mirrored = mirror(s, 4);
        CHECK(std::holds_alternative<LeftSpec>(mirrored));
        CHECK(extend(dual(base), mirrored) == dual(extend(base, s)));
        CHECK(mirror(mirrored, 4) == s);
      }
    }
    TwoSidedSpecStream ts(2, 4, 2);
    while (auto spec = ts.next()) {
      const ExtensionSpec s(*spec);
      CHECK(extend(dual(base), mirror(s, 4)) == dual(extend(base, s)));
    }
  }
}

TEST_CASE("enumeration counts") {
  const auto a = parse_permutation("(34)"), b = parse_permutation("(12)(34)");
  auto count = [](SynchronizedStream s) {
    std::size_t c = 0;
    while (s.next()) ++c;
    return c;
  };
  CHECK(count(enumerate_synchronized_right(a, b, 1)) == 1);
  CHECK(count(enumerate_synchronized_right(a, b, 2)) == 4);
  CHECK(count(enumerate_synchronized_right(a, b, 3)) == 18);
  CHECK(count(enumerate_synchronized_left(a, b, 1)) == 1);
  CHECK(count(enumerate_synchronized_left(a, b, 3)) == 18);
  CHECK(count(enumerate_synchronized_two_sided(a, b, 1, 1)) == 1);
  CHECK(count(enumerate_synchronized_two_sided(a, b, 2, 2)) == 16);
  CHECK(count_specs(3) == 18);
  CHECK_THROWS_AS(enumerate_synchronized_right(a, Permutation::identity(5), 1), DimensionMismatch);
}

TEST_CASE("synchronized pairs agree away from the routed slots") {
  const auto all = all_permutations(4);
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 5)
      for (int n = 1; n <= 2; ++n) {
        SynchronizedStream s = enumerate_synchronized_right(all[i], all[j], n);
        while (auto p = s.next()) {
          const auto& spec = std::get<RightSpec>(p->spec);
          CHECK(p->sigma(spec.slot) == all[i](4));
          CHECK(p->rho(spec.slot) == all[j](4));
          for (int x = 4; x <= 4 + n; ++x)
            if (x != spec.slot) CHECK(p->sigma(x) == p->rho(x));
        }
      }
}

TEST_CASE("spec JSON and parsing") {
  const auto spec = spec_from_json(nlohmann::json::parse(R"({"kind":"right","filler":[5],"slot":5})"));
  CHECK(extend(parse_permutation("(34)"), spec) == parse_permutation("(345)"));
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"kind":"up"})")), ParseError);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"kind":"right","filler":[5]})")), ParseError);
  CHECK(parse_mode("two-sided") == Mode::TwoSided);
  CHECK(parse_mode("left") == Mode::Left);
  CHECK_THROWS_AS(parse_mode("sideways"), ParseError);
  CHECK(describe(spec).find("slot 5") != std::string::npos);
}

TEST_CASE("shapes") {
  CHECK(shapes_up_to(Mode::Right, 0, 3).size() == 3);
  const auto two = shapes_up_to(Mode::TwoSided, 2, 2);
  REQUIRE(two.size() == 4);
  CHECK(two.front() == Shape{1, 1});
  CHECK(two.back() == Shape{2, 2});
}
