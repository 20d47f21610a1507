#include "doctest.h"
#include "oracles.hpp"

#include "petrie/simengine.hpp"

#include <filesystem>
#include <fstream>

using namespace petrie;

namespace {

const CheckOptions kNoCert{false};

int shape_size(const ExtensionSpec& s) {
  return std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TwoSidedSpec>) return x.left.size() + x.right.size();
        else return x.size();
      },
      s);
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("petrie-test-" + name + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("(34) and (12)(34): weakly similar but not similar on the right") {
  const auto a = parse_permutation("(34)"), b = parse_permutation("(12)(34)");
  const auto v = check_pair(a, b, Mode::Right, Strength::Similar, {0, 1});
  REQUIRE(v.refuted());
  const auto& r = *v.refutation;
  CHECK(r.discriminator == Discriminator::InvariantFactors);
  CHECK(r.sigma == parse_permutation("(345)"));
  CHECK(r.rho == parse_permutation("(12)(345)"));
  // Minimal polynomials x^3 - 2x^2 + 1 and (x - 1)(x^3 - 2x^2 + 1).
  const RatPoly target = to_rational(IntPoly({1, 0, -2, 1}));
  CHECK(minpoly(petrie_matrix(r.sigma)) == target);
  CHECK(minpoly(petrie_matrix(r.rho)) == target * to_rational(IntPoly({-1, 1})));
  CHECK(replay(a, b, r));

  const auto w = check_pair(a, b, Mode::Right, Strength::WeaklySimilar, {0, 3});
  CHECK(w.outcome == Verdict::Outcome::ConsistentUpTo);
  REQUIRE(w.log.size() == 3);
  CHECK(w.log[2].checked == 18);
}

TEST_CASE("reflexivity") {
  for (const auto& p : all_permutations(4))
    for (Mode mode : {Mode::Right, Mode::Left, Mode::TwoSided}) {
      CHECK_FALSE(refute(p, p, mode, Strength::Similar, bounds_for(mode, 1)));
      CHECK_FALSE(check_pair(p, p, mode, Strength::Similar, bounds_for(mode, 1)).refuted());
    }
}

TEST_CASE("sigma_{2,5} and sigma_{3,5}") {
  const auto a = family_sigma_nk(2, 5), b = family_sigma_nk(3, 5);
  const auto r = refute(a, b, Mode::Right, Strength::Similar, {0, 3});
  REQUIRE(r.has_value());
  CHECK(shape_size(r->spec) == 1);
  CHECK(replay(a, b, *r));
  // Cheapest first: the determinants already differ; the traces are 1 and 3.
  CHECK(r->discriminator == Discriminator::Determinant);
  CHECK(oracle::petrie(r->sigma).trace() == 1);
  CHECK(oracle::petrie(r->rho).trace() == 3);
}

TEST_CASE("thm12 pair: right consistent, two-sided refuted by determinant") {
  for (int k = 5; k <= 7; ++k) {
    const auto [alpha, theta] = family_thm12(k);
    const auto r = refute(alpha, theta, Mode::TwoSided, Strength::Similar, {1, 1});
    REQUIRE(r.has_value());
    CHECK(r->discriminator == Discriminator::Determinant);
    const Integer ds = oracle::det(oracle::petrie(r->sigma)), dr = oracle::det(oracle::petrie(r->rho));
    CHECK(ds == -dr);
    CHECK(abs(ds) == 1);
    CHECK_FALSE(refute(alpha, theta, Mode::Right, Strength::Similar, {0, 2}));
  }
  const auto [a6, t6] = family_thm12(6);
  const auto v = check_pair(a6, t6, Mode::Right, Strength::Similar, {0, 2});
  CHECK(v.outcome == Verdict::Outcome::Certified);
  CHECK_FALSE(v.petrie_similar);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(check_pair(Permutation::identity(4), Permutation::identity(5), Mode::Right, Strength::Similar, {0, 1}),
                  DimensionMismatch);
  CHECK_THROWS_AS(check_pair(Permutation::identity(2), Permutation::identity(2), Mode::Right, Strength::Similar, {0, 1}),
                  PreconditionError);
  CHECK_THROWS_AS(check_pair(Permutation::identity(4), Permutation::identity(4), Mode::Right, Strength::Similar, {0, 0}),
                  PreconditionError);
  CHECK(parse_discriminator("trace") == Discriminator::Trace);
  CHECK_THROWS_AS(parse_discriminator("rank"), ParseError);
}

TEST_CASE("S4 sweep at bound 2: soundness, symmetry, duality, strength order") {
  const auto all = all_permutations(4);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      const auto& a = all[i];
      const auto& b = all[j];
      for (Mode mode : {Mode::Right, Mode::Left, Mode::TwoSided}) {
        const Bounds bd = mode == Mode::TwoSided ? Bounds{1, 1} : bounds_for(mode, 2);
        const auto sim = refute(a, b, mode, Strength::Similar, bd);
        const auto weak = refute(a, b, mode, Strength::WeaklySimilar, bd);
        const auto back = refute(b, a, mode, Strength::Similar, bd);
        CHECK(sim.has_value() == back.has_value());
        if (sim) CHECK(replay(a, b, *sim));
        if (weak) {
          CHECK(replay(a, b, *weak));
          REQUIRE(sim.has_value());
          CHECK(shape_size(sim->spec) <= shape_size(weak->spec));
        }
        if (mode == Mode::Right) {
          const auto mirrored = refute(dual(a), dual(b), Mode::Left, Strength::Similar, bounds_for(Mode::Left, 2));
          CHECK(sim.has_value() == mirrored.has_value());
          if (sim) {
            Refutation m = *sim;
            m.spec = mirror(sim->spec, 4);
            m.sigma = dual(sim->sigma);
            m.rho = dual(sim->rho);
            CHECK(replay(dual(a), dual(b), m));
          }
        }
      }
    }
}

TEST_CASE("replay rejects doctored witnesses") {
  const auto a = parse_permutation("(34)"), b = parse_permutation("(12)(34)");
  auto r = *refute(a, b, Mode::Right, Strength::Similar, {0, 1});
  auto doctored = r;
  doctored.value_rho = doctored.value_sigma;
  CHECK_FALSE(replay(a, b, doctored));
  CHECK_FALSE(replay(a, a, r));
  const auto back = refutation_from_json(nlohmann::json::parse(to_json(r).dump()));
  CHECK(back.spec == r.spec);
  CHECK(back.discriminator == r.discriminator);
  CHECK(replay(a, b, back));
}

TEST_CASE("propagate_check") {
  const auto a = parse_permutation("(134)"), b = parse_permutation("(142)");
  TwoSidedSpecStream specs(1, 4, 1);
  while (auto spec = specs.next()) {
    const auto verdicts =
        propagate_check(a, b, *spec, {Mode::Right, Mode::Left, Mode::TwoSided}, Strength::Similar, 2);
    REQUIRE(verdicts.size() == 3);
    for (const auto& v : verdicts) CHECK_FALSE(v.refuted());
  }
  const auto c = parse_permutation("(12)@4"), d = parse_permutation("(23)@4");
  RightSpecStream rs(4, 2);
  while (auto spec = rs.next())
    for (const auto& v : propagate_check(c, d, *spec, {Mode::Right}, Strength::Similar, 2)) CHECK_FALSE(v.refuted());
  for (const auto& v : propagate_check(c, c, RightSpec{RangePermutation{5, {5}}, 5}, {Mode::Left}, Strength::Similar, 1))
    CHECK_FALSE(v.refuted());
}

TEST_CASE("S3 classification") {
  const auto two = classify(3, Mode::TwoSided, Strength::Similar, bounds_for(Mode::TwoSided, 3));
  REQUIRE(two.classes.size() == 1);
  CHECK(two.classes[0].members ==
        std::vector<Permutation>{parse_permutation("(123)"), parse_permutation("(132)")});
  const auto right = classify(3, Mode::Right, Strength::Similar, bounds_for(Mode::Right, 3));
  CHECK(right.classes.empty());
  // Every separated pair carries a witness that replays.
  for (const auto& [pair, r] : right.refutations) CHECK(replay(pair.first, pair.second, r));
  CHECK(right.refutations.size() == 15);
}

TEST_CASE("S4 right classification contains the certified classes") {
  const auto rep = classify(4, Mode::Right, Strength::Similar, {0, 2});
  auto has = [&](std::vector<std::string> texts) {
    std::vector<Permutation> want;
    for (const auto& t : texts) want.push_back(parse_permutation(t + "@4"));
    std::sort(want.begin(), want.end());
    for (const auto& c : rep.classes)
      if (c.members == want) return true;
    return false;
  };
  CHECK(has({"(12)", "(23)"}));
  CHECK(has({"(123)", "(132)"}));
  CHECK(has({"(1342)", "(1432)"}));
  for (const auto& c : rep.classes)
    if (c.members.front() == parse_permutation("(1342)") || c.members.back() == parse_permutation("(1432)"))
      CHECK(c.certified);
}

TEST_CASE("classification is independent of the worker count") {
  const auto one = classify(4, Mode::Left, Strength::WeaklySimilar, {2, 0}, {1, true});
  const auto many = classify(4, Mode::Left, Strength::WeaklySimilar, {2, 0}, {4, true});
  CHECK(to_json(one).dump() == to_json(many).dump());
}

TEST_CASE("report JSON and cache") {
  const auto rep = classify(3, Mode::TwoSided, Strength::Similar, {2, 2});
  const auto j = to_json(rep);
  CHECK(j.at("format_version") == kReportFormatVersion);
  CHECK(j.at("classes").size() == 1);
  CHECK(j.at("refutations").contains(pair_key(parse_permutation("1 2 3"), parse_permutation("1 3 2"))));
  CHECK(to_json(report_from_json(j)).dump() == j.dump());

  const auto dir = scratch_dir("cache");
  const auto file = cache_path(dir, 3, Mode::TwoSided, Strength::Similar, {2, 2});
  CHECK_FALSE(load_cached(file).has_value());
  store_cached(file, rep);
  const auto loaded = load_cached(file);
  REQUIRE(loaded.has_value());
  CHECK(to_json(*loaded).dump() == j.dump());

  auto stale = j;
  stale["format_version"] = kReportFormatVersion + 1;
  std::ofstream(file) << stale.dump();
  CHECK_FALSE(load_cached(file).has_value());
  std::ofstream(file) << "{not json";
  CHECK_FALSE(load_cached(file).has_value());
  std::filesystem::remove_all(dir);
  CHECK(cache_path(dir, 4, Mode::Right, Strength::WeaklySimilar, {0, 3}) !=
        cache_path(dir, 4, Mode::Right, Strength::Similar, {0, 3}));
}
