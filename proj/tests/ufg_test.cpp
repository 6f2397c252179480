#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace testsupport;

TEST_CASE("nontriviality and union-freeness on the running example") {
  Example ex;
  std::vector<Poset> p12{ex.p1, ex.p2};
  std::vector<Poset> p23{ex.p2, ex.p3};
  std::vector<Poset> just1{ex.p1};
  std::vector<Poset> all{ex.p1, ex.p2, ex.p3};

  CHECK(is_nontrivial(p12));
  CHECK(is_nontrivial(p23));
  CHECK_FALSE(is_nontrivial(just1));

  CHECK(is_union_free(p23));
  CHECK_FALSE(is_union_free(all));  // {p1,p3} spans the whole interval already

  CHECK(is_ufg_set(p12));
  CHECK_FALSE(is_ufg_set(all));
}

TEST_CASE("family of the running example") {
  Example ex;
  auto family = enumerate_ufg(ex.sample());
  REQUIRE(family.sets.size() == 3);
  CHECK(family.sets[0] == std::vector<std::size_t>{0, 1});
  CHECK(family.sets[1] == std::vector<std::size_t>{0, 2});
  CHECK(family.sets[2] == std::vector<std::size_t>{1, 2});
  for (const auto& w : family.weights) CHECK(w == Rational(1, 9));
  REQUIRE(family.normalizer.has_value());
  CHECK(*family.normalizer == Rational(3));
  CHECK_FALSE(family.truncated);
}

TEST_CASE("single unique poset yields an empty family") {
  Example ex;
  auto sample = PosetSample::from_observations({ex.p1}, {"f1"});
  auto family = enumerate_ufg(sample);
  CHECK(family.sets.empty());
  CHECK_FALSE(family.normalizer.has_value());

  auto duplicated = PosetSample::from_observations({ex.p1, ex.p1, ex.p1}, {"f1", "f2", "f3"});
  auto family3 = enumerate_ufg(duplicated);
  CHECK(family3.sets.empty());
  CHECK_FALSE(family3.normalizer.has_value());
}

TEST_CASE("duplicated observations reweight the family without changing it") {
  Example ex;
  auto sample = PosetSample::from_observations({ex.p1, ex.p1, ex.p2}, {"f1", "f2", "f3"});
  auto family = enumerate_ufg(sample);
  REQUIRE(family.sets.size() == 1);
  CHECK(family.sets[0] == std::vector<std::size_t>{0, 1});
  CHECK(family.weights[0] == Rational(2, 9));
  REQUIRE(family.normalizer.has_value());
  CHECK(*family.normalizer == Rational(9, 2));

  // Same support, uniform weights: identical sets, different weights.
  auto uniform = PosetSample::from_observations({ex.p1, ex.p2}, {"f1", "f2"});
  auto base = enumerate_ufg(uniform);
  CHECK(base.sets == family.sets);
  CHECK(base.weights[0] == Rational(1, 4));
}

TEST_CASE("max size truncates the family and flags it") {
  std::mt19937_64 rng(1001);
  for (int iter = 0; iter < 10; ++iter) {
    auto sample = random_small_sample(rng);
    auto full = enumerate_ufg(sample);
    auto capped = enumerate_ufg(sample, 2);
    CHECK(capped.truncated == (sample.unique_count() > 2));
    std::vector<std::vector<std::size_t>> expected;
    std::vector<Rational> expected_weights;
    for (std::size_t s = 0; s < full.sets.size(); ++s)
      if (full.sets[s].size() <= 2) {
        expected.push_back(full.sets[s]);
        expected_weights.push_back(full.weights[s]);
      }
    CHECK(capped.sets == expected);
    CHECK(capped.weights == expected_weights);

    auto uncapped = enumerate_ufg(sample, sample.unique_count());
    CHECK_FALSE(uncapped.truncated);
    CHECK(uncapped.sets == full.sets);
  }
}

TEST_CASE("no singleton ever appears in a family") {
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 30; ++iter) {
    auto sample = random_small_sample(rng);
    for (const auto& set : enumerate_ufg(sample).sets) CHECK(set.size() >= 2);
  }
}

TEST_CASE("fast family equals the brute-force family") {
  std::mt19937_64 rng(60601);
  for (int iter = 0; iter < 25; ++iter) {
    auto sample = random_small_sample(rng);
    auto fast = enumerate_ufg(sample);
    auto brute = brute_force_ufg(sample);
    CHECK(fast.sets == brute.sets);
    CHECK(fast.weights == brute.weights);
    CHECK(fast.normalizer == brute.normalizer);
    CHECK(fast.truncated == brute.truncated);
  }
}

TEST_CASE("every family set is minimal") {
  // Dropping any member must shed at least one poset of the closure;
  // otherwise the remaining members would cover it, violating
  // union-freeness.
  std::mt19937_64 rng(88);
  for (int iter = 0; iter < 15; ++iter) {
    auto sample = random_small_sample(rng);
    auto family = enumerate_ufg(sample);
    for (const auto& set : family.sets) {
      std::vector<Poset> members;
      for (std::size_t k : set) members.push_back(sample.unique_posets()[k]);
      auto full = materialize(bounds(members));
      for (std::size_t drop = 0; drop < members.size(); ++drop) {
        std::vector<Poset> rest;
        for (std::size_t k = 0; k < members.size(); ++k)
          if (k != drop) rest.push_back(members[k]);
        const auto remaining = bounds(rest);
        const bool lost_one = std::any_of(full.begin(), full.end(), [&](const Poset& q) {
          return !contains(remaining, q);
        });
        CHECK(lost_one);
      }
    }
  }
}

TEST_CASE("oversized instances are rejected by the brute-force path") {
  std::mt19937_64 rng(5);
  auto u = small_universe(5);
  std::vector<Poset> observed;
  std::vector<std::string> names;
  for (int k = 0; k < 2; ++k) {
    observed.push_back(random_poset(u, rng));
    names.push_back("f" + std::to_string(k));
  }
  observed.push_back(poset_from_pairs(u, {{0, 1}}));
  names.push_back("fx");
  auto sample = PosetSample::from_observations(std::move(observed), std::move(names));
  CHECK_THROWS_AS(brute_force_ufg(sample), InstanceTooLarge);
}
