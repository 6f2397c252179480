#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace testsupport;

TEST_CASE("universe validation") {
  CHECK_THROWS_AS(Universe::make({}), EmptyInput);
  CHECK_THROWS_AS(Universe::make({"a", "a"}), ValidationError);
  CHECK_THROWS_AS(Universe::make({""}), ValidationError);
  std::vector<std::string> many;
  for (int k = 0; k < 65; ++k) many.push_back("o" + std::to_string(k));
  CHECK_THROWS_AS(Universe::make(many), UniverseTooLarge);
  auto u = Universe::make({"b", "a"});
  CHECK(u->size() == 2);
  CHECK(u->label(0) == "b");  // creation order is preserved, not sorted
  CHECK(u->find("a") == 1);
  CHECK_FALSE(u->find("c").has_value());
}

TEST_CASE("relation basics") {
  auto u = small_universe(4);
  auto r = Relation::from_pairs(u, {{0, 1}, {1, 2}});
  CHECK(r.contains(0, 1));
  CHECK_FALSE(r.contains(1, 0));
  CHECK(r.pair_count() == 2);
  CHECK_FALSE(r.empty());
  CHECK_THROWS_AS(Relation::from_pairs(u, {{0, 4}}), IndexOutOfRange);
  CHECK(Relation::from_pairs(u, {{2, 2}}).empty());  // diagonal is implicit, never stored

  auto closed = transitive_closure(r);
  CHECK(closed.contains(0, 2));
  CHECK(closed.pair_count() == 3);

  // A 2-cycle is transitively closed under implicit reflexivity: the
  // diagonal never materializes.
  auto cyc = transitive_closure(Relation::from_pairs(u, {{0, 1}, {1, 0}}));
  CHECK(cyc.pair_count() == 2);
  CHECK_FALSE(cyc.contains(0, 0));
}

TEST_CASE("poset validation") {
  auto u = small_universe(3);
  CHECK_THROWS_AS(poset_from_pairs(u, {{0, 1}, {1, 0}}), AntisymmetryViolation);
  CHECK_THROWS_AS(poset_from_pairs(u, {{0, 1}, {1, 2}}), TransitivityViolation);
  auto chain = poset_from_pairs(u, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chain.pair_count() == 3);
  CHECK(chain.contains(0, 2));
}

TEST_CASE("transitive reduction yields cover edges") {
  Example ex;
  auto edges = transitive_reduction(ex.p3);
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == Pair{0, 2});  // SGD < ADAM
  CHECK(edges[1] == Pair{1, 0});  // MOM < SGD
  CHECK(transitive_reduction(ex.pstar).size() == 2);
  auto antichain = poset_from_pairs(ex.universe, {});
  CHECK(transitive_reduction(antichain).empty());
}

TEST_CASE("reduction then closure is the identity on random posets") {
  std::mt19937_64 rng(7041);
  for (int iter = 0; iter < 100; ++iter) {
    auto u = small_universe(6);
    auto p = random_poset(u, rng);
    auto rebuilt = Poset::checked(
        transitive_closure(Relation::from_pairs(u, transitive_reduction(p))));
    CHECK(rebuilt == p);
  }
}

TEST_CASE("closure agrees with a naive fixed-point computation") {
  std::mt19937_64 rng(90210);
  auto u = small_universe(5);
  std::uniform_int_distribution<std::size_t> item(0, 4);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Pair> pairs;
    for (int e = 0; e < 6; ++e) {
      const std::size_t i = item(rng), j = item(rng);
      if (i != j) pairs.push_back({i, j});
    }
    auto closed = transitive_closure(Relation::from_pairs(u, pairs));

    std::set<std::pair<std::size_t, std::size_t>> naive;
    for (const Pair& p : pairs) naive.insert({p.below, p.above});
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& a : naive)
        for (const auto& b : naive)
          if (a.second == b.first && a.first != b.second && !naive.count({a.first, b.second})) {
            naive.insert({a.first, b.second});
            grew = true;
          }
    }
    std::set<std::pair<std::size_t, std::size_t>> got;
    for (const Pair& p : closed.pairs()) got.insert({p.below, p.above});
    CHECK(got == naive);
  }
}

TEST_CASE("intersection and union of posets") {
  Example ex;
  std::vector<Poset> both{ex.p1, ex.p3};
  auto meet = intersect_all(both);
  CHECK(meet.pair_count() == 0);
  auto join = union_all(both);
  CHECK(join.pair_count() == 4);
  CHECK(join.contains(0, 1));
  CHECK(join.contains(1, 0));  // unions may break antisymmetry

  std::vector<Poset> with_star{ex.p1, ex.pstar};
  CHECK(intersect_all(with_star) == ex.p1);
  CHECK(is_extension(ex.p1, ex.pstar));
  CHECK_FALSE(is_extension(ex.pstar, ex.p1));
}

TEST_CASE("poset ordering is deterministic") {
  Example ex;
  std::vector<Poset> v{ex.p3, ex.p1, ex.pstar, ex.p2};
  std::sort(v.begin(), v.end());
  for (std::size_t k = 1; k < v.size(); ++k) CHECK(v[k - 1] < v[k]);
}

TEST_CASE("universe mismatch is rejected") {
  Example ex;
  auto other = small_universe(3);
  auto q = poset_from_pairs(other, {{0, 1}});
  std::vector<Poset> mixed{ex.p1, q};
  CHECK_THROWS_AS(intersect_all(mixed), UniverseMismatch);
}
