#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "geometry.hpp"
#include "subset_geometry.hpp"

using namespace radon;

TEST_CASE("enumeration is colex with basepoint first") {
  SubsetLevelIndex idx(4, 2);
  CHECK(idx.size() == 6);
  CHECK(idx.point(0).str() == "[1,2]");
  CHECK(idx.point(1).str() == "[1,3]");
  CHECK(idx.point(2).str() == "[2,3]");
  CHECK(idx.point(3).str() == "[1,4]");
  CHECK(idx.point(5).str() == "[3,4]");
  for (std::size_t r = 0; r < idx.size(); ++r) CHECK(idx.rank(idx.point(r)) == r);

  SubsetLevelIndex empty(3, 0);
  CHECK(empty.size() == 1);
  CHECK(empty.point(0).str() == "[]");
  SubsetLevelIndex full(5, 5);
  CHECK(full.size() == 1);
  CHECK(full.point(0).str() == "[1,2,3,4,5]");

  CHECK_THROWS_AS(SubsetLevelIndex(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(SubsetLevelIndex(21, 1), std::invalid_argument);
}

TEST_CASE("distance and pseudo-distance") {
  auto x12 = Subset::of(4, {1, 2});
  auto x13 = Subset::of(4, {1, 3});
  auto x34 = Subset::of(4, {3, 4});
  CHECK(distance(x12, x13) == 1);
  CHECK(distance(x12, x12) == 0);
  CHECK(distance(x12, x34) == 2);
  CHECK_THROWS_AS(distance(x12, Subset::of(4, {1})), std::invalid_argument);

  CHECK(pseudo_distance(Subset::of(4, {1}), Subset::of(4, {1, 2, 3})) == 0);
  CHECK(pseudo_distance(Subset::of(4, {4}), Subset::of(4, {1, 2, 3})) == 1);
  CHECK(pseudo_distance(Subset::of(4, {1, 4}), Subset::of(4, {1, 2})) == 1);
}

TEST_CASE("complement") {
  CHECK(Subset::of(4, {1}).complement().str() == "[2,3,4]");
  CHECK(Subset::empty(4).complement().str() == "[1,2,3,4]");
  // Prop 3 item 1 on an example
  auto y = Subset::of(4, {1, 4});
  auto x0 = Subset::of(4, {1, 2});
  CHECK(pseudo_distance(y, x0) == 1);
  CHECK(pseudo_distance(x0.complement(), y.complement()) == 1);
}

TEST_CASE("complement is a distance-preserving bijection, n<=6") {
  for (int n = 2; n <= 6; ++n)
    for (int s = 0; s <= n; ++s) {
      SubsetLevelIndex idx(n, s);
      std::set<std::uint32_t> images;
      for (std::size_t a = 0; a < idx.size(); ++a) {
        images.insert(idx.point(a).complement().bits());
        CHECK(idx.point(a).complement().complement() == idx.point(a));
      }
      CHECK(images.size() == idx.size());
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
          CHECK(distance(idx.point(a), idx.point(b)) ==
                distance(idx.point(a).complement(), idx.point(b).complement()));
    }
}

TEST_CASE("triangle inequality, n<=6 exhaustive") {
  for (int n = 2; n <= 6; ++n)
    for (int s = 0; s <= n; ++s) {
      SubsetLevelIndex idx(n, s);
      for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b)
          for (std::size_t c = 0; c < idx.size(); ++c)
            CHECK(distance(idx.point(a), idx.point(c)) <=
                  distance(idx.point(a), idx.point(b)) + distance(idx.point(b), idx.point(c)));
    }
}

TEST_CASE("permutation action") {
  auto id = Permutation::identity(3);
  auto x = Subset::of(3, {1, 3});
  CHECK(id.act(x) == x);
  Permutation swap12({2, 1, 3});
  CHECK(swap12.act(x).str() == "[2,3]");
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);

  // action preserves distance, 100 random (g, X, X') at n = 6
  auto rng = seeded_rng("test/subset-action");
  SubsetLevelIndex lvl3(6, 3);
  for (int it = 0; it < 100; ++it) {
    Permutation g = Permutation::random(6, rng);
    std::size_t a = rng() % lvl3.size(), b = rng() % lvl3.size();
    CHECK(distance(g.act(lvl3.point(a)), g.act(lvl3.point(b))) ==
          distance(lvl3.point(a), lvl3.point(b)));
  }
  // containment preservation: random g, exhaustive pairs, n <= 6
  for (int n = 3; n <= 6; ++n) {
    SubsetLevelIndex inner(n, n / 2);
    SubsetLevelIndex outer(n, n / 2 + 1);
    for (int it = 0; it < 5; ++it) {
      Permutation g = Permutation::random(n, rng);
      for (std::size_t z = 0; z < inner.size(); ++z)
        for (std::size_t a = 0; a < outer.size(); ++a)
          CHECK(inner.point(z).subset_of(outer.point(a)) ==
                g.act(inner.point(z)).subset_of(g.act(outer.point(a))));
    }
  }
}

TEST_CASE("orbit sizes by distance") {
  auto o42 = orbit_sizes(4, 2);
  REQUIRE(o42.size() == 3);
  CHECK(o42[0] == std::pair<int, BigInt>(0, BigInt(1)));
  CHECK(o42[1] == std::pair<int, BigInt>(1, BigInt(4)));
  CHECK(o42[2] == std::pair<int, BigInt>(2, BigInt(1)));

  auto o31 = orbit_sizes(3, 1);
  REQUIRE(o31.size() == 2);
  CHECK(o31[0].second == 1);
  CHECK(o31[1].second == 2);

  auto top = orbit_sizes(5, 5);
  REQUIRE(top.size() == 1);
  CHECK(top[0].second == 1);

  // distance classes number min(s, n-s)+1
  for (int n = 2; n <= 8; ++n)
    for (int s = 0; s <= n; ++s)
      CHECK(orbit_sizes(n, s).size() == static_cast<std::size_t>(std::min(s, n - s) + 1));
}
