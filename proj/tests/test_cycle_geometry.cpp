#include "doctest.h"
#include "dimon/cycle_geometry.hpp"
#include "dimon/dihedral.hpp"
#include "dimon/error.hpp"
#include "dimon/reference.hpp"

using namespace dimon;

namespace {

PointSet set_of(std::initializer_list<int> points) {
  PointSet s;
  for (int p : points) s.insert(p);
  return s;
}

}  // namespace

TEST_CASE("distance") {
  CHECK(distance(5, 1, 4) == 2);
  CHECK(distance(6, 1, 4) == 3);
  CHECK(distance(7, 3, 3) == 0);
  CHECK_THROWS_AS(distance(5, 0, 1), DomainError);
  CHECK_THROWS_AS(distance(5, 1, 6), DomainError);
  CHECK_THROWS_AS(distance(2, 1, 2), DomainError);
}

TEST_CASE("distance is the graph metric on C_n") {
  for (int n = 3; n <= 8; ++n) {
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        int const d = distance(n, x, y);
        REQUIRE(d == reference::bfs_distance(n, x, y));
        REQUIRE(d == distance(n, y, x));
        REQUIRE(d <= n / 2);
        if (2 * d == n) REQUIRE(n % 2 == 0);
        for (int z = 1; z <= n; ++z) {
          REQUIRE(d <= distance(n, x, z) + distance(n, z, y));
        }
      }
    }
  }
}

TEST_CASE("distance_sequence") {
  CHECK(distance_sequence(5, set_of({1, 2, 4})).entries() ==
        std::vector<int>{1, 2, 2});
  CHECK(distance_sequence(4, set_of({1, 3})).entries() == std::vector<int>{2, 2});
  CHECK(to_string(distance_sequence(5, set_of({1, 2, 4}))) == "(1,2,2)");
  CHECK_THROWS_AS(distance_sequence(5, set_of({3})), UndefinedSequenceError);
  CHECK_THROWS_AS(distance_sequence(5, PointSet{}), UndefinedSequenceError);
  CHECK_THROWS_AS(distance_sequence(5, set_of({1, 6})), DomainError);
}

TEST_CASE("delta") {
  CHECK(delta(5, set_of({1, 2, 4}), set_of({2, 3, 5})) ==
        PartialPerm(5, {{1, 2}, {2, 3}, {4, 5}}));
  auto const A = set_of({2, 3, 5});
  CHECK(delta(5, A, A) == PartialPerm::identity_on(5, A));
  CHECK(delta(4, set_of({1, 2}), set_of({1, 4})) == PartialPerm(4, {{1, 1}, {2, 4}}));
  CHECK(delta(4, set_of({1, 2}), set_of({1, 4})) ==
        to_partial_perm(DihedralElement(4, true, 1), set_of({1, 2})));
  CHECK_THROWS_AS(delta(5, set_of({1, 2}), set_of({1})), SizeMismatchError);
}

TEST_CASE("is_partial_isometry") {
  CHECK(is_partial_isometry(PartialPerm(5, {{2, 1}, {4, 3}, {5, 4}})));
  CHECK(is_partial_isometry(PartialPerm::identity_on(6, set_of({1, 4, 5}))));
  CHECK_FALSE(is_partial_isometry(PartialPerm(5, {{1, 1}, {2, 3}})));
  CHECK(is_partial_isometry(PartialPerm(5, {{1, 4}})));
  CHECK(is_partial_isometry(PartialPerm::empty(5)));
}

TEST_CASE("fast isometry test") {
  PartialPerm const a3(5, {{1, 3}, {2, 4}, {3, 5}, {5, 2}});
  CHECK(is_partial_isometry_oriented_fast(a3));
  CHECK(is_partial_isometry(a3));
  // Exhaustive at n = 6 over oriented maps of rank >= 2.
  std::size_t oriented = 0;
  for (auto const& a : reference::all_partial_perms(6)) {
    if (a.rank() < 2 || !classify_order(a).oriented()) continue;
    ++oriented;
    REQUIRE(is_partial_isometry_oriented_fast(a) == is_partial_isometry(a));
    if (a.rank() == 2) {
      REQUIRE(is_partial_isometry_oriented_fast(a) == reference::is_isometry(a));
    }
  }
  CHECK(oriented > 0);
}

TEST_CASE("distance sequences detect isometric bijections") {
  for (int n = 4; n <= 6; ++n) {
    DihedralElement const h = DihedralElement::h(n);
    for (std::uint64_t ma = 0; ma < (1U << n); ++ma) {
      PointSet const A = PointSet::from_mask(ma << 1);
      if (A.size() < 2) continue;
      for (std::uint64_t mb = 0; mb < (1U << n); ++mb) {
        PointSet const B = PointSet::from_mask(mb << 1);
        if (B.size() != A.size()) continue;
        bool const same = distance_sequence(n, A) == distance_sequence(n, B);
        REQUIRE(same == is_partial_isometry(delta(n, A, B)));
        bool const reflected =
            distance_sequence(n, A) == distance_sequence(n, h.apply(B));
        REQUIRE(reflected ==
                reference::exists_bijection(n, A, B, [](auto const& a) {
                  return reference::is_order_reversing(a) &&
                         reference::is_isometry(a);
                }));
      }
    }
  }
}
