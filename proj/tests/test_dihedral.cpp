#include <set>

#include "doctest.h"
#include "dimon/cycle_geometry.hpp"
#include "dimon/dihedral.hpp"
#include "dimon/error.hpp"
#include "dimon/reference.hpp"

using namespace dimon;

TEST_CASE("point action") {
  int const n = 7;
  auto const g = DihedralElement::g(n);
  auto const h = DihedralElement::h(n);
  for (int i = 1; i <= n; ++i) {
    CHECK(g.apply(i) == (i < n ? i + 1 : 1));
    CHECK(h.apply(i) == n - i + 1);
  }
  for (int k = 0; k < n; ++k) {
    CHECK(DihedralElement(n, true, k).apply(k + 1) == n);
  }
  CHECK_THROWS_AS((void)g.apply(0), DomainError);
  CHECK_THROWS_AS(DihedralElement(2, false, 0), DomainError);
  CHECK_THROWS_AS(DihedralElement(5, false, 5), DomainError);
}

TEST_CASE("group arithmetic") {
  int const n = 6;
  auto const g = DihedralElement::g(n);
  auto const h = DihedralElement::h(n);
  CHECK(h * g == power(g, n - 1) * h);
  CHECK(h * g == DihedralElement(n, true, 1));
  CHECK(power(g, n) == DihedralElement::identity(n));
  CHECK(power(g, -1) == power(g, n - 1));
  CHECK(invert(h) == h);
  CHECK(h * h == DihedralElement::identity(n));
  for (auto const& s : dihedral_elements(n)) {
    CHECK(s * invert(s) == DihedralElement::identity(n));
    if (s.reflects()) CHECK(s * s == DihedralElement::identity(n));
  }
  CHECK_THROWS_AS(g * DihedralElement::g(5), AmbientMismatchError);
}

TEST_CASE("the action is a right action") {
  for (int n = 3; n <= 8; ++n) {
    auto const all = dihedral_elements(n);
    REQUIRE(all.size() == static_cast<std::size_t>(2 * n));
    REQUIRE(std::set<DihedralElement>(all.begin(), all.end()).size() == all.size());
    std::size_t rotations = 0;
    for (auto const& s : all) {
      if (!s.reflects()) ++rotations;
      for (auto const& t : all) {
        for (int i = 1; i <= n; ++i) {
          REQUIRE((s * t).apply(i) == t.apply(s.apply(i)));
        }
        if (!s.reflects() && !t.reflects()) REQUIRE(!(s * t).reflects());
      }
    }
    CHECK(rotations == static_cast<std::size_t>(n));
    // Same permutations as the independent closure of {g, h}.
    std::set<std::vector<int>> ours;
    for (auto const& s : all) {
      std::vector<int> p(n + 1, 0);
      for (int i = 1; i <= n; ++i) p[i] = s.apply(i);
      ours.insert(p);
    }
    auto const ref = reference::dihedral_permutations(n);
    CHECK(ours == std::set<std::vector<int>>(ref.begin(), ref.end()));
  }
}

TEST_CASE("text form") {
  for (auto const& s : dihedral_elements(5)) {
    CHECK(parse_dihedral(5, to_string(s)) == s);
  }
  CHECK(to_string(DihedralElement::identity(4)) == "g^0");
  CHECK(to_string(DihedralElement(4, true, 3)) == "h*g^3");
  for (auto text : {"g", "g^5", "h", "h*g^", "g^-1", "hg^1", "g^01", "g^1 "}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_dihedral(5, text), ParseError);
  }
}

TEST_CASE("restriction to point sets") {
  PointSet s13;
  s13.insert(1);
  s13.insert(3);
  PointSet s24;
  s24.insert(2);
  s24.insert(4);
  CHECK(to_partial_perm(DihedralElement(4, true, 1), s13) ==
        PartialPerm::identity_on(4, s13));
  CHECK(to_partial_perm(DihedralElement(4, false, 3), s24) ==
        PartialPerm(4, {{2, 1}, {4, 3}}));
  CHECK(to_partial_perm(DihedralElement::g(4), PointSet{}) == PartialPerm::empty(4));
}

TEST_CASE("extensions") {
  PointSet s13;
  s13.insert(1);
  s13.insert(3);
  auto const ext = extensions(PartialPerm::identity_on(4, s13));
  CHECK(ext == std::vector<DihedralElement>{DihedralElement::identity(4),
                                            DihedralElement(4, true, 1)});
  CHECK(extensions(PartialPerm::empty(6)).size() == 12);
  PartialPerm const a3(5, {{1, 3}, {2, 4}, {3, 5}, {5, 2}});
  CHECK(extensions(a3) == std::vector<DihedralElement>{DihedralElement(5, false, 2)});
  CHECK(extensions(PartialPerm(5, {{1, 1}, {2, 3}})).empty());
}

TEST_CASE("extension counts match brute force and the rank case split") {
  for (int n = 3; n <= 7; ++n) {
    for (auto const& a : reference::enumerate_monoid(MonoidKind::DI, n)) {
      int const count = static_cast<int>(extensions(a).size());
      REQUIRE(count == reference::count_extensions(a));
      if (a.rank() == 0) {
        REQUIRE(count == 2 * n);
      } else if (a.rank() == 1 || is_in_B2(a)) {
        REQUIRE(count == 2);
      } else {
        REQUIRE(count == 1);
      }
    }
  }
}

TEST_CASE("B2") {
  CHECK(is_in_B2(PartialPerm(4, {{1, 2}, {3, 4}})));
  CHECK_FALSE(is_in_B2(PartialPerm(4, {{1, 2}, {2, 3}})));
  CHECK_FALSE(is_in_B2(PartialPerm(5, {{1, 2}, {3, 4}})));
  CHECK(b2_count(4) == 8);
  CHECK(b2_count(5) == 0);
  for (int n = 4; n <= 8; ++n) {
    long long scan = 0;
    for (auto const& a : reference::enumerate_monoid(MonoidKind::DI, n)) {
      if (is_in_B2(a)) ++scan;
    }
    CHECK(scan == b2_count(n));
  }
}

TEST_CASE("classify examples") {
  PartialPerm const a1(5, {{2, 1}, {4, 3}, {5, 4}});
  PartialPerm const a2(5, {{1, 3}, {2, 2}, {3, 1}});
  PartialPerm const a3(5, {{1, 3}, {2, 4}, {3, 5}, {5, 2}});
  auto const r1 = classify(a1);
  CHECK((r1.in_DI && r1.in_ODI && r1.in_MDI && r1.in_OPDI));
  auto const r2 = classify(a2);
  CHECK(r2.in_MDI);
  CHECK_FALSE(r2.in_ODI);
  auto const r3 = classify(a3);
  CHECK(r3.in_OPDI);
  CHECK_FALSE(r3.in_ODI);
}

TEST_CASE("classify agrees with the isometry test on all of I_6") {
  for (auto const& a : reference::all_partial_perms(6)) {
    auto const r = classify(a);
    REQUIRE(r.in_DI == is_partial_isometry(a));
    REQUIRE(r.in_DI == !r.extensions.empty());
    REQUIRE(in_dihedral_monoid(a) == r.in_DI);
    if (r.in_ODI) REQUIRE((r.in_MDI && r.in_OPDI));
    if (r.in_MDI || r.in_OPDI) REQUIRE(r.in_DI);
    for (MonoidKind kind : {MonoidKind::DI, MonoidKind::ODI, MonoidKind::MDI,
                            MonoidKind::OPDI}) {
      REQUIRE(r.in(kind) == reference::is_member(a, kind));
      REQUIRE(is_member(a, kind) == r.in(kind));
    }
  }
}
