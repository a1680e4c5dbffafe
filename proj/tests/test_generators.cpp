#include "doctest.h"
#include "dimon/dihedral.hpp"
#include "dimon/error.hpp"
#include "dimon/factorize.hpp"
#include "dimon/formulas.hpp"
#include "dimon/generators.hpp"
#include "dimon/monoid.hpp"
#include "dimon/reference.hpp"
#include "dimon/verify.hpp"

using namespace dimon;

TEST_CASE("generator values") {
  CHECK(generator_value(gen_x(), 5) == PartialPerm(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}}));
  CHECK(generator_value(gen_y(), 5) == inverse(generator_value(gen_x(), 5)));
  CHECK(generator_value(gen_xi(1), 5) == PartialPerm(5, {{1, 1}, {2, 5}}));
  CHECK(generator_value(gen_xi(2), 5) == PartialPerm(5, {{1, 1}, {3, 4}}));
  CHECK(generator_value(gen_yi(2), 7) == inverse(generator_value(gen_xi(2), 7)));
  CHECK(generator_value(gen_e(3), 4) == PartialPerm::partial_identity_complement(4, 3));
  CHECK(generator_value(gen_g(), 4) == to_permutation(DihedralElement::g(4)));
  CHECK(generator_value(gen_h(), 4) == to_permutation(DihedralElement::h(4)));
  CHECK_THROWS_AS(generator_value(gen_xi(3), 6), DomainError);
  CHECK_THROWS_AS(generator_value(gen_xi(0), 6), DomainError);
  CHECK_THROWS_AS(generator_value(gen_e(7), 6), DomainError);
}

TEST_CASE("generator names and words round-trip") {
  for (auto name : {gen_g(), gen_h(), gen_x(), gen_y(), gen_e(3), gen_xi(1),
                    gen_yi(12)}) {
    CHECK(parse_gen_name(to_string(name)) == name);
  }
  Word const w{gen_y(), gen_xi(1), gen_x(), gen_x()};
  CHECK(to_string(w) == "y x1 x x");
  CHECK(parse_word("y x1 x x") == w);
  CHECK(to_string(Word{}) == "ε");
  CHECK(parse_word("ε").empty());
  for (auto bad : {"z", "e", "x0", "e03", "g1", "y  x", " y", "y ", "x-1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_word(bad), ParseError);
  }
  CHECK(evaluate(Word{}, 4) == PartialPerm::identity(4));
  CHECK(evaluate(Word{gen_y(), gen_x()}, 6) == PartialPerm::partial_identity_complement(6, 1));
  CHECK(evaluate(Word{gen_x(), gen_y()}, 6) == PartialPerm::partial_identity_complement(6, 6));
}

TEST_CASE("standard generating sets") {
  for (int n = 3; n <= 12; ++n) {
    int const m = (n - 1) / 2;
    CHECK(standard_generators(MonoidKind::ODI, n).size() ==
          static_cast<std::size_t>(n + 2 * m));
    CHECK(standard_generators(MonoidKind::MDI, n).size() ==
          static_cast<std::size_t>(2 + 3 * m));
    CHECK(standard_generators(MonoidKind::OPDI, n).size() ==
          static_cast<std::size_t>(2 + m));
    for (MonoidKind kind : kStudiedKinds) {
      auto const set = standard_generators(kind, n);
      if (n >= 4) CHECK(set.size() == static_cast<std::size_t>(rank_formula(kind, n)));
      for (auto const& g : set.generators) {
        CHECK(g.value == generator_value(g.name, n));
        CHECK(reference::is_member(g.value, kind));
        CHECK(set.contains(g.name));
      }
    }
  }
  CHECK(standard_generators(MonoidKind::OPDI, 5).size() == 4);
  CHECK_THROWS_AS(standard_generators(MonoidKind::ODI, 2), DomainError);
}

TEST_CASE("standard sets generate") {
  for (int n = 3; n <= 8; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      auto const gens = standard_generators(kind, n).values();
      CHECK(close(n, gens).size() == card(kind, n));
    }
  }
}

TEST_CASE("factorize examples") {
  for (int n = 3; n <= 8; ++n) {
    CHECK(factorize(PartialPerm::partial_identity_complement(n, 1), MonoidKind::ODI) ==
          Word{gen_y(), gen_x()});
    CHECK(factorize(PartialPerm::identity(n), MonoidKind::ODI).empty());
    CHECK(factorize(PartialPerm::identity(n), MonoidKind::OPDI).empty());
    auto const empty_word = factorize(PartialPerm::empty(n), MonoidKind::ODI);
    CHECK(evaluate(empty_word, n) == PartialPerm::empty(n));
  }
  CHECK_THROWS_AS(factorize(PartialPerm(5, {{1, 2}, {2, 1}}), MonoidKind::ODI),
                  NotMemberError);
  CHECK_THROWS_AS(factorize(PartialPerm::identity(5), MonoidKind::DI), DomainError);
}

TEST_CASE("factorize round-trips on every member") {
  for (int n = 3; n <= 7; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      auto const set = standard_generators(kind, n);
      for (auto const& a : reference::enumerate_monoid(kind, n)) {
        Word const w = factorize(a, kind);
        REQUIRE(evaluate(w, n) == a);
        for (auto name : w) REQUIRE(set.contains(name));
        REQUIRE(parse_word(to_string(w)) == w);
      }
    }
  }
}

TEST_CASE("factorize word length stays linear") {
  for (int n = 8; n <= 12; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      std::size_t longest = 0;
      for (auto const& a : reference::enumerate_monoid(kind, n)) {
        Word const w = factorize(a, kind);
        REQUIRE(evaluate(w, n) == a);
        longest = std::max(longest, w.size());
      }
      CAPTURE(n);
      CHECK(longest <= static_cast<std::size_t>(kWordLengthFactor * n));
    }
  }
}

TEST_CASE("reflection restriction words") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      DihedralElement const s(n, true, k);
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          PointSet A;
          A.insert(i);
          A.insert(j);
          PartialPerm const a = to_partial_perm(s, A);
          if (!reference::is_order_preserving(a)) continue;
          REQUIRE(evaluate(reflection_restriction_word(n, k, i, j), n) == a);
        }
      }
    }
  }
}
