#include "doctest.h"
#include "dimon/dihedral.hpp"
#include "dimon/error.hpp"
#include "dimon/formulas.hpp"
#include "dimon/reference.hpp"

using namespace dimon;

TEST_CASE("card examples") {
  CHECK(card(MonoidKind::ODI, 4) == 44);
  CHECK(card(MonoidKind::ODI, 3) == 20);
  CHECK(card(MonoidKind::MDI, 3) == 30);
  CHECK(card(MonoidKind::OPDI, 3) == 31);
  CHECK(card(MonoidKind::OPDI, 5) == 206);
  CHECK_THROWS_AS(card(MonoidKind::ODI, 2), DomainError);
  CHECK_THROWS_AS(card(MonoidKind::DI, 5), DomainError);
  CHECK_THROWS_AS(card(MonoidKind::ODI, kMaxFormulaDegree + 1), DomainError);
  CHECK_NOTHROW(card(MonoidKind::OPDI, kMaxFormulaDegree));
}

TEST_CASE("card matches enumeration") {
  for (int n = 3; n <= 9; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      REQUIRE(card(kind, n) == reference::enumerate_monoid(kind, n).size());
    }
  }
}

TEST_CASE("MDI identity") {
  for (int n = 3; n <= kMaxFormulaDegree; ++n) {
    auto const u = static_cast<std::uint64_t>(n);
    REQUIRE(card(MonoidKind::MDI, n) == 2 * card(MonoidKind::ODI, n) - u * u - 1);
  }
}

TEST_CASE("card_rank_le1") {
  CHECK(card_rank_le1(4) == 17);
  CHECK(card_rank_le1(3) == 10);
  for (int n = 3; n <= 8; ++n) {
    auto const els = reference::enumerate_monoid(MonoidKind::ODI, n);
    auto const low = std::count_if(els.begin(), els.end(),
                                   [](auto const& a) { return a.rank() <= 1; });
    CHECK(static_cast<std::uint64_t>(low) == card_rank_le1(n));
  }
}

TEST_CASE("proof_counts") {
  CHECK(proof_counts(4, 1).op_restr_hgk == 3);
  CHECK(proof_counts(7, 0).op_restr_hgk == 0);
  CHECK_THROWS_AS(proof_counts(4, 4), DomainError);
  for (int n = 3; n <= 8; ++n) {
    for (int k = 0; k < n; ++k) {
      ProofCounts scan;
      for (bool reflect : {false, true}) {
        DihedralElement const s(n, reflect, k);
        for (std::uint64_t mask = 0; mask < (1U << n); ++mask) {
          PointSet const A = PointSet::from_mask(mask << 1);
          if (A.size() < 2) continue;
          PartialPerm const a = to_partial_perm(s, A);
          if (reflect) {
            if (reference::is_order_preserving(a)) ++scan.op_restr_hgk;
            if (reference::is_orientation_preserving(a)) ++scan.opdi_restr_hgk;
          } else if (reference::is_order_preserving(a)) {
            ++scan.op_restr_gk;
          }
        }
      }
      auto const c = proof_counts(n, k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(c.op_restr_hgk == scan.op_restr_hgk);
      CHECK(c.op_restr_gk == scan.op_restr_gk);
      CHECK(c.opdi_restr_hgk == scan.opdi_restr_hgk);
    }
  }
}

TEST_CASE("proof_counts sums") {
  for (int n = 3; n <= 30; ++n) {
    auto const u = static_cast<std::uint64_t>(n);
    std::uint64_t hgk = 0;
    std::uint64_t gk = 0;
    for (int k = 0; k < n; ++k) {
      hgk += proof_counts(n, k).op_restr_hgk;
      gk += proof_counts(n, k).op_restr_gk;
    }
    CHECK(hgk == (u + 1) * u * (u - 1) / 6);
    CHECK(gk == 3 * (std::uint64_t{1} << n) - u * u - 2 * u - 3);
  }
}

TEST_CASE("rank_formula") {
  CHECK(rank_formula(MonoidKind::ODI, 4) == 6);
  CHECK(rank_formula(MonoidKind::OPDI, 3) == 2);
  CHECK(rank_formula(MonoidKind::ODI, 3) == 3);
  CHECK(rank_formula(MonoidKind::MDI, 3) == 3);
  CHECK(rank_formula(MonoidKind::MDI, 5) == 8);
  CHECK(rank_formula(MonoidKind::OPDI, 5) == 4);
  CHECK_THROWS_AS(rank_formula(MonoidKind::ODI, 2), DomainError);
  CHECK_THROWS_AS(rank_formula(MonoidKind::DI, 5), DomainError);
}
