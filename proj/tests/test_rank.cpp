#include <random>

#include "doctest.h"
#include "dimon/error.hpp"
#include "dimon/formulas.hpp"
#include "dimon/generators.hpp"
#include "dimon/monoid.hpp"
#include "dimon/rank.hpp"

using namespace dimon;

TEST_CASE("certificate examples") {
  auto const odi5 = standard_generators(MonoidKind::ODI, 5).values();
  auto const c = lower_bound_certificate(MonoidKind::ODI, 5, odi5);
  CHECK(c.implied_lower_bound == 9);
  CHECK(c.generator_count == 9);
  CHECK(c.certified);

  auto const mdi4 = standard_generators(MonoidKind::MDI, 4).values();
  auto const d = lower_bound_certificate(MonoidKind::MDI, 4, mdi4);
  CHECK(d.certified);
  CHECK(d.implied_lower_bound == 5);
  CHECK_FALSE(d.orbit_bound_exceeds_set);

  auto gens = standard_generators(MonoidKind::OPDI, 5).values();
  auto const full = close(5, gens).size();
  gens.erase(std::find(gens.begin(), gens.end(), generator_value(gen_xi(1), 5)));
  CHECK(close(5, gens).size() < full);
  CHECK_THROWS_AS(lower_bound_certificate(MonoidKind::OPDI, 5, gens),
                  NotGeneratingError);
  CHECK_THROWS_AS(lower_bound_certificate(MonoidKind::ODI, 3,
                                          standard_generators(MonoidKind::ODI, 3).values()),
                  DomainError);
}

TEST_CASE("non-members are rejected") {
  auto gens = standard_generators(MonoidKind::ODI, 5).values();
  gens.push_back(generator_value(gen_h(), 5));
  CHECK_THROWS_AS(lower_bound_certificate(MonoidKind::ODI, 5, gens), NotGeneratingError);
}

TEST_CASE("oversized generating sets meet every requirement but are not certified") {
  auto gens = standard_generators(MonoidKind::OPDI, 6).values();
  gens.push_back(generator_value(gen_g(), 6) * generator_value(gen_g(), 6));
  auto const c = lower_bound_certificate(MonoidKind::OPDI, 6, gens);
  CHECK(c.witnessed == c.implied_lower_bound);
  CHECK_FALSE(c.certified);
}

TEST_CASE("certify_rank") {
  for (int n = 3; n <= 9; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      auto const r = certify_rank(kind, n);
      CAPTURE(n);
      CHECK(r.certified);
      CHECK(r.upper_bound == rank_formula(kind, n));
      CHECK(r.lower_bound == rank_formula(kind, n));
      CHECK(r.certificate.has_value() == (n >= 4));
      if (r.certificate) CHECK_FALSE(r.certificate->orbit_bound_exceeds_set);
    }
  }
}

TEST_CASE("minimal generating set search at n = 3") {
  CHECK(minimal_generating_set_size(close(3, standard_generators(MonoidKind::ODI, 3).values())) == 3);
  CHECK(minimal_generating_set_size(close(3, standard_generators(MonoidKind::MDI, 3).values())) == 3);
  CHECK(minimal_generating_set_size(close(3, standard_generators(MonoidKind::OPDI, 3).values())) == 2);
}

TEST_CASE("removing any standard generator breaks generation") {
  for (int n = 4; n <= 7; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      auto const set = standard_generators(kind, n);
      for (std::size_t drop = 0; drop < set.size(); ++drop) {
        auto gens = set.values();
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(drop));
        REQUIRE(close(n, gens).size() < card(kind, n));
      }
    }
  }
}

// Random minimal generating sets: add random elements until the set
// generates, then drop elements in random order while it still does. Each
// result must meet every lower-bound requirement.
TEST_CASE("random generating sets meet the lower-bound requirements") {
  std::mt19937 rng(2024);
  for (int n = 4; n <= 6; ++n) {
    for (MonoidKind kind : kStudiedKinds) {
      auto const m = close(n, standard_generators(kind, n).values());
      auto const els = m.elements();
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<PartialPerm> gens;
        auto reached = close(n, gens);
        while (reached.size() != m.size()) {
          auto const& a = els[rng() % els.size()];
          if (reached.contains(a)) continue;
          gens.push_back(a);
          reached = close(n, gens);
        }
        std::shuffle(gens.begin(), gens.end(), rng);
        for (std::size_t i = gens.size(); i-- > 0;) {
          auto trimmed = gens;
          trimmed.erase(trimmed.begin() + static_cast<std::ptrdiff_t>(i));
          if (close(n, trimmed).size() == m.size()) gens = std::move(trimmed);
        }
        auto const c = lower_bound_certificate(kind, n, gens);
        CAPTURE(n);
        REQUIRE(c.witnessed == c.implied_lower_bound);
        REQUIRE(gens.size() >= static_cast<std::size_t>(rank_formula(kind, n)));
      }
    }
  }
}
