#pragma once

// Rank certification: an explicit generating set gives the upper bound, the
// gap / image / permutation requirements every generating set must meet give
// the lower bound.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dimon/kind.hpp"
#include "dimon/monoid.hpp"
#include "dimon/partial_perm.hpp"

namespace dimon {

struct Requirement {
  std::string description;
  bool witnessed = false;
};

struct LowerBoundCertificate {
  MonoidKind kind = MonoidKind::ODI;
  int n = 0;
  std::size_t generator_count = 0;
  // Rank-2 generators with prescribed domain gaps.
  std::vector<Requirement> rank2;
  // Rank n-1 generators with prescribed images (MDI: one per h-orbit).
  std::vector<Requirement> corank1;
  // Permutations other than the identity (MDI: h itself).
  std::vector<Requirement> permutations;
  // Sum of all requirement counts: each must be met by a distinct generator.
  int implied_lower_bound = 0;
  // Number of requirements the given set actually meets.
  int witnessed = 0;
  int formula = 0;
  // Raised when the h-orbit counting alone would exceed the set size.
  bool orbit_bound_exceeds_set = false;
  bool certified = false;
};

// Verifies that gens generate the monoid (closure size equals the formula and
// every generator is a member), then checks the requirements. n >= 4.
// Throws NotGeneratingError if gens do not generate.
LowerBoundCertificate lower_bound_certificate(MonoidKind kind, int n,
                                              std::span<const PartialPerm> gens,
                                              unsigned workers = 1);

// Size of a smallest generating set, by exhaustive search over subsets of
// non-identity elements in increasing size. Only practical for tiny monoids.
int minimal_generating_set_size(EnumeratedMonoid const& m,
                                std::size_t max_size = 6);

struct RankCertification {
  MonoidKind kind = MonoidKind::ODI;
  int n = 0;
  int formula = 0;
  int upper_bound = 0;  // size of a verified generating set
  int lower_bound = 0;
  std::string method;
  std::optional<LowerBoundCertificate> certificate;
  bool certified = false;
};

// n >= 4: standard generating set + lower-bound certificate.
// n == 3: standard set generates, minimum found by exhaustive search.
RankCertification certify_rank(MonoidKind kind, int n, unsigned workers = 1);

}  // namespace dimon
