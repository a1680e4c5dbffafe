#pragma once

// Closed-form cardinalities and ranks. All arithmetic is exact.

#include <cstdint>

#include "dimon/kind.hpp"

namespace dimon {

// Largest n for which every cardinality fits in 64 bits.
inline constexpr int kMaxFormulaDegree = 58;

// |ODI_n|, |MDI_n|, |OPDI_n| for 3 <= n <= kMaxFormulaDegree.
std::uint64_t card(MonoidKind kind, int n);

// Number of maps of rank <= 1: n^2 + 1.
std::uint64_t card_rank_le1(int n);

// Per-rotation counts of rank >= 2 restrictions of g^k and hg^k.
struct ProofCounts {
  // order-preserving restrictions of hg^k: k(n-k)
  std::uint64_t op_restr_hgk = 0;
  // order-preserving restrictions of g^k: sum_{i>=2} C(n-k,i) + C(k,i)
  std::uint64_t op_restr_gk = 0;
  // orientation-preserving restrictions of hg^k: k(n-k) + C(k,2) + C(n-k,2)
  std::uint64_t opdi_restr_hgk = 0;
};

ProofCounts proof_counts(int n, int k);

// Minimum generating-set size. n = 3 gives 3 / 3 / 2; n >= 4 gives
// n + 2m, 2 + 3m, 2 + m with m = floor((n-1)/2).
int rank_formula(MonoidKind kind, int n);

}  // namespace dimon
