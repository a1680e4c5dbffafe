#pragma once

// Brute-force reference implementations. Nothing here uses the closure
// engine, the dihedral normal form or the fast criteria: distances come from
// breadth-first search on C_n, the group from closing {g, h} as explicit
// permutations, and predicates from their pairwise definitions.

#include <functional>
#include <vector>

#include "dimon/kind.hpp"
#include "dimon/partial_perm.hpp"

namespace dimon::reference {

// Shortest-path distance on C_n by breadth-first search.
int bfs_distance(int n, int x, int y);

bool is_isometry(PartialPerm const& a);
bool is_order_preserving(PartialPerm const& a);
bool is_order_reversing(PartialPerm const& a);
bool is_orientation_preserving(PartialPerm const& a);
bool is_orientation_reversing(PartialPerm const& a);
bool is_member(PartialPerm const& a, MonoidKind kind);

// D_2n as explicit images (index 0 unused), generated from g and h.
std::vector<std::vector<int>> dihedral_permutations(int n);

// Number of dihedral permutations that restrict to a.
int count_extensions(PartialPerm const& a);

// Distinct restrictions of D_2n lying in the given monoid, sorted.
std::vector<PartialPerm> enumerate_monoid(MonoidKind kind, int n);

// All of I_n, sorted.
std::vector<PartialPerm> all_partial_perms(int n);

// Whether some bijection A -> B satisfying `accept` exists; tries all |B|!
// orderings of B.
bool exists_bijection(int n, PointSet A, PointSet B,
                      std::function<bool(PartialPerm const&)> const& accept);

}  // namespace dimon::reference
