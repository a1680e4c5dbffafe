#pragma once

// Constructive factorization of monoid elements over the standard generating
// sets.

#include "dimon/generators.hpp"
#include "dimon/kind.hpp"
#include "dimon/partial_perm.hpp"

namespace dimon {

// A word over standard_generators(kind, n) evaluating to a. kind is ODI, MDI
// or OPDI. Throws NotMemberError if a is not in the monoid.
Word factorize(PartialPerm const& a, MonoidKind kind);

// hg^k restricted to {i, j}, 1 <= i <= k < j <= n, as a word over the ODI
// generators. Covers the antipodal case j - i = n/2 as well.
Word reflection_restriction_word(int n, int k, int i, int j);

}  // namespace dimon
